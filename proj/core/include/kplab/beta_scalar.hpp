#pragma once

#include <map>
#include <string>

#include "kplab/rational.hpp"

namespace kplab {

/// Polynomial in the formal symbol beta with rational coefficients.
///
/// beta is kept algebraically independent of e^beta: the exact checks only
/// ever need it as a linear (at most quadratic) prefactor.
class BetaScalar {
 public:
  BetaScalar() = default;
  explicit BetaScalar(Rat c, int degree = 0, int cap = 2);

  static BetaScalar beta(int cap = 2) { return BetaScalar(Rat(1), 1, cap); }

  int cap() const { return cap_; }
  const std::map<int, Rat>& coefficients() const { return c_; }
  Rat coefficient(int degree) const;
  int degree() const;  // -1 for zero
  bool is_zero() const { return c_.empty(); }

  BetaScalar operator+(const BetaScalar& o) const;
  BetaScalar operator-(const BetaScalar& o) const;
  BetaScalar operator-() const;
  BetaScalar operator*(const BetaScalar& o) const;
  BetaScalar operator*(const Rat& r) const;
  bool operator==(const BetaScalar& o) const { return c_ == o.c_; }

  /// Float evaluation at a numeric beta; trend checks only.
  double evaluate(double beta) const;
  std::string to_string() const;

 private:
  void add_term(int degree, const Rat& value);

  std::map<int, Rat> c_;
  int cap_ = 2;
};

}  // namespace kplab
