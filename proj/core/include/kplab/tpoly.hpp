#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kplab/rational.hpp"

namespace kplab {

/// Monomial table for polynomials in t_1..t_K truncated at weighted degree D
/// (t_k has weight k). Monomials are ordered by weight, so "everything of
/// weight <= w" is always a prefix.
class TRing {
 public:
  using Exponents = std::vector<int>;

  static std::shared_ptr<const TRing> make(int K, int D);

  int K() const { return K_; }
  int D() const { return D_; }
  std::size_t size() const { return exps_.size(); }
  /// Number of monomials of weight <= w (0 for w < 0).
  std::size_t count_upto(int w) const;
  const Exponents& exponents(std::size_t idx) const { return exps_[idx]; }
  int weight(std::size_t idx) const { return weight_[idx]; }
  std::optional<std::size_t> index_of(const Exponents& e) const;

  struct Product {
    std::uint32_t other;
    std::uint32_t result;
  };
  /// All j with weight(i) + weight(j) <= D and the index of m_i * m_j.
  const std::vector<Product>& products(std::size_t i) const { return products_[i]; }

  struct Derivative {
    std::uint32_t result;
    int factor;
  };
  /// d/dt_k of monomial i, if non-zero (k is 1-based).
  std::optional<Derivative> derivative(std::size_t i, int k) const;

  bool same_shape(const TRing& o) const { return K_ == o.K_ && D_ == o.D_; }

 private:
  TRing(int K, int D);

  int K_;
  int D_;
  std::vector<Exponents> exps_;
  std::vector<int> weight_;
  std::vector<std::size_t> prefix_;  // prefix_[w] = count of weight <= w
  std::map<Exponents, std::size_t> index_;
  std::vector<std::vector<Product>> products_;
};

using TRingPtr = std::shared_ptr<const TRing>;

/// Truncated polynomial in the KP times with exact rational coefficients.
///
/// Carries a validity degree v <= D: coefficients of weight <= v are exact,
/// nothing is known above it. Ring operations take the minimum validity of
/// their inputs; d/dt_k lowers it by k.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(TRingPtr ring);
  TPoly(TRingPtr ring, int valid_through);

  static TPoly constant(TRingPtr ring, const Rat& c);
  /// t_k, 1-based.
  static TPoly variable(TRingPtr ring, int k);
  static TPoly monomial(TRingPtr ring, const TRing::Exponents& e, const Rat& c);

  const TRingPtr& ring_ptr() const { return ring_; }
  const TRing& ring() const { return *ring_; }
  int valid_through() const { return valid_; }
  TPoly truncated(int valid_through) const;

  const Rat& coeff(std::size_t idx) const;
  Rat coeff(const TRing::Exponents& e) const;
  const Rat& constant_term() const { return coeff(0); }
  std::span<const Rat> coefficients() const { return c_; }

  /// Zero through the validity degree.
  bool is_zero() const;
  /// Zero and exact through D.
  bool exact_zero() const { return valid_ == ring_->D() && is_zero(); }
  /// Number of coefficients a residual check can assert.
  std::size_t assertable_count() const { return c_.size(); }
  bool is_unit() const { return valid_ >= 0 && coeff(0) != 0; }
  /// Lowest weight with a non-zero coefficient, or nullopt when zero.
  std::optional<int> order() const;
  bool is_weighted_homogeneous(int w) const;

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator-() const;
  TPoly operator*(const TPoly& o) const;
  TPoly operator*(const Rat& s) const;
  TPoly& operator+=(const TPoly& o);

  /// Inverse in the truncated ring; needs a non-zero constant term.
  TPoly inverse() const;
  /// Partial derivative in t_k (1-based).
  TPoly diff(int k) const;
  /// Substitutes t_k -> c_k (c may be shorter than K; missing entries are 0).
  Rat evaluate(std::span<const Rat> c) const;

  /// Exact equality of validity and coefficients.
  bool operator==(const TPoly& o) const;

  std::string to_string() const;

 private:
  void check_same_ring(const TPoly& o) const;

  TRingPtr ring_;
  int valid_ = -1;
  std::vector<Rat> c_;  // size == ring_->count_upto(valid_)
};

/// True when a and b agree through min(validity).
bool equal_through_validity(const TPoly& a, const TPoly& b);

}  // namespace kplab
