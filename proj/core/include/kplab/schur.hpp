#pragma once

#include <map>
#include <string>
#include <vector>

#include "kplab/param_env.hpp"
#include "kplab/partition.hpp"
#include "kplab/rational.hpp"
#include "kplab/tpoly.hpp"

namespace kplab {

enum class Family {
  A,         // t_infinity = (1, 0, 0, ...)
  B,         // t(a) = (a/k)
  C,         // t(infinity, q) = (1/(k(1-q^k)))
  D,         // t(a, q) = ((1-q^{ak})/(k(1-q^k)))
  General,   // explicit values
  GBIFinite, // (c_1..c_N, 0, ...)
  GBIN,      // sum_n q^{b_n k} / (k(1-q^k))
  GRR,       // (sum_n q^{b_n k} - sum_n q^{a_n k}) / (k(1-q^k))
};

std::string family_name(Family f);
/// Accepts a, b, c, d, general, gbi, gbin, grr (case-insensitive).
Family parse_family(const std::string& name);

/// Constants c_1..c_Kc (values[k-1] = c_k).
struct CVector {
  std::vector<Rat> values;
  Family family = Family::General;

  int size() const { return static_cast<int>(values.size()); }
  const Rat& operator[](int k) const { return values.at(k - 1); }
  bool all_zero() const;
};

/// c-vector of a family; the needed parameters come from env.
CVector cvector(Family family, const ParamEnv& env, int Kc);
/// (c_1..c_N, 0, ...) padded to Kc.
CVector cvector_finite(std::vector<Rat> head, int Kc);

/// One-row Schur polynomials S_0..S_D from exp(sum t_k z^k).
std::vector<TPoly> one_row_schur(const TRingPtr& ring);

/// S_lambda(t) by the Jacobi-Trudi determinant (or its dual in the
/// elementary polynomials when lambda' is shorter).
TPoly schur_poly(const Partition& lambda, const TRingPtr& ring);

/// S_lambda(c); needs c_1..c_{|lambda|}.
Rat schur_at(const Partition& lambda, const CVector& c);

/// Closed forms: (a) prod 1/h, (c) q^{-kappa/4-|lambda|/2} / prod (q^{-h/2} - q^{h/2}).
Rat schur_special_closed(const Partition& lambda, Family family, const ParamEnv& env);

/// Memoised Schur polynomials over one ring.
class SchurTable {
 public:
  explicit SchurTable(TRingPtr ring);
  const TPoly& operator()(const Partition& lambda);
  const TRingPtr& ring() const { return ring_; }

 private:
  TRingPtr ring_;
  std::vector<TPoly> rows_;
  std::vector<TPoly> elem_;
  std::map<Partition, TPoly> cache_;
};

}  // namespace kplab
