#pragma once

#include <memory>
#include <vector>

#include "kplab/diff_op.hpp"
#include "kplab/param_env.hpp"
#include "kplab/partition.hpp"
#include "kplab/schur.hpp"
#include "kplab/tpoly.hpp"

namespace kplab {

/// h_n = e^{beta (n-1/2)^2 / 2} Q^{n-1/2}.
Rat h_n(long n, const ParamEnv& env);

/// h_lambda(s) = exp(beta/2 (kappa + 2 s |lambda| + (4 s^3 - s)/12)) Q^{|lambda| + s^2/2}.
Rat h_weight(const Partition& lambda, const Rat& s, const ParamEnv& env);

/// The same weight built from the h_n: h_empty(s) times the contents product
/// prod r_{j-i+s+1}, r_n = h_n / h_{n-1}. Integer s only.
Rat h_weight_product(const Partition& lambda, long s, const ParamEnv& env);

/// h_lambda(s) / h_empty(s) = Q^{|lambda|} e^{beta (kappa/2 + s |lambda|)}.
/// Only this ratio enters wave functions, and it stays on the lattice for
/// every s in (1/m)Z.
Rat h_norm(const Partition& lambda, const Rat& s, const ParamEnv& env);

struct TauSeries {
  Rat s;
  TPoly value;
  int D = 0;
};

/// sum_{|lambda| <= D} S_lambda(t) h_lambda(s) S_lambda(c).
TauSeries tau(const Rat& s, const CVector& c, const TRingPtr& ring, const ParamEnv& env);
/// tau(s, t) / h_empty(s).
TauSeries tau_normalized(const Rat& s, const CVector& c, const TRingPtr& ring, const ParamEnv& env);

/// Coefficients of y^0..y^n_max in p(t - [y]), [y]_k = y^k / k. The y^n
/// coefficient is valid through D - n.
std::vector<TPoly> miwa_expand(const TPoly& p, int n_max);

/// w_0..w_{n_cut} on the grid lo, lo+step, ..., hi.
struct WaveGrid {
  Rat lo;
  Rat step;
  int n_cut = 0;
  TRingPtr ring;
  std::vector<std::vector<TPoly>> w;  // w[point][n]

  Rat point(std::size_t i) const { return lo + step * Rat(static_cast<long>(i)); }
  GridCoeff coefficient(int n) const;
};

/// Wave amplitudes 1 + sum w_n z^{-n} = tau(s-1, t - [z^{-1}]) / tau(s-1, t).
class WaveBuilder {
 public:
  WaveBuilder(CVector c, std::shared_ptr<const ParamEnv> env, TRingPtr ring, int n_cut);

  /// w_0..w_{n_cut} at one s; throws SingularPointError if tau(s-1, 0) = 0.
  std::vector<TPoly> at(const Rat& s) const;
  /// Grid of samples; threads <= 1 runs serially.
  WaveGrid grid(const Rat& lo, const Rat& hi, const Rat& step, int threads = 1) const;
  /// w_0..w_{n_cut} as exact functions of s with t-series values.
  std::vector<ExpSeriesT> series() const;

  const TRingPtr& ring() const { return ring_; }
  int n_cut() const { return n_cut_; }

 private:
  struct Term {
    Partition lambda;
    Rat sc;                     // S_lambda(c)
    TPoly schur;                // S_lambda(t)
    std::vector<TPoly> miwa;    // y^n coefficients of S_lambda(t - [y])
  };

  CVector c_;
  std::shared_ptr<const ParamEnv> env_;
  TRingPtr ring_;
  int n_cut_;
  std::vector<Term> terms_;
};

/// W = 1 + sum w_n Lambda^{-n} on the grid; exact down to -n_cut.
DiffOp<GridCoeff> dressing_from_tau(const WaveGrid& wave, const OpContext& ctx);
/// W with coefficients exact in s.
DiffOp<ExpSeriesT> dressing_series(const std::vector<ExpSeriesT>& w, const OpContext& ctx);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// Worker count from KPLAB_THREADS (default 1).
int threads_from_env();

}  // namespace kplab
