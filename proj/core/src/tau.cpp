#include "kplab/tau.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

#include "kplab/errors.hpp"

namespace kplab {

Rat h_n(long n, const ParamEnv& env) {
  Rat x = Rat(2 * n - 1, 2);
  return env.exp_beta(x * x / 2) * env.Q_pow(x);
}

Rat h_weight(const Partition& lambda, const Rat& s, const ParamEnv& env) {
  Rat size(lambda.size());
  Rat cubic = (4 * s * s * s - s) / 12;
  Rat e = (Rat(kappa(lambda)) + 2 * s * size + cubic) / 2;
  e.canonicalize();
  Rat qe = size + s * s / 2;
  qe.canonicalize();
  return env.exp_beta(e) * env.Q_pow(qe);
}

Rat h_weight_product(const Partition& lambda, long s, const ParamEnv& env) {
  Rat h0 = 1;
  if (s > 0) {
    for (long n = 1; n <= s; ++n) h0 *= h_n(n, env);
  } else if (s < 0) {
    for (long n = s + 1; n <= 0; ++n) h0 /= h_n(n, env);
  }
  Rat r = h0;
  for (const auto& [i, j] : boxes(lambda)) {
    long n = j - i + s + 1;
    r *= h_n(n, env) / h_n(n - 1, env);
  }
  return r;
}

Rat h_norm(const Partition& lambda, const Rat& s, const ParamEnv& env) {
  Rat e = Rat(kappa(lambda), 2) + s * lambda.size();
  e.canonicalize();
  return env.Q_pow(Rat(lambda.size())) * env.exp_beta(e);
}

namespace {

TauSeries tau_impl(const Rat& s, const CVector& c, const TRingPtr& ring, const ParamEnv& env,
                   bool normalized) {
  if (c.size() < ring->D())
    throw ConfigError("tau needs c_1..c_D with D = " + std::to_string(ring->D()));
  SchurTable table(ring);
  TPoly acc(ring);
  for (const auto& lambda : enumerate_partitions(ring->D())) {
    Rat sc = schur_at(lambda, c);
    if (sc == 0) continue;
    Rat h = normalized ? h_norm(lambda, s, env) : h_weight(lambda, s, env);
    acc += table(lambda) * Rat(h * sc);
  }
  return TauSeries{s, acc, ring->D()};
}

}  // namespace

TauSeries tau(const Rat& s, const CVector& c, const TRingPtr& ring, const ParamEnv& env) {
  return tau_impl(s, c, ring, env, false);
}

TauSeries tau_normalized(const Rat& s, const CVector& c, const TRingPtr& ring, const ParamEnv& env) {
  return tau_impl(s, c, ring, env, true);
}

std::vector<TPoly> miwa_expand(const TPoly& p, int n_max) {
  const TRingPtr& ring = p.ring_ptr();
  const TRing& R = *ring;
  int D = R.D();
  std::vector<TPoly> out;
  for (int n = 0; n <= n_max; ++n) out.emplace_back(ring, std::min(p.valid_through(), D) - n);
  auto coeffs = p.coefficients();
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    if (coeffs[idx] == 0) continue;
    const auto& e = R.exponents(idx);
    // Expand prod_k (t_k - y^k/k)^{e_k} one variable at a time.
    std::function<void(int, int, TRing::Exponents&, Rat)> rec = [&](int k, int ypow, TRing::Exponents& cur,
                                                                    Rat coef) {
      if (ypow > n_max) return;
      if (k == R.K()) {
        TPoly term = TPoly::monomial(ring, cur, coef);
        out[static_cast<std::size_t>(ypow)] += term;
        return;
      }
      int ek = e[static_cast<std::size_t>(k)];
      int var = k + 1;
      Rat binom = 1;
      for (int j = 0; j <= ek; ++j) {
        if (j > 0) binom = binom * (ek - j + 1) / j;
        cur[static_cast<std::size_t>(k)] = ek - j;
        Rat f = binom * pow(Rat(-1, var), j);
        rec(k + 1, ypow + var * j, cur, coef * f);
      }
      cur[static_cast<std::size_t>(k)] = ek;
    };
    TRing::Exponents cur = e;
    rec(0, 0, cur, coeffs[idx]);
  }
  return out;
}

GridCoeff WaveGrid::coefficient(int n) const {
  std::vector<TPoly> samples;
  samples.reserve(w.size());
  for (const auto& row : w) samples.push_back(row.at(static_cast<std::size_t>(n)));
  return GridCoeff(lo, step, std::move(samples));
}

WaveBuilder::WaveBuilder(CVector c, std::shared_ptr<const ParamEnv> env, TRingPtr ring, int n_cut)
    : c_(std::move(c)), env_(std::move(env)), ring_(std::move(ring)), n_cut_(n_cut) {
  int D = ring_->D();
  // t - [z^{-1}] touches every t_k, so a ring without t_{K+1}..t_D loses terms.
  if (ring_->K() < D)
    throw ConfigError("wave functions need K >= D (K = " + std::to_string(ring_->K()) + ", D = " + std::to_string(D) + ")");
  if (c_.size() < D)
    throw ConfigError("wave functions need c_1..c_" + std::to_string(D) + ", have " + std::to_string(c_.size()));
  // Partitions beyond D only reach t-weights above the validity of every w_n.
  SchurTable table(ring_);
  for (const auto& lambda : enumerate_partitions(D)) {
    Rat sc = schur_at(lambda, c_);
    if (sc == 0) continue;
    Term t{lambda, sc, table(lambda), miwa_expand(table(lambda), n_cut_)};
    terms_.push_back(std::move(t));
  }
}

std::vector<TPoly> WaveBuilder::at(const Rat& s) const {
  const ParamEnv& env = *env_;
  Rat sm1 = s - 1;
  TPoly den(ring_);
  std::vector<TPoly> num;
  for (int n = 0; n <= n_cut_; ++n) num.emplace_back(ring_, ring_->D() - n);
  for (const auto& term : terms_) {
    Rat weight = term.sc * h_norm(term.lambda, sm1, env);
    den += term.schur * weight;
    for (int n = 0; n <= n_cut_; ++n) num[static_cast<std::size_t>(n)] += term.miwa[static_cast<std::size_t>(n)] * weight;
  }
  if (!den.is_unit()) throw SingularPointError("tau(s-1, 0) = 0 at s = " + s.get_str());
  TPoly inv = den.inverse();
  std::vector<TPoly> w;
  for (int n = 0; n <= n_cut_; ++n) w.push_back(num[static_cast<std::size_t>(n)] * inv);
  return w;
}

WaveGrid WaveBuilder::grid(const Rat& lo, const Rat& hi, const Rat& step, int threads) const {
  WaveGrid g;
  g.lo = lo;
  g.step = step;
  g.n_cut = n_cut_;
  g.ring = ring_;
  std::size_t count = 0;
  for (Rat s = lo; s <= hi; s += step) ++count;
  if (count == 0) throw WindowError("empty wave window");
  g.w.resize(count);
  parallel_for(count, threads, [&](std::size_t i) { g.w[i] = at(g.point(i)); });
  return g;
}

std::vector<ExpSeriesT> WaveBuilder::series() const {
  const ParamEnv& env = *env_;
  ExpSeriesT den;
  std::vector<ExpSeriesT> num(static_cast<std::size_t>(n_cut_) + 1);
  for (const auto& term : terms_) {
    long size = term.lambda.size();
    // h_norm(lambda, s-1) = Q^{|lambda|} e^{beta (kappa/2 - |lambda|)} e^{beta |lambda| s}
    Rat cst = term.sc * env.Q_pow(Rat(size)) * env.exp_beta(Rat(kappa(term.lambda), 2) - size);
    den = den + ExpSeriesT::exp_term(env, term.schur * cst, Rat(size));
    for (int n = 0; n <= n_cut_; ++n) {
      const TPoly& m = term.miwa[static_cast<std::size_t>(n)];
      if (m.is_zero() && m.valid_through() >= ring_->D() - n) continue;
      num[static_cast<std::size_t>(n)] = num[static_cast<std::size_t>(n)] + ExpSeriesT::exp_term(env, m * cst, Rat(size));
    }
  }
  ExpSeriesT inv = den.inverse(env);
  std::vector<ExpSeriesT> w;
  for (int n = 0; n <= n_cut_; ++n) {
    ExpSeriesT v = num[static_cast<std::size_t>(n)] * inv;
    if (ring_->D() - n < ring_->D()) v = v.truncated(ring_->D() - n);
    w.push_back(v);
  }
  return w;
}

DiffOp<GridCoeff> dressing_from_tau(const WaveGrid& wave, const OpContext& ctx) {
  DiffOp<GridCoeff> W = DiffOp<GridCoeff>::identity(ctx);
  for (int n = 1; n <= wave.n_cut; ++n) W.add_term(Rat(-n), wave.coefficient(n));
  W.raise_floor(Rat(-wave.n_cut));
  return W;
}

DiffOp<ExpSeriesT> dressing_series(const std::vector<ExpSeriesT>& w, const OpContext& ctx) {
  DiffOp<ExpSeriesT> W = DiffOp<ExpSeriesT>::identity(ctx);
  int n_cut = static_cast<int>(w.size()) - 1;
  for (int n = 1; n <= n_cut; ++n) W.add_term(Rat(-n), w[static_cast<std::size_t>(n)]);
  W.raise_floor(Rat(-n_cut));
  return W;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

int threads_from_env() {
  const char* v = std::getenv("KPLAB_THREADS");
  if (!v) return 1;
  int n = std::atoi(v);
  return n > 0 ? n : 1;
}

}  // namespace kplab
