#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kplab/errors.hpp"
#include "kplab/exp_coeff.hpp"
#include "kplab/grid_coeff.hpp"
#include "kplab/param_env.hpp"
#include "kplab/rational.hpp"
#include "kplab/tpoly.hpp"

namespace kplab {

/// Settings shared by every operator of one computation.
struct OpContext {
  std::shared_ptr<const ParamEnv> env;
  /// Shifts live on (1/m)Z.
  long m = 1;
  /// Storage floor: shifts below -n_cut are dropped (and recorded).
  int n_cut = 6;
  /// Ring of t-series coefficients; unused by the exact-constant backend.
  TRingPtr ring;
};

/// Backend hooks used by DiffOp.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<ExpCoeff> {
  static ExpCoeff one(const OpContext&) { return ExpCoeff::constant(Rat(1)); }
  static ExpCoeff shifted(const ExpCoeff& c, const Rat& a, const OpContext& ctx) {
    return c.shifted(a, *ctx.env);
  }
  static bool exactly_zero(const ExpCoeff& c) { return c.exactly_zero(); }
  static bool is_zero(const ExpCoeff& c) { return c.is_zero(); }
  static ExpCoeff inverse(const ExpCoeff& c, const OpContext& ctx) { return c.inverse(*ctx.env); }
  static ExpCoeff d_ds(const ExpCoeff& c, const OpContext& ctx) { return c.d_ds(*ctx.env); }
  static ExpCoeff d_dt(const ExpCoeff&, int, const OpContext&) {
    throw UnsupportedBackendError("exact-constant coefficients do not depend on t");
  }
  static int validity(const ExpCoeff&) { return kExact; }
  static std::size_t assertable(const ExpCoeff&) { return 1; }
  static Rat magnitude(const ExpCoeff& c) { return c.magnitude(); }
  static std::string str(const ExpCoeff& c) { return c.to_string(); }
};

template <>
struct CoeffOps<ExpSeriesT> {
  static ExpSeriesT one(const OpContext& ctx) {
    if (!ctx.ring) throw ConfigError("t-series operator needs a ring in its context");
    return ExpSeriesT::constant(TPoly::constant(ctx.ring, Rat(1)));
  }
  static ExpSeriesT shifted(const ExpSeriesT& c, const Rat& a, const OpContext& ctx) {
    return c.shifted(a, *ctx.env);
  }
  static bool exactly_zero(const ExpSeriesT& c) { return c.exactly_zero(); }
  static bool is_zero(const ExpSeriesT& c) { return c.is_zero(); }
  static ExpSeriesT inverse(const ExpSeriesT& c, const OpContext& ctx) { return c.inverse(*ctx.env); }
  static ExpSeriesT d_ds(const ExpSeriesT& c, const OpContext& ctx) { return c.d_ds(*ctx.env); }
  static ExpSeriesT d_dt(const ExpSeriesT& c, int k, const OpContext&) {
    ExpSeriesT r;
    for (const auto& [key, v] : c.terms()) r = r + ExpSeriesT::term(key, v.diff(k));
    int v = c.validity();
    if (v != kExact) r = r.truncated(v - k);
    return r;
  }
  static int validity(const ExpSeriesT& c) { return c.validity(); }
  static std::size_t assertable(const ExpSeriesT& c) { return c.validity() < 0 ? 0 : 1; }
  static Rat magnitude(const ExpSeriesT& c) { return c.magnitude(); }
  static std::string str(const ExpSeriesT& c) { return c.to_string(); }
};

template <>
struct CoeffOps<GridCoeff> {
  static GridCoeff one(const OpContext& ctx) {
    if (!ctx.ring) throw ConfigError("grid operator needs a ring in its context");
    return GridCoeff::constant(TPoly::constant(ctx.ring, Rat(1)));
  }
  static GridCoeff shifted(const GridCoeff& c, const Rat& a, const OpContext&) { return c.shifted(a); }
  static bool exactly_zero(const GridCoeff& c) { return c.exactly_zero(); }
  static bool is_zero(const GridCoeff& c) { return c.is_zero(); }
  static GridCoeff inverse(const GridCoeff& c, const OpContext&) { return c.inverse(); }
  static GridCoeff d_ds(const GridCoeff&, const OpContext&) {
    throw UnsupportedBackendError("sampled coefficients have no s-derivative");
  }
  static GridCoeff d_dt(const GridCoeff& c, int k, const OpContext&) { return c.diff(k); }
  static int validity(const GridCoeff& c) { return c.validity(); }
  static std::size_t assertable(const GridCoeff& c) { return c.assertable_count(); }
  static Rat magnitude(const GridCoeff& c) { return c.magnitude(); }
  static std::string str(const GridCoeff& c) { return c.to_string(); }
};

/// Truncated Laurent series  sum_a c_a(s) Lambda^a  over a in (1/m)Z, in
/// normal order (coefficients to the left).
///
/// floor(): every shift >= floor is exact; below it nothing is known.
/// nullopt means the operator is represented exactly.
template <class C>
class DiffOp {
 public:
  using Ops = CoeffOps<C>;
  using Map = std::map<Rat, C>;

  DiffOp() = default;
  explicit DiffOp(OpContext ctx) : ctx_(std::move(ctx)) {}

  static DiffOp monomial(const OpContext& ctx, const Rat& shift, C c) {
    DiffOp d(ctx);
    d.add_term(shift, std::move(c));
    return d;
  }
  static DiffOp identity(const OpContext& ctx) { return monomial(ctx, Rat(0), Ops::one(ctx)); }
  static DiffOp lambda(const OpContext& ctx, const Rat& shift) { return monomial(ctx, shift, Ops::one(ctx)); }

  const OpContext& context() const { return ctx_; }
  const ParamEnv& env() const { return *ctx_.env; }
  const Map& coeffs() const { return c_; }
  const C* find(const Rat& shift) const {
    auto it = c_.find(shift);
    return it == c_.end() ? nullptr : &it->second;
  }
  const std::optional<Rat>& floor() const { return floor_; }
  bool exact() const { return !floor_; }

  /// Raises the floor (never lowers it) and drops anything below.
  void raise_floor(const std::optional<Rat>& f) {
    if (!f) return;
    if (!floor_ || *f > *floor_) floor_ = *f;
    for (auto it = c_.begin(); it != c_.end() && it->first < *floor_;) it = c_.erase(it);
  }

  /// Adds c Lambda^shift to the operator.
  void add_term(const Rat& shift, C c) {
    if (!is_integer(shift * Rat(ctx_.m)))
      throw LatticeError("shift " + shift.get_str() + " is not on the lattice (1/" + std::to_string(ctx_.m) + ")Z");
    if (shift < Rat(-ctx_.n_cut)) {
      raise_floor(Rat(-ctx_.n_cut));
      return;
    }
    if (floor_ && shift < *floor_) return;
    auto it = c_.find(shift);
    if (it == c_.end()) {
      if (!Ops::exactly_zero(c)) c_.emplace(shift, std::move(c));
    } else {
      it->second = it->second + c;
      if (Ops::exactly_zero(it->second)) c_.erase(it);
    }
  }

  /// Largest shift that may carry a non-zero coefficient.
  std::optional<Rat> max_shift() const {
    if (!c_.empty()) return c_.rbegin()->first;
    if (floor_) return *floor_ - Rat(1, ctx_.m);
    return std::nullopt;
  }

  /// One line per stored shift, highest first, exact values.
  std::string dump() const {
    std::ostringstream os;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      os << "L^" << it->first.get_str() << ": " << Ops::str(it->second) << "\n";
    if (floor_) os << "floor: " << floor_->get_str() << "\n";
    return os.str();
  }

 private:
  OpContext ctx_;
  Map c_;
  std::optional<Rat> floor_;
};

namespace detail {

inline OpContext merge_context(const OpContext& a, const OpContext& b) {
  OpContext r = a;
  if (a.m != b.m) {
    if (a.m == 1) {
      r.m = b.m;
    } else if (b.m != 1) {
      throw ConfigError("mixed shift denominators " + std::to_string(a.m) + " and " + std::to_string(b.m));
    }
  }
  r.n_cut = std::min(a.n_cut, b.n_cut);
  if (!r.ring) r.ring = b.ring;
  if (!r.env) r.env = b.env;
  return r;
}

inline std::optional<Rat> max_opt(std::optional<Rat> a, const std::optional<Rat>& b) {
  if (!b) return a;
  if (!a || *b > *a) return b;
  return a;
}

}  // namespace detail

template <class C>
DiffOp<C> operator+(const DiffOp<C>& x, const DiffOp<C>& y) {
  DiffOp<C> r(detail::merge_context(x.context(), y.context()));
  r.raise_floor(detail::max_opt(x.floor(), y.floor()));
  for (const auto& [a, c] : x.coeffs()) r.add_term(a, c);
  for (const auto& [a, c] : y.coeffs()) r.add_term(a, c);
  return r;
}

template <class C>
DiffOp<C> operator-(const DiffOp<C>& x) {
  DiffOp<C> r(x.context());
  r.raise_floor(x.floor());
  for (const auto& [a, c] : x.coeffs()) r.add_term(a, -c);
  return r;
}

template <class C>
DiffOp<C> operator-(const DiffOp<C>& x, const DiffOp<C>& y) {
  return x + (-y);
}

template <class C>
DiffOp<C> operator*(const DiffOp<C>& x, const Rat& s) {
  DiffOp<C> r(x.context());
  r.raise_floor(x.floor());
  for (const auto& [a, c] : x.coeffs()) r.add_term(a, c * s);
  return r;
}

/// Normal-ordered product: a Lambda^alpha * b Lambda^gamma = a b(s+alpha) Lambda^{alpha+gamma}.
template <class C>
DiffOp<C> operator*(const DiffOp<C>& x, const DiffOp<C>& y) {
  OpContext ctx = detail::merge_context(x.context(), y.context());
  DiffOp<C> r(ctx);
  auto mx = x.max_shift();
  auto my = y.max_shift();
  if (!mx || !my) return r;  // one factor is exactly zero
  std::optional<Rat> floor;
  if (x.floor()) floor = detail::max_opt(floor, *x.floor() + *my);
  if (y.floor()) floor = detail::max_opt(floor, *mx + *y.floor());
  r.raise_floor(floor);
  Rat cut(-ctx.n_cut);
  for (const auto& [a, ca] : x.coeffs()) {
    for (auto it = y.coeffs().rbegin(); it != y.coeffs().rend(); ++it) {
      Rat s = a + it->first;
      if (s < cut) {
        r.raise_floor(cut);
        break;
      }
      if (floor && s < *floor) break;
      r.add_term(s, ca * CoeffOps<C>::shifted(it->second, a, ctx));
    }
  }
  return r;
}

/// Coefficients under s -> s + alpha.
template <class C>
DiffOp<C> shift_argument(const DiffOp<C>& x, const Rat& alpha) {
  DiffOp<C> r(x.context());
  r.raise_floor(x.floor());
  for (const auto& [a, c] : x.coeffs()) r.add_term(a, CoeffOps<C>::shifted(c, alpha, x.context()));
  return r;
}

template <class C>
DiffOp<C> op_pow(const DiffOp<C>& x, int n) {
  if (n < 0) throw ConfigError("negative operator power");
  DiffOp<C> r = DiffOp<C>::identity(x.context());
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

/// (x)_{>=0}: shifts >= 0 as rationals.
template <class C>
DiffOp<C> project_nonneg(const DiffOp<C>& x) {
  DiffOp<C> r(x.context());
  if (x.floor() && *x.floor() > 0) r.raise_floor(x.floor());
  for (const auto& [a, c] : x.coeffs())
    if (a >= 0) r.add_term(a, c);
  return r;
}

/// (x)_{<0}.
template <class C>
DiffOp<C> project_neg(const DiffOp<C>& x) {
  DiffOp<C> r(x.context());
  r.raise_floor(x.floor());
  for (const auto& [a, c] : x.coeffs())
    if (a < 0) r.add_term(a, c);
  return r;
}

namespace detail {

template <class C>
void require_negative(const DiffOp<C>& x, const char* what) {
  auto m = x.max_shift();
  if (m && *m >= 0) throw ConfigError(std::string(what) + " needs an operator with only negative shifts");
}

}  // namespace detail

namespace detail {

template <class C>
const C& unit_lead(const DiffOp<C>& x) {
  auto m = x.max_shift();
  const C* lead = x.find(Rat(0));
  if (!m || *m != 0 || !lead) throw NotInvertibleError("operator does not have the form u0 (1 + lower shifts)");
  if (x.floor() && *x.floor() > 0) throw NotInvertibleError("leading coefficient is not known");
  return *lead;
}

}  // namespace detail

/// Inverse of u0 (1 + negative part) by the Neumann series sum (-Y)^n.
template <class C>
DiffOp<C> op_inv_neumann(const DiffOp<C>& x) {
  const OpContext& ctx = x.context();
  DiffOp<C> u0inv = DiffOp<C>::monomial(ctx, Rat(0), CoeffOps<C>::inverse(detail::unit_lead(x), ctx));
  DiffOp<C> one = DiffOp<C>::identity(ctx);
  DiffOp<C> neg_y = one - u0inv * x;
  DiffOp<C> acc = one;
  DiffOp<C> power = one;
  while (true) {
    power = power * neg_y;
    acc = acc + power;
    if (power.coeffs().empty()) break;
  }
  return acc * u0inv;
}

/// Same series, solved one shift at a time from x V = 1:
///   V_0 = x_0^{-1},  V_s = -x_0^{-1} sum_{a<0} x_a V_{s-a}(s+a).
template <class C>
DiffOp<C> op_inv(const DiffOp<C>& x) {
  const OpContext& ctx = x.context();
  C inv0 = CoeffOps<C>::inverse(detail::unit_lead(x), ctx);
  DiffOp<C> v(ctx);
  std::map<Rat, C> solved;
  solved.emplace(Rat(0), inv0);
  bool tail = false;
  for (const auto& kv : x.coeffs())
    if (kv.first < 0) tail = true;
  Rat step(1, ctx.m);
  Rat bottom(-ctx.n_cut);
  if (x.floor()) bottom = std::max(bottom, *x.floor());
  if (tail || x.floor()) {
    for (Rat sigma = -step; sigma >= bottom; sigma -= step) {
      std::optional<C> acc;
      for (const auto& [a, xa] : x.coeffs()) {
        if (a >= 0 || a < sigma) continue;
        auto it = solved.find(sigma - a);
        if (it == solved.end()) continue;
        C term = xa * CoeffOps<C>::shifted(it->second, a, ctx);
        acc = acc ? *acc + term : term;
      }
      if (acc) solved.emplace(sigma, -(inv0 * *acc));
    }
  }
  for (auto& [a, c] : solved) v.add_term(a, std::move(c));
  if (tail || x.floor()) v.raise_floor(bottom);
  return v;
}

template <class C>
DiffOp<C> op_exp(const DiffOp<C>& x) {
  detail::require_negative(x, "op_exp");
  DiffOp<C> acc = DiffOp<C>::identity(x.context());
  DiffOp<C> power = acc;
  for (long n = 1;; ++n) {
    power = (power * x) * Rat(1, n);
    acc = acc + power;
    if (power.coeffs().empty()) break;
  }
  return acc;
}

/// log(1 + x).
template <class C>
DiffOp<C> op_log1p(const DiffOp<C>& x) {
  detail::require_negative(x, "op_log1p");
  DiffOp<C> acc(x.context());
  DiffOp<C> power = DiffOp<C>::identity(x.context());
  for (long n = 1;; ++n) {
    power = power * x;
    acc = acc + power * Rat(n % 2 ? 1 : -1, n);
    if (power.coeffs().empty()) break;
  }
  return acc;
}

/// W W(s+alpha)^{-1} Lambda^alpha, i.e. W Lambda^alpha W^{-1}.
template <class C>
DiffOp<C> conjugate_shift(const DiffOp<C>& w, const Rat& alpha) {
  return (w * op_inv(shift_argument(w, alpha))) * DiffOp<C>::lambda(w.context(), alpha);
}

template <class C>
DiffOp<C> commutator(const DiffOp<C>& x, const DiffOp<C>& y) {
  return x * y - y * x;
}

/// Coefficientwise d/ds.
template <class C>
DiffOp<C> op_d_ds(const DiffOp<C>& x) {
  DiffOp<C> r(x.context());
  r.raise_floor(x.floor());
  for (const auto& [a, c] : x.coeffs()) r.add_term(a, CoeffOps<C>::d_ds(c, x.context()));
  return r;
}

/// Coefficientwise d/dt_k.
template <class C>
DiffOp<C> op_d_dt(const DiffOp<C>& x, int k) {
  DiffOp<C> r(x.context());
  r.raise_floor(x.floor());
  for (const auto& [a, c] : x.coeffs()) r.add_term(a, CoeffOps<C>::d_dt(c, k, x.context()));
  return r;
}

/// [log Lambda, x] = d x / ds coefficientwise.
template <class C>
DiffOp<C> log_lambda_commutator(const DiffOp<C>& x) {
  return op_d_ds(x);
}

/// Tail of log L = log Lambda - (dW/ds) W^{-1}.
template <class C>
DiffOp<C> op_log_dressed(const DiffOp<C>& w) {
  return -(op_d_ds(w) * op_inv(w));
}

template <class C, class D, class F>
DiffOp<D> map_coeffs(const DiffOp<C>& x, const OpContext& ctx, F&& f) {
  DiffOp<D> r(ctx);
  r.raise_floor(x.floor());
  for (const auto& [a, c] : x.coeffs()) r.add_term(a, f(c));
  return r;
}

struct BandProfile {
  std::optional<Rat> max;
  std::optional<Rat> min_nonzero;
  std::vector<Rat> shifts;  // descending
  std::optional<Rat> floor;
};

/// Shifts whose coefficient is non-zero within validity.
template <class C>
BandProfile band_profile(const DiffOp<C>& x) {
  BandProfile b;
  b.floor = x.floor();
  for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it) {
    if (CoeffOps<C>::is_zero(it->second)) continue;
    b.shifts.push_back(it->first);
    if (!b.max) b.max = it->first;
    b.min_nonzero = it->first;
  }
  return b;
}

/// What a residual check could assert.
struct ResidualSummary {
  bool zero = true;
  std::size_t asserted = 0;
  std::size_t coefficients = 0;
  int min_validity = kExact;
  /// Highest validity among stored coefficients that could be asserted.
  int max_validity = -1;
  Rat worst = 0;
  std::string worst_at;
};

/// Asserts every coefficient with bottom <= shift <= top that lies above the
/// floor. Absent coefficients count as exact zeros.
template <class C>
ResidualSummary residual_summary(const DiffOp<C>& r, const Rat& bottom, const Rat& top) {
  ResidualSummary s;
  Rat lo = bottom;
  if (r.floor() && *r.floor() > lo) lo = *r.floor();
  Rat step(1, r.context().m);
  for (Rat a = lo; a <= top; a += step) {
    const C* c = r.find(a);
    ++s.coefficients;
    if (!c) {
      ++s.asserted;
      continue;
    }
    s.asserted += CoeffOps<C>::assertable(*c);
    s.min_validity = std::min(s.min_validity, CoeffOps<C>::validity(*c));
    if (CoeffOps<C>::assertable(*c) > 0) s.max_validity = std::max(s.max_validity, CoeffOps<C>::validity(*c));
    if (!CoeffOps<C>::is_zero(*c)) {
      s.zero = false;
      Rat m = CoeffOps<C>::magnitude(*c);
      if (m >= s.worst) {
        s.worst = m;
        s.worst_at = "Lambda^" + a.get_str();
      }
    }
  }
  return s;
}

inline void merge_into(ResidualSummary& acc, const ResidualSummary& s) {
  acc.zero = acc.zero && s.zero;
  acc.asserted += s.asserted;
  acc.coefficients += s.coefficients;
  acc.min_validity = std::min(acc.min_validity, s.min_validity);
  acc.max_validity = std::max(acc.max_validity, s.max_validity);
  if (!s.zero && s.worst >= acc.worst) {
    acc.worst = s.worst;
    acc.worst_at = s.worst_at;
  }
}

/// Samples an exact-constant operator on a grid (beta-degree 0 only).
DiffOp<GridCoeff> to_grid(const DiffOp<ExpCoeff>& x, const OpContext& grid_ctx, const Rat& lo,
                          const Rat& hi, const Rat& step);

/// Promotes exact-constant coefficients to constant t-series.
DiffOp<ExpSeriesT> to_tseries(const DiffOp<ExpCoeff>& x, const OpContext& t_ctx);

/// Constant terms in t (the t = 0 slice).
DiffOp<ExpCoeff> t_zero_slice(const DiffOp<ExpSeriesT>& x, const OpContext& exp_ctx);
GridCoeff t_zero_slice(const GridCoeff& c, const TRingPtr& ring0);

}  // namespace kplab
