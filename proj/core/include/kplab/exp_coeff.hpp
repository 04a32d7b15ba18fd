#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

#include "kplab/errors.hpp"
#include "kplab/param_env.hpp"
#include "kplab/rational.hpp"
#include "kplab/tpoly.hpp"

namespace kplab {

/// Validity sentinel for exact values.
inline constexpr int kExact = INT_MAX;

/// Value-type hooks used by ExpSeries (Rat or TPoly).
template <class V>
struct ValueTraits;

template <>
struct ValueTraits<Rat> {
  static bool is_zero(const Rat& v) { return sgn(v) == 0; }
  static int validity(const Rat&) { return kExact; }
  static Rat truncated(const Rat& v, int) { return v; }
  static bool is_unit(const Rat& v) { return sgn(v) != 0; }
  static Rat inverse(const Rat& v) {
    if (sgn(v) == 0) throw NotInvertibleError("division by zero");
    return 1 / v;
  }
  static std::string str(const Rat& v) { return v.get_str(); }
  static Rat magnitude(const Rat& v) { return abs(v); }
};

template <>
struct ValueTraits<TPoly> {
  static bool is_zero(const TPoly& v) { return v.is_zero(); }
  static int validity(const TPoly& v) {
    return v.valid_through() >= v.ring().D() ? kExact : v.valid_through();
  }
  static TPoly truncated(const TPoly& v, int d) { return d == kExact ? v : v.truncated(d); }
  static bool is_unit(const TPoly& v) { return v.is_unit(); }
  static TPoly inverse(const TPoly& v) { return v.inverse(); }
  static std::string str(const TPoly& v) { return v.to_string(); }
  static Rat magnitude(const TPoly& v) {
    Rat m = 0;
    for (const auto& c : v.coefficients()) m = std::max(m, Rat(abs(c)));
    return m;
  }
};

/// Exponent key of one term: beta^d * e^{beta (s2 s^2 + s1 s)} * Q^{qs s}.
/// Constant parts of the exponents are always folded into the value.
struct ExpKey {
  int beta_deg = 0;
  Rat s2 = 0;
  Rat s1 = 0;
  Rat qs = 0;

  bool operator<(const ExpKey& o) const {
    if (beta_deg != o.beta_deg) return beta_deg < o.beta_deg;
    if (s2 != o.s2) return s2 < o.s2;
    if (s1 != o.s1) return s1 < o.s1;
    return qs < o.qs;
  }
  bool operator==(const ExpKey& o) const {
    return beta_deg == o.beta_deg && s2 == o.s2 && s1 == o.s1 && qs == o.qs;
  }
  ExpKey operator+(const ExpKey& o) const {
    return {beta_deg + o.beta_deg, s2 + o.s2, s1 + o.s1, qs + o.qs};
  }
  bool is_constant() const { return beta_deg == 0 && s2 == 0 && s1 == 0 && qs == 0; }
  std::string to_string() const {
    std::ostringstream os;
    if (beta_deg) os << "beta^" << beta_deg;
    if (s2 != 0 || s1 != 0) {
      if (beta_deg) os << "*";
      os << "e^{beta(" << s2.get_str() << "s^2+" << s1.get_str() << "s)}";
    }
    if (qs != 0) os << "*Q^{" << qs.get_str() << "s}";
    return os.str();
  }
};

/// Finite sum  sum_i v_i beta^{d_i} e^{beta p_i(s)} Q^{x_i s}  with p_i of degree <= 2.
///
/// The value type is Rat (exact constants) or TPoly (coefficients that also
/// depend on the KP times). Keys are canonical: zero terms are dropped and any
/// constant exponent is evaluated through ParamEnv, so equality is structural.
template <class V>
class ExpSeries {
 public:
  using Traits = ValueTraits<V>;
  using Map = std::map<ExpKey, V>;

  ExpSeries() = default;

  static ExpSeries constant(V v) { return term(ExpKey{}, std::move(v)); }

  static ExpSeries term(ExpKey key, V v) {
    ExpSeries e;
    e.insert(std::move(key), std::move(v));
    return e;
  }

  /// v * beta^d * e^{beta (s2 s^2 + s1 s)} * Q^{qs s}; folds Q into e^beta
  /// when Q is tied to the lattice base.
  static ExpSeries exp_term(const ParamEnv& env, V v, Rat s1, Rat s2 = 0, int beta_deg = 0,
                            Rat qs = 0) {
    ExpKey key{beta_deg, std::move(s2), std::move(s1), std::move(qs)};
    fold_key(env, key);
    return term(std::move(key), std::move(v));
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool exactly_zero() const { return terms_.empty() && valid_ == kExact; }
  int validity() const {
    int v = valid_;
    for (const auto& [k, val] : terms_) v = std::min(v, Traits::validity(val));
    return v;
  }
  int max_beta_degree() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.beta_deg);
    return d;
  }

  ExpSeries operator+(const ExpSeries& o) const {
    ExpSeries r = *this;
    r.valid_ = std::min(valid_, o.valid_);
    for (const auto& [k, v] : o.terms_) r.insert(k, v);
    r.normalize();
    return r;
  }
  ExpSeries operator-() const {
    ExpSeries r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  ExpSeries operator-(const ExpSeries& o) const { return *this + (-o); }
  ExpSeries operator*(const ExpSeries& o) const {
    ExpSeries r;
    r.valid_ = std::min(valid_, o.valid_);
    for (const auto& [k1, v1] : terms_)
      for (const auto& [k2, v2] : o.terms_) r.insert(k1 + k2, v1 * v2);
    r.normalize();
    return r;
  }
  ExpSeries operator*(const Rat& s) const {
    ExpSeries r;
    r.valid_ = valid_;
    if (sgn(s) == 0) return r;
    for (const auto& [k, v] : terms_) r.insert(k, v * s);
    return r;
  }

  /// Substitutes s -> s + alpha.
  ExpSeries shifted(const Rat& alpha, const ParamEnv& env) const {
    if (sgn(alpha) == 0) return *this;
    ExpSeries r;
    r.valid_ = valid_;
    for (const auto& [k, v] : terms_) {
      ExpKey nk = k;
      nk.s1 = k.s1 + 2 * k.s2 * alpha;
      Rat c = k.s2 * alpha * alpha + k.s1 * alpha;
      Rat factor = env.exp_beta(c);
      if (k.qs != 0) factor *= env.Q_pow(k.qs * alpha);
      r.insert(std::move(nk), v * factor);
    }
    r.normalize();
    return r;
  }

  /// d/ds; each term gains one power of beta.
  ExpSeries d_ds(const ParamEnv& env) const {
    ExpSeries r;
    r.valid_ = valid_;
    for (const auto& [k, v] : terms_) {
      if (k.s2 != 0)
        throw UnsupportedBackendError("d/ds of a quadratic exponent e^{beta s^2 ...} is not supported");
      if (k.qs != 0)
        throw UnsupportedBackendError("d/ds of Q^{x s} with independent Q is not supported");
      if (k.s1 == 0) continue;
      ExpKey nk = k;
      nk.beta_deg += 1;
      if (nk.beta_deg > env.beta_cap)
        throw ConfigError("beta-degree cap " + std::to_string(env.beta_cap) + " exceeded by d/ds");
      r.insert(nk, v * k.s1);
    }
    r.normalize();
    return r;
  }

  /// Value at a rational point s; needs beta-degree 0.
  V sample(const Rat& s, const ParamEnv& env, const V& zero) const {
    V acc = zero;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (k.beta_deg != 0)
        throw UnsupportedBackendError("cannot sample a term carrying the formal symbol beta");
      Rat factor = env.exp_beta(k.s2 * s * s + k.s1 * s);
      if (k.qs != 0) factor *= env.Q_pow(k.qs * s);
      if (first) {
        acc = v * factor;
        first = false;
      } else {
        acc = acc + v * factor;
      }
    }
    if (valid_ != kExact) acc = Traits::truncated(acc, valid_);
    return acc;
  }

  /// Inverse when exactly one term has a unit value and every other term
  /// is nilpotent (positive t-order). For Rat values that means one term.
  ExpSeries inverse(const ParamEnv& env) const {
    (void)env;
    const std::pair<const ExpKey, V>* lead = nullptr;
    for (const auto& kv : terms_) {
      if (Traits::is_unit(kv.second)) {
        if (lead) throw NotInvertibleError("coefficient has several leading exponentials");
        lead = &kv;
      }
    }
    if (!lead) throw NotInvertibleError("coefficient has no invertible leading term");
    if (lead->first.beta_deg != 0)
      throw NotInvertibleError("cannot invert a coefficient whose leading term carries beta");
    ExpKey ik{0, -lead->first.s2, -lead->first.s1, -lead->first.qs};
    ExpSeries inv_lead = term(ik, Traits::inverse(lead->second));
    inv_lead.valid_ = valid_;
    ExpSeries rest;
    rest.valid_ = valid_;
    for (const auto& kv : terms_)
      if (&kv != lead) rest.insert(kv.first, kv.second);
    if (rest.is_zero()) return inv_lead;
    if constexpr (std::is_same_v<V, Rat>) {
      throw NotInvertibleError("coefficient with several exponentials is not invertible");
    } else {
      ExpSeries y = rest * inv_lead;
      ExpSeries neg_y = -y;
      ExpSeries one = constant(Traits::truncated(
          V::constant(lead->second.ring_ptr(), Rat(1)), validity()));
      ExpSeries acc = one;
      ExpSeries power = one;
      for (int n = 1; n <= lead->second.ring().D() + 1; ++n) {
        power = power * neg_y;
        if (power.is_zero()) break;
        acc = acc + power;
      }
      return acc * inv_lead;
    }
  }

  /// Multiplies every value by beta^{-1}; every term must carry beta.
  ExpSeries divided_by_beta() const {
    ExpSeries r;
    r.valid_ = valid_;
    for (const auto& [k, v] : terms_) {
      if (k.beta_deg == 0) throw NotInvertibleError("term without a beta factor");
      ExpKey nk = k;
      nk.beta_deg -= 1;
      r.insert(nk, v);
    }
    return r;
  }

  /// Keeps terms with the given beta-degree (the factor beta^d is removed).
  ExpSeries beta_component(int d) const {
    ExpSeries r;
    r.valid_ = valid_;
    for (const auto& [k, v] : terms_)
      if (k.beta_deg == d) {
        ExpKey nk = k;
        nk.beta_deg = 0;
        r.insert(nk, v);
      }
    return r;
  }

  template <class F>
  auto map_values(F&& f) const {
    using W = std::decay_t<decltype(f(std::declval<const V&>()))>;
    ExpSeries<W> r;
    for (const auto& [k, v] : terms_) r = r + ExpSeries<W>::term(k, f(v));
    return r;
  }

  ExpSeries truncated(int d) const {
    ExpSeries r = *this;
    r.valid_ = std::min(valid_, d);
    r.normalize();
    return r;
  }

  /// Largest magnitude of a value; used for worst-residual reports.
  Rat magnitude() const {
    Rat m = 0;
    for (const auto& [k, v] : terms_) m = std::max(m, Traits::magnitude(v));
    return m;
  }

  bool operator==(const ExpSeries& o) const {
    if (validity() != o.validity() || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [k, v] : terms_) {
      if (!(k == it->first) || !(v == it->second)) return false;
      ++it;
    }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return valid_ == kExact ? "0" : "0 [valid<=" + std::to_string(valid_) + "]";
    std::string s;
    for (const auto& [k, v] : terms_) {
      if (!s.empty()) s += " + ";
      std::string ks = k.to_string();
      s += "(" + Traits::str(v) + ")" + (ks.empty() ? "" : "*" + ks);
    }
    return s;
  }

 private:
  static void fold_key(const ParamEnv& env, ExpKey& key) {
    if (key.qs != 0 && env.Q_tie()) {
      key.s1 += key.qs * *env.Q_tie() / env.M();
      key.qs = 0;
    }
  }

  void insert(const ExpKey& k, V v) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(v));
    } else {
      it->second = it->second + v;
    }
    normalize_one(k);
  }

  void normalize_one(const ExpKey& k) {
    auto it = terms_.find(k);
    if (it == terms_.end()) return;
    if (Traits::is_zero(it->second)) {
      valid_ = std::min(valid_, Traits::validity(it->second));
      terms_.erase(it);
    }
  }

  void normalize() {
    int v = validity();
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (v != kExact) it->second = Traits::truncated(it->second, v);
      if (Traits::is_zero(it->second)) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    valid_ = v;
  }

  Map terms_;
  int valid_ = kExact;
};

/// Exact-constant backend.
using ExpCoeff = ExpSeries<Rat>;
/// Symbolic-in-s backend with coefficients that are t-series.
using ExpSeriesT = ExpSeries<TPoly>;

}  // namespace kplab
