#include "kplab/tpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "kplab/errors.hpp"

namespace kplab {

namespace {

const Rat& zero_rat() {
  static const Rat z(0);
  return z;
}

}  // namespace

std::shared_ptr<const TRing> TRing::make(int K, int D) {
  if (K < 0 || D < 0) throw ConfigError("TRing needs K >= 0 and D >= 0");
  return std::shared_ptr<const TRing>(new TRing(K, D));
}

TRing::TRing(int K, int D) : K_(K), D_(D) {
  // Enumerate exponent vectors by weight, then lexicographically.
  for (int w = 0; w <= D; ++w) {
    Exponents e(K, 0);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
      if (k == K) {
        if (remaining == 0) {
          exps_.push_back(e);
          weight_.push_back(w);
        }
        return;
      }
      int var = k + 1;
      for (int p = remaining / var; p >= 0; --p) {
        e[k] = p;
        rec(k + 1, remaining - p * var);
      }
      e[k] = 0;
    };
    rec(0, w);
    prefix_.push_back(exps_.size());
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) index_.emplace(exps_[i], i);
  products_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      if (weight_[i] + weight_[j] > D_) break;
      Exponents e = exps_[i];
      for (int k = 0; k < K_; ++k) e[k] += exps_[j][k];
      products_[i].push_back({static_cast<std::uint32_t>(j),
                              static_cast<std::uint32_t>(index_.at(e))});
    }
  }
}

std::size_t TRing::count_upto(int w) const {
  if (w < 0) return 0;
  if (w >= D_) return exps_.size();
  return prefix_[w];
}

std::optional<std::size_t> TRing::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<TRing::Derivative> TRing::derivative(std::size_t i, int k) const {
  if (k < 1 || k > K_) return std::nullopt;
  const Exponents& e = exps_[i];
  if (e[k - 1] == 0) return std::nullopt;
  Exponents d = e;
  d[k - 1] -= 1;
  return Derivative{static_cast<std::uint32_t>(index_.at(d)), e[k - 1]};
}

TPoly::TPoly(TRingPtr ring) : TPoly(ring, ring->D()) {}

TPoly::TPoly(TRingPtr ring, int valid_through) : ring_(std::move(ring)) {
  valid_ = std::clamp(valid_through, -1, ring_->D());
  c_.assign(ring_->count_upto(valid_), Rat(0));
}

TPoly TPoly::constant(TRingPtr ring, const Rat& c) {
  TPoly p(std::move(ring));
  p.c_[0] = c;
  return p;
}

TPoly TPoly::variable(TRingPtr ring, int k) {
  if (k < 1 || k > ring->K()) throw ConfigError("t_" + std::to_string(k) + " outside 1..K");
  TRing::Exponents e(ring->K(), 0);
  e[k - 1] = 1;
  return monomial(std::move(ring), e, Rat(1));
}

TPoly TPoly::monomial(TRingPtr ring, const TRing::Exponents& e, const Rat& c) {
  TPoly p(ring);
  if (auto idx = ring->index_of(e)) p.c_[*idx] = c;
  return p;
}

TPoly TPoly::truncated(int valid_through) const {
  if (valid_through >= valid_) return *this;
  TPoly r(ring_, valid_through);
  std::copy_n(c_.begin(), r.c_.size(), r.c_.begin());
  return r;
}

const Rat& TPoly::coeff(std::size_t idx) const {
  if (idx >= c_.size()) return zero_rat();
  return c_[idx];
}

Rat TPoly::coeff(const TRing::Exponents& e) const {
  auto idx = ring_->index_of(e);
  return idx ? coeff(*idx) : Rat(0);
}

bool TPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::optional<int> TPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return ring_->weight(i);
  return std::nullopt;
}

bool TPoly::is_weighted_homogeneous(int w) const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0 && ring_->weight(i) != w) return false;
  return true;
}

void TPoly::check_same_ring(const TPoly& o) const {
  if (!ring_ || !o.ring_) throw ConfigError("TPoly without ring");
  if (ring_ != o.ring_ && !ring_->same_shape(*o.ring_))
    throw ConfigError("TPoly caps differ: (K,D) = (" + std::to_string(ring_->K()) + "," +
                      std::to_string(ring_->D()) + ") vs (" + std::to_string(o.ring_->K()) +
                      "," + std::to_string(o.ring_->D()) + ")");
}

TPoly TPoly::operator+(const TPoly& o) const {
  check_same_ring(o);
  TPoly r(ring_, std::min(valid_, o.valid_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  check_same_ring(o);
  if (o.valid_ < valid_) *this = truncated(o.valid_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TPoly TPoly::operator-(const TPoly& o) const {
  check_same_ring(o);
  TPoly r(ring_, std::min(valid_, o.valid_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
  check_same_ring(o);
  TPoly r(ring_, std::min(valid_, o.valid_));
  const std::size_t n = r.c_.size();
  Rat tmp;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (const auto& pr : ring_->products(i)) {
      if (pr.result >= n) continue;
      const Rat& b = o.c_[pr.other];
      if (sgn(b) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), c_[i].get_mpq_t(), b.get_mpq_t());
      r.c_[pr.result] += tmp;
    }
  }
  return r;
}

TPoly TPoly::operator*(const Rat& s) const {
  TPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

TPoly TPoly::inverse() const {
  if (valid_ < 0) return TPoly(ring_, -1);
  const Rat& c0 = coeff(0);
  if (c0 == 0) throw NotInvertibleError("TPoly with zero constant term is not invertible");
  Rat inv0 = 1 / c0;
  // x = c0 (1 + y), y without constant term; y^n vanishes for n > valid.
  TPoly y = *this * inv0;
  y.c_[0] = 0;
  TPoly neg_y = -y;
  TPoly acc = constant(ring_, Rat(1)).truncated(valid_);
  TPoly power = acc;
  for (int n = 1; n <= valid_; ++n) {
    power = power * neg_y;
    if (power.is_zero()) break;
    acc += power;
  }
  return acc * inv0;
}

TPoly TPoly::diff(int k) const {
  if (k < 1 || k > ring_->K()) throw ConfigError("d/dt_" + std::to_string(k) + " outside 1..K");
  TPoly r(ring_, valid_ - k);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    auto d = ring_->derivative(i, k);
    if (!d || d->result >= r.c_.size()) continue;
    r.c_[d->result] += c_[i] * d->factor;
  }
  return r;
}

Rat TPoly::evaluate(std::span<const Rat> c) const {
  Rat acc = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rat term = c_[i];
    const auto& e = ring_->exponents(i);
    for (int k = 0; k < ring_->K() && sgn(term) != 0; ++k) {
      if (e[k] == 0) continue;
      Rat ck = k < static_cast<int>(c.size()) ? c[k] : Rat(0);
      term *= pow(ck, e[k]);
    }
    acc += term;
  }
  return acc;
}

bool TPoly::operator==(const TPoly& o) const {
  check_same_ring(o);
  return valid_ == o.valid_ && c_ == o.c_;
}

std::string TPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    const auto& e = ring_->exponents(i);
    for (int k = 0; k < ring_->K(); ++k) {
      if (e[k] == 0) continue;
      os << "*t" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  if (first) os << "0";
  os << " [+O(deg>" << valid_ << ")]";
  return os.str();
}

bool equal_through_validity(const TPoly& a, const TPoly& b) {
  int v = std::min(a.valid_through(), b.valid_through());
  return a.truncated(v) == b.truncated(v);
}

}  // namespace kplab
