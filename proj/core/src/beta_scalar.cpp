#include "kplab/beta_scalar.hpp"

#include <algorithm>
#include <cmath>

#include "kplab/errors.hpp"

namespace kplab {

BetaScalar::BetaScalar(Rat c, int degree, int cap) : cap_(cap) { add_term(degree, c); }

void BetaScalar::add_term(int degree, const Rat& value) {
  if (value == 0) return;
  if (degree < 0 || degree > cap_)
    throw ConfigError("beta-degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(cap_));
  auto [it, inserted] = c_.try_emplace(degree, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) c_.erase(it);
  }
}

Rat BetaScalar::coefficient(int degree) const {
  auto it = c_.find(degree);
  return it == c_.end() ? Rat(0) : it->second;
}

int BetaScalar::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

BetaScalar BetaScalar::operator+(const BetaScalar& o) const {
  BetaScalar r = *this;
  r.cap_ = std::max(cap_, o.cap_);
  for (const auto& [d, v] : o.c_) r.add_term(d, v);
  return r;
}

BetaScalar BetaScalar::operator-() const {
  BetaScalar r = *this;
  for (auto& [d, v] : r.c_) v = -v;
  return r;
}

BetaScalar BetaScalar::operator-(const BetaScalar& o) const { return *this + (-o); }

BetaScalar BetaScalar::operator*(const BetaScalar& o) const {
  BetaScalar r;
  r.cap_ = std::max(cap_, o.cap_);
  for (const auto& [d1, v1] : c_)
    for (const auto& [d2, v2] : o.c_) r.add_term(d1 + d2, v1 * v2);
  return r;
}

BetaScalar BetaScalar::operator*(const Rat& s) const {
  BetaScalar r;
  r.cap_ = cap_;
  for (const auto& [d, v] : c_) r.add_term(d, v * s);
  return r;
}

double BetaScalar::evaluate(double beta) const {
  double acc = 0;
  for (const auto& [d, v] : c_) acc += v.get_d() * std::pow(beta, d);
  return acc;
}

std::string BetaScalar::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [d, v] : c_) {
    if (!s.empty()) s += " + ";
    s += v.get_str();
    if (d > 0) s += "*beta^" + std::to_string(d);
  }
  return s;
}

}  // namespace kplab
