#include "kplab/grid_coeff.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "kplab/errors.hpp"

namespace kplab {

GridCoeff::GridCoeff(Rat lo, Rat step, std::vector<TPoly> samples)
    : lo_(std::move(lo)), step_(std::move(step)), samples_(std::move(samples)) {
  if (sgn(step_) <= 0) throw ConfigError("grid step must be positive");
  if (samples_.empty()) throw WindowError("empty grid window");
}

GridCoeff GridCoeff::constant(TPoly value) {
  GridCoeff g;
  g.constant_ = std::move(value);
  return g;
}

Rat GridCoeff::hi() const { return lo_ + step_ * Rat(static_cast<long>(samples_.size()) - 1); }

const TRingPtr& GridCoeff::ring_ptr() const {
  return constant_ ? constant_->ring_ptr() : samples_.front().ring_ptr();
}

bool GridCoeff::contains(const Rat& s) const {
  if (constant_) return true;
  if (s < lo_ || s > hi()) return false;
  return is_integer((s - lo_) / step_);
}

const TPoly& GridCoeff::at(const Rat& s) const {
  if (constant_) return *constant_;
  if (!contains(s))
    throw WindowError("s = " + s.get_str() + " outside grid window [" + lo_.get_str() + ", " +
                      hi().get_str() + "]");
  return samples_[static_cast<std::size_t>(to_long((s - lo_) / step_, "grid index"))];
}

std::vector<Rat> GridCoeff::points() const {
  std::vector<Rat> p;
  for (std::size_t i = 0; i < samples_.size(); ++i) p.push_back(lo_ + step_ * Rat(static_cast<long>(i)));
  return p;
}

template <class F>
GridCoeff GridCoeff::map(F&& f) const {
  if (constant_) return constant(f(*constant_));
  std::vector<TPoly> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(f(s));
  return GridCoeff(lo_, step_, std::move(out));
}

template <class F>
GridCoeff GridCoeff::combine(const GridCoeff& o, F&& f) const {
  if (constant_ && o.constant_) return constant(f(*constant_, *o.constant_));
  if (constant_) return o.map([&](const TPoly& b) { return f(*constant_, b); });
  if (o.constant_) return map([&](const TPoly& a) { return f(a, *o.constant_); });
  if (step_ != o.step_) throw WindowError("grid steps differ");
  if (!is_integer((lo_ - o.lo_) / step_)) throw WindowError("grid points are not aligned");
  Rat lo = std::max(lo_, o.lo_);
  Rat hi = std::min(this->hi(), o.hi());
  if (lo > hi)
    throw WindowError("validity windows [" + lo_.get_str() + ", " + this->hi().get_str() + "] and [" +
                      o.lo_.get_str() + ", " + o.hi().get_str() + "] do not overlap");
  std::vector<TPoly> out;
  for (Rat s = lo; s <= hi; s += step_) out.push_back(f(at(s), o.at(s)));
  return GridCoeff(lo, step_, std::move(out));
}

GridCoeff GridCoeff::operator+(const GridCoeff& o) const {
  return combine(o, [](const TPoly& a, const TPoly& b) { return a + b; });
}
GridCoeff GridCoeff::operator-(const GridCoeff& o) const {
  return combine(o, [](const TPoly& a, const TPoly& b) { return a - b; });
}
GridCoeff GridCoeff::operator*(const GridCoeff& o) const {
  return combine(o, [](const TPoly& a, const TPoly& b) { return a * b; });
}
GridCoeff GridCoeff::operator-() const {
  return map([](const TPoly& a) { return -a; });
}
GridCoeff GridCoeff::operator*(const Rat& c) const {
  return map([&](const TPoly& a) { return a * c; });
}

GridCoeff GridCoeff::shifted(const Rat& alpha) const {
  if (constant_) return *this;
  if (!is_integer(alpha / step_))
    throw LatticeError("shift " + alpha.get_str() + " is not a multiple of the grid step " + step_.get_str());
  GridCoeff r = *this;
  r.lo_ = lo_ - alpha;
  return r;
}

GridCoeff GridCoeff::inverse() const {
  try {
    return map([](const TPoly& a) { return a.inverse(); });
  } catch (const NotInvertibleError&) {
    throw NotInvertibleError("grid coefficient has a zero constant term");
  }
}

GridCoeff GridCoeff::diff(int k) const {
  return map([k](const TPoly& a) { return a.diff(k); });
}

GridCoeff GridCoeff::truncated(int valid_through) const {
  return map([valid_through](const TPoly& a) { return a.truncated(valid_through); });
}

GridCoeff GridCoeff::restricted(const Rat& lo, const Rat& hi) const {
  if (constant_) return *this;
  std::vector<TPoly> out;
  Rat first;
  bool have = false;
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    Rat s = lo_ + step_ * Rat(static_cast<long>(i));
    if (s < lo || s > hi) continue;
    if (!have) first = s;
    have = true;
    out.push_back(samples_[i]);
  }
  if (!have) throw WindowError("restriction leaves no grid point");
  return GridCoeff(first, step_, std::move(out));
}

bool GridCoeff::is_zero() const {
  if (constant_) return constant_->is_zero();
  return std::all_of(samples_.begin(), samples_.end(), [](const TPoly& p) { return p.is_zero(); });
}

bool GridCoeff::exactly_zero() const { return constant_ && constant_->exact_zero(); }

int GridCoeff::validity() const {
  if (constant_) return constant_->valid_through();
  int v = INT_MAX;
  for (const auto& s : samples_) v = std::min(v, s.valid_through());
  return v;
}

std::size_t GridCoeff::assertable_count() const {
  if (constant_) return constant_->assertable_count();
  std::size_t n = 0;
  for (const auto& s : samples_) n += s.assertable_count();
  return n;
}

Rat GridCoeff::magnitude() const {
  Rat m = 0;
  auto one = [&](const TPoly& p) {
    for (const auto& c : p.coefficients()) m = std::max(m, Rat(abs(c)));
  };
  if (constant_) {
    one(*constant_);
  } else {
    for (const auto& s : samples_) one(s);
  }
  return m;
}

std::string GridCoeff::to_string() const {
  if (constant_) return constant_->to_string();
  std::ostringstream os;
  os << "grid[" << lo_.get_str() << ".." << hi().get_str() << " step " << step_.get_str() << "]{";
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (i) os << "; ";
    os << samples_[i].to_string();
  }
  os << "}";
  return os.str();
}

}  // namespace kplab
