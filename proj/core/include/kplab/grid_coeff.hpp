#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kplab/rational.hpp"
#include "kplab/tpoly.hpp"

namespace kplab {

/// Coefficient function known only at the grid points lo, lo+step, ..., hi.
///
/// Each sample is a t-series with its own validity degree. A GridCoeff may
/// also be a constant, which is valid at every s. Reading outside the window
/// throws WindowError.
class GridCoeff {
 public:
  GridCoeff() = default;
  GridCoeff(Rat lo, Rat step, std::vector<TPoly> samples);
  static GridCoeff constant(TPoly value);

  bool is_constant() const { return constant_.has_value(); }
  const TPoly& constant_value() const { return *constant_; }
  const Rat& lo() const { return lo_; }
  Rat hi() const;
  const Rat& step() const { return step_; }
  std::size_t size() const { return samples_.size(); }
  const std::vector<TPoly>& samples() const { return samples_; }
  const TRingPtr& ring_ptr() const;

  bool contains(const Rat& s) const;
  const TPoly& at(const Rat& s) const;
  /// Grid points covered (empty for constants).
  std::vector<Rat> points() const;

  GridCoeff operator+(const GridCoeff& o) const;
  GridCoeff operator-(const GridCoeff& o) const;
  GridCoeff operator-() const;
  GridCoeff operator*(const GridCoeff& o) const;
  GridCoeff operator*(const Rat& c) const;

  /// s -> s + alpha; the window moves to [lo - alpha, hi - alpha].
  GridCoeff shifted(const Rat& alpha) const;
  GridCoeff inverse() const;
  GridCoeff diff(int k) const;
  GridCoeff restricted(const Rat& lo, const Rat& hi) const;
  GridCoeff truncated(int valid_through) const;

  /// Zero through validity at every sample.
  bool is_zero() const;
  /// Constant and exactly zero through D; sampled data never qualifies.
  bool exactly_zero() const;
  int validity() const;
  std::size_t assertable_count() const;
  Rat magnitude() const;

  std::string to_string() const;

 private:
  template <class F>
  GridCoeff combine(const GridCoeff& o, F&& f) const;
  template <class F>
  GridCoeff map(F&& f) const;

  std::optional<TPoly> constant_;
  Rat lo_ = 0;
  Rat step_ = 1;
  std::vector<TPoly> samples_;
};

}  // namespace kplab
