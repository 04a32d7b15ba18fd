#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kplab {

/// Weakly decreasing list of positive parts; the empty list is the empty
/// partition.
class Partition {
 public:
  Partition() = default;
  /// Throws ConfigError unless parts are weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 1-based i; 0 beyond the length.
  int part(int i) const;
  Partition conjugate() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Box (i, j): row i, column j, both 1-based.
using Box = std::pair<int, int>;

/// All partitions of size <= max_size, ordered by size and then by decreasing
/// lexicographic order of the parts: (), (1), (2), (1,1), (3), (2,1), ...
std::vector<Partition> enumerate_partitions(int max_size);
/// Partitions of exactly n, (n) first.
std::vector<Partition> partitions_of(int n);

/// kappa = 2 * sum of contents (j - i).
long kappa(const Partition& lambda);
/// kappa via sum lambda_i (lambda_i - 2i + 1).
long kappa_by_rows(const Partition& lambda);

std::vector<Box> boxes(const Partition& lambda);
std::map<Box, int> hooks(const Partition& lambda);

struct HookShape {
  int arm;
  int leg;
};
/// lambda = (arm + 1, 1^leg); the empty partition is not a hook.
std::optional<HookShape> is_hook(const Partition& lambda);

}  // namespace kplab
