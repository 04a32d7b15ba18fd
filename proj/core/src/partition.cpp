#include "kplab/partition.hpp"

#include <functional>

#include "kplab/errors.hpp"

namespace kplab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ConfigError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ConfigError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    for (int j = 1; j <= parts_[0]; ++j) {
      int count = 0;
      for (int p : parts_)
        if (p >= j) ++count;
      c.push_back(count);
    }
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  // Largest part list first: (n), (n-1,1), ..., (1^n).
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

long kappa(const Partition& lambda) {
  long sum = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) sum += j - i;
  return 2 * sum;
}

long kappa_by_rows(const Partition& lambda) {
  long sum = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    long li = lambda.part(i);
    sum += li * (li - 2 * i + 1);
  }
  return sum;
}

std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) out.emplace_back(i, j);
  return out;
}

std::map<Box, int> hooks(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  std::map<Box, int> out;
  for (const auto& [i, j] : boxes(lambda)) {
    int arm = lambda.part(i) - j;
    int leg = conj.part(j) - i;
    out[{i, j}] = arm + leg + 1;
  }
  return out;
}

std::optional<HookShape> is_hook(const Partition& lambda) {
  if (lambda.empty()) return std::nullopt;
  for (int i = 2; i <= lambda.length(); ++i)
    if (lambda.part(i) != 1) return std::nullopt;
  return HookShape{lambda.part(1) - 1, lambda.length() - 1};
}

}  // namespace kplab
