#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Rat type and Partition container.

#include <functional>
#include <map>
#include <vector>

#include "kplab/partition.hpp"
#include "kplab/rational.hpp"

namespace oracle {

using kplab::Partition;
using kplab::Rat;

// Plain Gaussian elimination over Q.
inline Rat det(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

inline Rat ipow(const Rat& x, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// s_lambda(x_1..x_n) = det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}).
inline Rat schur_bialternant(const Partition& lambda, const std::vector<Rat>& x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return 0;
  std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n)), den(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      num[i][j] = ipow(x[i], lambda.part(j + 1) + n - 1 - j);
      den[i][j] = ipow(x[i], n - 1 - j);
    }
  return det(num) / det(den);
}

// Miwa variables of a finite alphabet: c_k = p_k(x) / k.
inline std::vector<Rat> power_sums_over_k(const std::vector<Rat>& x, int K) {
  std::vector<Rat> c(K);
  for (int k = 1; k <= K; ++k) {
    Rat p = 0;
    for (const auto& xi : x) p += ipow(xi, k);
    c[k - 1] = p / k;
  }
  return c;
}

inline long hook_product(const Partition& lambda) {
  auto conj = lambda.conjugate();
  long prod = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) prod *= (lambda.part(i) - j) + (conj.part(j) - i) + 1;
  return prod;
}

// Standard Young tableaux counted by removing corners one at a time.
inline long syt_count(const Partition& lambda) {
  static std::map<std::vector<int>, long> memo;
  if (lambda.size() <= 1) return 1;
  if (auto it = memo.find(lambda.parts()); it != memo.end()) return it->second;
  long total = 0;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    auto q = p;
    if (--q[i] == 0) q.pop_back();
    total += syt_count(Partition(q));
  }
  memo[p] = total;
  return total;
}

inline long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// mu with lambda / mu a vertical strip (at most one box removed per row).
inline std::vector<Partition> vertical_strip_removals(const Partition& lambda) {
  std::vector<Partition> out;
  const auto& p = lambda.parts();
  const std::size_t n = p.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> q = p;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) --q[i];
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (q[i] < q[i + 1]) ok = false;
    if (!ok) continue;
    while (!q.empty() && q.back() == 0) q.pop_back();
    out.emplace_back(q);
  }
  return out;
}

// Integer partitions counted by the generating function recurrence.
inline long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

}  // namespace oracle
