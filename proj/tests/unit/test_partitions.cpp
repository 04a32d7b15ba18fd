#include <set>

#include "doctest.h"
#include "kplab/errors.hpp"
#include "kplab/partition.hpp"
#include "oracles.hpp"

using namespace kplab;

TEST_CASE("partition counts match the generating function") {
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    auto ps = partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == oracle::partition_count(n));
    std::set<Partition> distinct(ps.begin(), ps.end());
    CHECK(distinct.size() == ps.size());
    for (const auto& p : ps) CHECK(p.size() == n);
  }
  long total = 0;
  for (int n = 0; n <= 4; ++n) total += oracle::partition_count(n);
  CHECK(static_cast<long>(enumerate_partitions(4).size()) == total);
  CHECK(total == 12);
}

TEST_CASE("enumeration order") {
  auto ps = enumerate_partitions(3);
  REQUIRE(ps.size() == 7);
  CHECK(ps[0].empty());
  CHECK(ps[1] == Partition({1}));
  CHECK(ps[2] == Partition({2}));
  CHECK(ps[3] == Partition({1, 1}));
  CHECK(ps[4] == Partition({3}));
  CHECK(ps[5] == Partition({2, 1}));
  CHECK(ps[6] == Partition({1, 1, 1}));
}

TEST_CASE("invalid parts are rejected") {
  CHECK_THROWS_AS(Partition({1, 2}), ConfigError);
  CHECK_THROWS_AS(Partition({2, 0}), ConfigError);
  CHECK_THROWS_AS(Partition({-1}), ConfigError);
}

TEST_CASE("conjugation is an involution and swaps rows with columns") {
  for (const auto& p : enumerate_partitions(9)) {
    auto c = p.conjugate();
    CHECK(c.conjugate() == p);
    CHECK(c.size() == p.size());
    CHECK(c.length() == (p.empty() ? 0 : p.part(1)));
    CHECK(kappa(c) == -kappa(p));
  }
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
}

TEST_CASE("kappa by contents and by rows agree") {
  CHECK(kappa(Partition({2, 1})) == 0);
  CHECK(kappa(Partition({3})) == 6);
  CHECK(kappa(Partition({1, 1, 1})) == -6);
  for (const auto& p : enumerate_partitions(10)) {
    long contents = 0;
    for (auto [i, j] : boxes(p)) contents += j - i;
    CHECK(kappa(p) == 2 * contents);
    CHECK(kappa_by_rows(p) == kappa(p));
  }
}

TEST_CASE("hook lengths give the standard tableau count") {
  for (const auto& p : enumerate_partitions(9)) {
    CAPTURE(p.to_string());
    auto h = hooks(p);
    CHECK(static_cast<int>(h.size()) == p.size());
    long prod = 1;
    for (const auto& [box, len] : h) prod *= len;
    CHECK(prod == oracle::hook_product(p));
    CHECK(oracle::factorial(p.size()) / prod == oracle::syt_count(p));
  }
}

TEST_CASE("hook shapes") {
  auto h = is_hook(Partition({4, 1, 1}));
  REQUIRE(h);
  CHECK(h->arm == 3);
  CHECK(h->leg == 2);
  CHECK_FALSE(is_hook(Partition({2, 2})));
  CHECK_FALSE(is_hook(Partition()));
  int hooks_of_6 = 0;
  for (const auto& p : partitions_of(6))
    if (is_hook(p)) ++hooks_of_6;
  CHECK(hooks_of_6 == 6);
}

TEST_CASE("text form") {
  CHECK(Partition().to_string() == "()");
  CHECK(Partition({3, 2, 2}).to_string() == "(3,2,2)");
  CHECK(Partition({3, 2, 2}).part(4) == 0);
}
