#include "doctest.h"
#include "kplab/errors.hpp"
#include "kplab/schur.hpp"
#include "kplab/tau.hpp"
#include "oracles.hpp"

using namespace kplab;

TEST_CASE("family names round-trip") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::General, Family::GBIFinite, Family::GBIN,
                   Family::GRR})
    CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("C") == Family::C);
  CHECK_THROWS_AS(parse_family("z"), ConfigError);
}

TEST_CASE("c-vectors of the families") {
  ParamEnv generic = ParamEnv::generic(Rat(2), 1, Rat(3));
  auto a = cvector(Family::A, generic, 4);
  CHECK(a[1] == 1);
  CHECK(a[2] == 0);
  ParamEnv with_a = generic;
  with_a.a = Rat(3, 2);
  auto b = cvector(Family::B, with_a, 3);
  CHECK(b[1] == Rat(3, 2));
  CHECK(b[3] == Rat(1, 2));
  ParamEnv topo = ParamEnv::topological(Rat(1, 2), Rat(1));
  auto c = cvector(Family::C, topo, 3);
  CHECK(c[1] == Rat(4, 3));
  CHECK(c[2] == Rat(1, 2) / (1 - Rat(1, 16)));
  ParamEnv topo_d = topo;
  topo_d.a = Rat(2);
  auto d = cvector(Family::D, topo_d, 3);
  // (1 - q^{2k}) / (k (1 - q^k)) = (1 + q^k) / k
  CHECK(d[1] == Rat(5, 4));
  CHECK(d[2] == (1 + Rat(1, 16)) / 2);
  auto fin = cvector_finite({Rat(1), Rat(2)}, 4);
  CHECK(fin[2] == 2);
  CHECK(fin[4] == 0);
}

TEST_CASE("Schur values match the bialternant formula on finite alphabets") {
  std::vector<std::vector<Rat>> alphabets = {
      {Rat(1, 2), Rat(1, 3)}, {Rat(2), Rat(-1), Rat(1, 5)}, {Rat(1), Rat(2), Rat(-1, 2), Rat(1, 3)}};
  for (const auto& x : alphabets) {
    CVector c{oracle::power_sums_over_k(x, 7), Family::General};
    for (const auto& lambda : enumerate_partitions(7)) {
      CAPTURE(lambda.to_string());
      CHECK(schur_at(lambda, c) == oracle::schur_bialternant(lambda, x));
    }
  }
}

TEST_CASE("case (a): S_lambda(1, 0, 0, ...) = 1 / prod of hooks") {
  ParamEnv env = ParamEnv::generic(Rat(2), 1, Rat(3));
  auto c = cvector(Family::A, env, 8);
  for (const auto& lambda : enumerate_partitions(8)) {
    Rat expect(1, oracle::hook_product(lambda));
    CHECK(schur_at(lambda, c) == expect);
    CHECK(schur_special_closed(lambda, Family::A, env) == expect);
  }
}

TEST_CASE("case (c): closed form against the determinant") {
  for (Rat sigma : {Rat(1, 4), Rat(1, 2), Rat(3, 8)}) {
    ParamEnv env = ParamEnv::topological(sigma, Rat(1));
    auto c = cvector(Family::C, env, 6);
    for (const auto& lambda : enumerate_partitions(6)) {
      CAPTURE(lambda.to_string());
      CHECK(schur_at(lambda, c) == schur_special_closed(lambda, Family::C, env));
    }
  }
}

TEST_CASE("closed form detects a perturbed c-vector") {
  ParamEnv env = ParamEnv::topological(Rat(1, 2), Rat(1));
  auto c = cvector(Family::C, env, 4);
  c.values[1] += Rat(1, 1000);
  int mismatches = 0;
  for (const auto& lambda : enumerate_partitions(4))
    if (schur_at(lambda, c) != schur_special_closed(lambda, Family::C, env)) ++mismatches;
  CHECK(mismatches > 0);
}

TEST_CASE("Schur polynomials are weighted homogeneous and evaluate to schur_at") {
  auto ring = TRing::make(6, 6);
  CVector c{{Rat(1, 2), Rat(-1, 3), Rat(2), Rat(1, 7), Rat(0), Rat(3, 5)}, Family::General};
  SchurTable table(ring);
  for (const auto& lambda : enumerate_partitions(6)) {
    const TPoly& s = table(lambda);
    CHECK(s.is_weighted_homogeneous(lambda.size()));
    CHECK(s.evaluate(c.values) == schur_at(lambda, c));
    CHECK(s == schur_poly(lambda, ring));
  }
}

TEST_CASE("one-row Schur polynomials: S_n(t) for t = (x, 0, ...) is x^n / n!") {
  auto ring = TRing::make(3, 5);
  auto rows = one_row_schur(ring);
  REQUIRE(rows.size() == 6);
  for (int n = 0; n <= 5; ++n) CHECK(rows[n].coeff(TRing::Exponents{n, 0, 0}) == Rat(1, oracle::factorial(n)));
}

TEST_CASE("Miwa shift obeys the vertical-strip rule") {
  auto ring = TRing::make(6, 6);
  SchurTable table(ring);
  for (const auto& lambda : enumerate_partitions(5)) {
    CAPTURE(lambda.to_string());
    auto miwa = miwa_expand(table(lambda), 5);
    std::vector<TPoly> expect(6, TPoly(ring));
    for (const auto& mu : oracle::vertical_strip_removals(lambda)) {
      int n = lambda.size() - mu.size();
      Rat sign = (n % 2) ? Rat(-1) : Rat(1);
      expect[n] = expect[n] + table(mu) * sign;
    }
    for (int n = 0; n <= 5; ++n) {
      CHECK(miwa[n].valid_through() == 6 - n);
      CHECK(equal_through_validity(miwa[n], expect[n]));
    }
  }
}

TEST_CASE("pole of a topological c-vector") {
  CHECK_THROWS(ParamEnv::topological(Rat(-1), Rat(1)));
}
