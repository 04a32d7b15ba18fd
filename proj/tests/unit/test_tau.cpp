#include <memory>

#include "doctest.h"
#include "kplab/errors.hpp"
#include "kplab/tau.hpp"
#include "oracles.hpp"

using namespace kplab;

namespace {

std::vector<ParamEnv> weight_points() {
  return {ParamEnv::generic(Rat(3, 2), 8, Rat(9, 4)), ParamEnv::generic(Rat(2), 8, Rat(1, 4)),
          ParamEnv::tied(Rat(5, 7), 8, Rat(2))};
}

// h_n from its definition e^{beta (n-1/2)^2/2} Q^{n-1/2}
Rat h_def(long n, const ParamEnv& env) {
  Rat half = Rat(n) - Rat(1, 2);
  return env.exp_beta(half * half / 2) * env.Q_pow(half);
}

Rat h_empty_def(long s, const ParamEnv& env) {
  Rat r = 1;
  if (s > 0)
    for (long n = 1; n <= s; ++n) r *= h_def(n, env);
  else
    for (long n = s + 1; n <= 0; ++n) r /= h_def(n, env);
  return r;
}

Rat contents_def(const Partition& lambda, long s, const ParamEnv& env) {
  Rat r = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      long n = j - i + s + 1;
      r *= h_def(n, env) / h_def(n - 1, env);
    }
  return r;
}

}  // namespace

TEST_CASE("h_n and the empty weight") {
  for (const auto& env : weight_points()) {
    for (long n = -3; n <= 4; ++n) CHECK(h_n(n, env) == h_def(n, env));
    CHECK(h_weight(Partition(), Rat(0), env) == 1);
    CHECK(h_weight(Partition({1}), Rat(0), env) == env.Q());
    CHECK(h_weight(Partition(), Rat(2), env) == env.exp_beta(Rat(5, 4)) * env.Q_pow(Rat(2)));
  }
}

TEST_CASE("two definitions of h_lambda(s) agree") {
  for (const auto& env : weight_points()) {
    for (long s = -3; s <= 3; ++s) {
      for (const auto& lambda : enumerate_partitions(6)) {
        CAPTURE(lambda.to_string());
        CAPTURE(s);
        Rat expect = h_empty_def(s, env) * contents_def(lambda, s, env);
        CHECK(h_weight(lambda, Rat(s), env) == expect);
        CHECK(h_weight_product(lambda, s, env) == expect);
        CHECK(h_norm(lambda, Rat(s), env) == contents_def(lambda, s, env));
      }
    }
  }
}

TEST_CASE("off-lattice weights are rejected") {
  ParamEnv env = ParamEnv::generic(Rat(2), 1, Rat(3));
  CHECK_THROWS_AS(h_weight(Partition({1}), Rat(1), env), LatticeError);
}

TEST_CASE("tau at t = 0 is the empty weight") {
  ParamEnv env = ParamEnv::generic(Rat(3, 2), 8, Rat(9, 4));
  auto ring = TRing::make(4, 4);
  auto c = cvector(Family::A, env, 4);
  for (long s = -2; s <= 2; ++s) CHECK(tau(Rat(s), c, ring, env).value.constant_term() == h_empty_def(s, env));
}

TEST_CASE("case (a) at s = 0 through degree 2") {
  ParamEnv env = ParamEnv::generic(Rat(2), 2, Rat(3));
  auto c = cvector(Family::A, env, 2);
  auto t1 = tau(Rat(0), c, TRing::make(2, 1), env).value;
  CHECK(t1.constant_term() == 1);
  CHECK(t1.coeff(TRing::Exponents{1, 0}) == env.Q());
  auto t2 = tau(Rat(0), c, TRing::make(2, 2), env).value;
  // S_(2)(t) = t1^2/2 + t2, S_(1,1)(t) = t1^2/2 - t2, and S_(2)(c) = S_(1,1)(c) = 1/2
  Rat h2 = h_weight(Partition({2}), Rat(0), env), h11 = h_weight(Partition({1, 1}), Rat(0), env);
  CHECK(t2.coeff(TRing::Exponents{0, 1}) == (h2 - h11) / 2);
  CHECK(t2.coeff(TRing::Exponents{2, 0}) == (h2 + h11) / 4);
}

TEST_CASE("grading: a larger cap leaves low-degree coefficients unchanged") {
  ParamEnv env = ParamEnv::topological(Rat(1, 2), Rat(1));
  auto c = cvector(Family::C, env, 6);
  auto small = tau_normalized(Rat(1), c, TRing::make(6, 4), env).value;
  auto big = tau_normalized(Rat(1), c, TRing::make(6, 6), env).value;
  const TRing& rs = small.ring();
  for (std::size_t i = 0; i < rs.size(); ++i) CHECK(small.coeff(i) == big.coeff(rs.exponents(i)));
}

TEST_CASE("wave amplitudes from the Miwa shift") {
  ParamEnv env = ParamEnv::generic(Rat(3, 2), 8, Rat(9, 4));
  auto envp = std::make_shared<const ParamEnv>(env);
  CVector c{{Rat(1, 2), Rat(-1, 3), Rat(2), Rat(1, 5), Rat(1), Rat(-2)}, Family::General};
  auto ring = TRing::make(5, 5);
  WaveBuilder wb(c, envp, ring, 4);
  for (long s = -2; s <= 2; ++s) {
    CAPTURE(s);
    auto w = wb.at(Rat(s));
    REQUIRE(w.size() == 5);
    CHECK(w[0] == TPoly::constant(ring, Rat(1)));
    // first order of the Miwa shift: w_1 = -d/dt_1 log tau(s-1, t)
    TPoly tau_prev = tau(Rat(s - 1), c, ring, env).value;
    TPoly oracle_w1 = -(tau_prev.diff(1) * tau_prev.inverse());
    CHECK(w[1].valid_through() == 4);
    CHECK(equal_through_validity(w[1], oracle_w1));
    CHECK(w[1].constant_term() == -c[1] * env.Q() * env.exp_beta(Rat(s - 1)));
    // t = 0: only single columns (1^n) survive S_lambda(-[y])
    for (int n = 1; n <= 4; ++n) {
      Partition col(std::vector<int>(n, 1));
      Rat sign = (n % 2) ? Rat(-1) : Rat(1);
      CHECK(w[n].constant_term() == sign * h_norm(col, Rat(s - 1), env) * schur_at(col, c));
      CHECK(w[n].valid_through() == 5 - n);
    }
  }
}

TEST_CASE("vanishing weights give the trivial dressing") {
  ParamEnv env = ParamEnv::generic(Rat(2), 1, Rat(3));
  CVector zero{std::vector<Rat>(4, Rat(0)), Family::General};
  auto ring = TRing::make(4, 4);
  WaveBuilder wb(zero, std::make_shared<const ParamEnv>(env), ring, 3);
  auto w = wb.at(Rat(0));
  for (int n = 1; n <= 3; ++n) CHECK(w[n].is_zero());
}

TEST_CASE("ring must carry every needed time") {
  ParamEnv env = ParamEnv::generic(Rat(2), 1, Rat(3));
  auto c = cvector(Family::A, env, 6);
  CHECK_THROWS_AS(WaveBuilder(c, std::make_shared<const ParamEnv>(env), TRing::make(3, 6), 3), ConfigError);
}

TEST_CASE("grid sampling is independent of the worker count") {
  ParamEnv env = ParamEnv::generic(Rat(2), 1, Rat(3));
  auto c = cvector(Family::A, env, 4);
  WaveBuilder wb(c, std::make_shared<const ParamEnv>(env), TRing::make(4, 4), 3);
  auto serial = wb.grid(Rat(-3), Rat(3), Rat(1), 1);
  auto parallel = wb.grid(Rat(-3), Rat(3), Rat(1), 4);
  REQUIRE(serial.w.size() == 7);
  for (std::size_t i = 0; i < serial.w.size(); ++i)
    for (int n = 0; n <= 3; ++n) CHECK(serial.w[i][n] == parallel.w[i][n]);
}
