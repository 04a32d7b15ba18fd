#include "doctest.h"
#include "kplab/beta_scalar.hpp"
#include "kplab/errors.hpp"
#include "kplab/param_env.hpp"
#include "kplab/rational.hpp"

using namespace kplab;

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat(" 6/8 ") == Rat(3, 4));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("-1.5") == Rat(-3, 2));
  CHECK(parse_rat("0.1") == Rat(1, 10));
  // leading zeros are decimal, not octal
  CHECK(parse_rat("010") == Rat(10));
  CHECK(parse_rat("010/0256") == Rat(5, 128));
  CHECK(parse_rat("1.05") == Rat(21, 20));
  CHECK_THROWS_AS(parse_rat(""), ConfigError);
  CHECK_THROWS_AS(parse_rat("abc"), ConfigError);
  CHECK_THROWS_AS(parse_rat("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rat("1e-3"), ConfigError);
}

TEST_CASE("integer powers and exact roots") {
  CHECK(pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(pow(Rat(5), 0) == Rat(1));
  CHECK_THROWS_AS(pow(Rat(0), -1), NotInvertibleError);
  REQUIRE(exact_root(Rat(9, 64), 2));
  CHECK(*exact_root(Rat(9, 64), 2) == Rat(3, 8));
  CHECK(*exact_root(Rat(-8, 27), 3) == Rat(-2, 3));
  CHECK_FALSE(exact_root(Rat(2), 2));
  CHECK_FALSE(exact_root(Rat(-4), 2));
  CHECK(to_long(Rat(6, 3), "x") == 2);
  CHECK_THROWS_AS(to_long(Rat(1, 2), "x"), LatticeError);
}

TEST_CASE("beta scalars form a truncated polynomial ring") {
  BetaScalar b = BetaScalar::beta();
  BetaScalar two(Rat(2));
  BetaScalar p = (b + two) * (b - two);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.coefficient(1) == 0);
  CHECK(p.coefficient(0) == -4);
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.evaluate(3.0) == doctest::Approx(5.0));
}

TEST_CASE("generic parameter points stay on the lattice") {
  ParamEnv env = ParamEnv::generic(Rat(2), 4, Rat(3, 2));
  CHECK(env.exp_beta(Rat(1)) == Rat(16));
  CHECK(env.exp_beta(Rat(-1, 2)) == Rat(1, 4));
  CHECK(env.exp_beta(Rat(3, 4)) == Rat(8));
  CHECK_THROWS_AS(env.exp_beta(Rat(1, 3)), LatticeError);
  CHECK(env.Q() == Rat(3, 2));
  CHECK(env.Q_pow(Rat(2)) == Rat(9, 4));
  CHECK_THROWS_AS(env.Q_pow(Rat(1, 2)), LatticeError);
}

TEST_CASE("tied Q folds into the lattice base") {
  ParamEnv env = ParamEnv::tied(Rat(3), 2, Rat(2));
  REQUIRE(env.Q_tie());
  CHECK(env.Q() == Rat(9));
  CHECK(env.Q_pow(Rat(1, 2)) == Rat(3));
  CHECK(env.Q_pow(Rat(1, 2)) == env.exp_beta(Rat(1, 2)));
  CHECK_THROWS_AS(env.Q_pow(Rat(1, 4)), LatticeError);
}

TEST_CASE("topological specialisation: q = sigma^2, Q = sigma, e^beta = q^(tau+1)") {
  for (Rat tau : {Rat(0), Rat(1), Rat(2), Rat(-1, 3), Rat(1, 2)}) {
    // 1/64 has square and cube roots, as the rational framings need
    ParamEnv env = ParamEnv::topological(Rat(1, 64), tau);
    CAPTURE(tau.get_str());
    CHECK(env.q() == Rat(1, 4096));
    CHECK(env.Q() == Rat(1, 64));
    Rat e = env.exp_beta(Rat(1));
    Rat tp1 = tau + 1;
    // e^beta = q^{tau+1}: compare e^{beta den} with q^{num}
    long num = tp1.get_num().get_si(), den = tp1.get_den().get_si();
    CHECK(pow(e, den) == pow(env.q(), num));
    CHECK(env.frac_order() == 1 / tp1);
    CHECK(env.shift_denominator() == num);
  }
  CHECK_THROWS(ParamEnv::topological(Rat(1, 4), Rat(-1)));
  CHECK_THROWS(ParamEnv::topological(Rat(1), Rat(1)));
  CHECK_THROWS_AS(ParamEnv::topological(Rat(1, 4), Rat(-1, 3)), LatticeError);
}

TEST_CASE("parameter descriptions are exact strings") {
  auto d = ParamEnv::generic(Rat(2, 3), 5, Rat(7, 11)).describe();
  CHECK(d.at("g") == "2/3");
  CHECK(d.at("M") == "5");
  CHECK(d.at("Q") == "7/11");
}
