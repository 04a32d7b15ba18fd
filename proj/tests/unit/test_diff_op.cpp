#include <random>

#include "doctest.h"
#include "kplab/diff_op.hpp"
#include "kplab/errors.hpp"
#include "kplab/reduction.hpp"

using namespace kplab;

namespace {

ParamEnv env0() { return ParamEnv::generic(Rat(3, 2), 2, Rat(5, 3)); }

ExpCoeff ex(const ParamEnv& env, Rat v, Rat s1) { return ExpCoeff::exp_term(env, std::move(v), std::move(s1)); }

// 1 + sum_{n=1..3} (random) e^{beta k s} Lambda^{-n}
ExpOp random_unit(const OpContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), slope(-2, 2);
  ExpOp x = ExpOp::identity(ctx);
  for (int n = 1; n <= 3; ++n) {
    Rat v(num(rng), den(rng));
    v.canonicalize();
    x.add_term(Rat(-n), ex(*ctx.env, v, Rat(slope(rng), 2)));
  }
  return x;
}

}  // namespace

TEST_CASE("exp coefficients: shift, derivative, inverse") {
  ParamEnv env = env0();
  ExpCoeff c = ex(env, Rat(3), Rat(1));  // 3 e^{beta s}
  ExpCoeff sh = c.shifted(Rat(1), env);
  CHECK(sh == ex(env, 3 * env.exp_beta(Rat(1)), Rat(1)));
  ExpCoeff d = c.d_ds(env);
  CHECK(d.max_beta_degree() == 1);
  CHECK(d.beta_component(1) == c);
  CHECK(c * c.inverse(env) == ExpCoeff::constant(Rat(1)));
  CHECK_THROWS_AS((c + ExpCoeff::constant(Rat(1))).inverse(env), NotInvertibleError);
  CHECK(c.sample(Rat(2), env, Rat(0)) == 3 * env.exp_beta(Rat(2)));
}

TEST_CASE("normal ordering: Lambda f(s) = f(s+1) Lambda") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 1, 6);
  ExpOp f = ExpOp::monomial(ctx, Rat(0), ex(env, Rat(1), Rat(1)));
  ExpOp lhs = ExpOp::lambda(ctx, Rat(1)) * f;
  ExpOp rhs = ExpOp::monomial(ctx, Rat(1), ex(env, env.exp_beta(Rat(1)), Rat(1)));
  CHECK(residual_summary(lhs - rhs, Rat(-6), Rat(2)).zero);
  ExpOp comm = commutator(ExpOp::lambda(ctx, Rat(1)), f);
  const ExpCoeff* c1 = comm.find(Rat(1));
  REQUIRE(c1);
  CHECK(*c1 == ex(env, env.exp_beta(Rat(1)) - 1, Rat(1)));
}

TEST_CASE("fractional shifts live on the lattice") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 2, 6);
  ExpOp half = ExpOp::lambda(ctx, Rat(1, 2));
  ExpOp one = half * half;
  CHECK(one.coeffs().size() == 1);
  CHECK(one.find(Rat(1)) != nullptr);
  ExpOp x(ctx);
  CHECK_THROWS_AS(x.add_term(Rat(1, 3), ExpCoeff::constant(Rat(1))), LatticeError);
}

TEST_CASE("storage floor drops deep shifts and records it") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 1, 3);
  ExpOp a = ExpOp::lambda(ctx, Rat(-2));
  ExpOp p = a * a;
  CHECK(p.coeffs().empty());
  REQUIRE(p.floor());
  CHECK(*p.floor() == Rat(-3));
  CHECK_FALSE(p.exact());
}

TEST_CASE("recursive inverse agrees with the Neumann series") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 1, 6);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    ExpOp x = random_unit(ctx, rng);
    ExpOp inv = op_inv(x);
    ExpOp neu = op_inv_neumann(x);
    CHECK(residual_summary(inv - neu, Rat(-6), Rat(0)).zero);
    ExpOp id = ExpOp::identity(ctx);
    CHECK(residual_summary(x * inv - id, Rat(-6), Rat(0)).zero);
    CHECK(residual_summary(inv * x - id, Rat(-6), Rat(0)).zero);
  }
}

TEST_CASE("a unit with a scalar lead inverts too") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 1, 5);
  ExpOp x = ExpOp::monomial(ctx, Rat(0), ex(env, Rat(2), Rat(1)));
  x.add_term(Rat(-1), ExpCoeff::constant(Rat(1)));
  ExpOp r = x * op_inv(x) - ExpOp::identity(ctx);
  CHECK(residual_summary(r, Rat(-5), Rat(0)).zero);
  ExpOp bad = ExpOp::lambda(ctx, Rat(-1));
  CHECK_THROWS_AS(op_inv(bad), NotInvertibleError);
}

TEST_CASE("products are associative") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 1, 6);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    ExpOp a = random_unit(ctx, rng) * ExpOp::lambda(ctx, Rat(1));
    ExpOp b = random_unit(ctx, rng);
    ExpOp c = random_unit(ctx, rng) * ExpOp::lambda(ctx, Rat(2));
    ExpOp r = (a * b) * c - a * (b * c);
    auto floor = r.floor() ? *r.floor() : Rat(-6);
    CHECK(residual_summary(r, floor, Rat(3)).zero);
  }
}

TEST_CASE("exp and log are inverse on negative operators") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 1, 6);
  std::mt19937_64 rng(9);
  ExpOp x = random_unit(ctx, rng) - ExpOp::identity(ctx);
  ExpOp back = op_exp(op_log1p(x));
  CHECK(residual_summary(back - (ExpOp::identity(ctx) + x), Rat(-6), Rat(0)).zero);
  CHECK_THROWS_AS(op_exp(ExpOp::identity(ctx)), ConfigError);
}

TEST_CASE("conjugating Lambda by a dressing") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 1, 6);
  std::mt19937_64 rng(4);
  ExpOp w = random_unit(ctx, rng);
  ExpOp L = conjugate_shift(w, Rat(1));
  ExpOp rhs = w * ExpOp::lambda(ctx, Rat(1)) * op_inv(w);
  CHECK(residual_summary(L - rhs, Rat(-5), Rat(1)).zero);
  auto band = band_profile(L);
  REQUIRE(band.max);
  CHECK(*band.max == Rat(1));
  CHECK(*L.find(Rat(1)) == ExpCoeff::constant(Rat(1)));
}

TEST_CASE("projections split an operator") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 2, 4);
  ExpOp x(ctx);
  for (int k = -8; k <= 4; ++k) x.add_term(Rat(k, 2), ExpCoeff::constant(Rat(k)));
  ExpOp sum = project_nonneg(x) + project_neg(x);
  CHECK(residual_summary(sum - x, Rat(-4), Rat(2)).zero);
  ExpOp plus = project_nonneg(x), minus = project_neg(x);
  for (const auto& [a, c] : plus.coeffs()) CHECK(a >= 0);
  for (const auto& [a, c] : minus.coeffs()) CHECK(a < 0);
}

TEST_CASE("residual summaries count and locate") {
  ParamEnv env = env0();
  OpContext ctx = exp_context(env, 1, 6);
  ExpOp r(ctx);
  r.add_term(Rat(-2), ExpCoeff::constant(Rat(-7, 3)));
  auto s = residual_summary(r, Rat(-4), Rat(0));
  CHECK_FALSE(s.zero);
  CHECK(s.asserted == 5);
  CHECK(s.worst == Rat(7, 3));
  CHECK(s.worst_at == "Lambda^-2");
}

TEST_CASE("grid coefficients: window, shift and backend limits") {
  auto ring = TRing::make(2, 2);
  std::vector<TPoly> samples;
  for (int i = 0; i < 5; ++i) samples.push_back(TPoly::constant(ring, Rat(i)));
  GridCoeff g(Rat(-2), Rat(1), samples);
  CHECK(g.at(Rat(0)).constant_term() == 2);
  CHECK_THROWS_AS(g.at(Rat(3)), WindowError);
  GridCoeff sh = g.shifted(Rat(1));
  CHECK(sh.lo() == Rat(-3));
  CHECK(sh.at(Rat(0)).constant_term() == 3);
  CHECK_FALSE(g.exactly_zero());
  OpContext ctx{std::make_shared<const ParamEnv>(env0()), 1, 4, ring};
  GridOp op = GridOp::monomial(ctx, Rat(0), g);
  CHECK_THROWS_AS(op_d_ds(op), UnsupportedBackendError);
}

TEST_CASE("sampling commutes with operator products") {
  ParamEnv env = env0();
  OpContext ectx = exp_context(env, 1, 5);
  auto ring = TRing::make(1, 0);
  OpContext gctx{std::make_shared<const ParamEnv>(env), 1, 5, ring};
  std::mt19937_64 rng(13);
  ExpOp a = random_unit(ectx, rng) * ExpOp::lambda(ectx, Rat(1));
  ExpOp b = random_unit(ectx, rng);
  GridOp lhs = to_grid(a * b, gctx, Rat(-4), Rat(4), Rat(1));
  GridOp rhs = to_grid(a, gctx, Rat(-4), Rat(4), Rat(1)) * to_grid(b, gctx, Rat(-4), Rat(4), Rat(1));
  CHECK(residual_summary(lhs - rhs, Rat(-4), Rat(1)).zero);
}
