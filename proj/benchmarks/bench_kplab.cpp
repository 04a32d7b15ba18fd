#include <benchmark/benchmark.h>

#include <memory>

#include "kplab/reduction.hpp"

using namespace kplab;

static void BM_SchurAt(benchmark::State& state) {
  ParamEnv env = ParamEnv::topological(Rat(1, 2), Rat(1));
  const int n = static_cast<int>(state.range(0));
  auto c = cvector(Family::C, env, n);
  auto lambdas = enumerate_partitions(n);
  for (auto _ : state)
    for (const auto& l : lambdas) benchmark::DoNotOptimize(schur_at(l, c));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(lambdas.size()));
}
BENCHMARK(BM_SchurAt)->Arg(4)->Arg(6)->Arg(8);

static void BM_TauNormalized(benchmark::State& state) {
  ParamEnv env = ParamEnv::generic(Rat(2), 1, Rat(3, 2));
  const int D = static_cast<int>(state.range(0));
  auto c = cvector(Family::A, env, D);
  auto ring = TRing::make(D, D);
  for (auto _ : state) benchmark::DoNotOptimize(tau_normalized(Rat(1), c, ring, env));
}
BENCHMARK(BM_TauNormalized)->Arg(4)->Arg(6)->Arg(8);

static void BM_WaveGrid(benchmark::State& state) {
  ParamEnv env = ParamEnv::generic(Rat(2), 1, Rat(3, 2));
  auto c = cvector(Family::A, env, 6);
  WaveBuilder wb(c, std::make_shared<const ParamEnv>(env), TRing::make(6, 6), 6);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wb.grid(Rat(-8), Rat(4), Rat(1), threads));
}
BENCHMARK(BM_WaveGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_OpInverse(benchmark::State& state) {
  ParamEnv env = ParamEnv::generic(Rat(3, 2), 2, Rat(5, 3));
  const int n_cut = static_cast<int>(state.range(0));
  OpContext ctx = exp_context(env, 1, n_cut);
  CVector c = cvector_finite({Rat(1, 2), Rat(-2), Rat(1, 3), Rat(1), Rat(1, 5), Rat(2)}, n_cut);
  ExpOp w = build_W0(c, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(op_inv(w));
}
BENCHMARK(BM_OpInverse)->Arg(6)->Arg(10);

static void BM_Check(benchmark::State& state, const char* id, Family f) {
  CheckSpec s;
  s.id = id;
  s.family = f;
  for (auto _ : state) benchmark::DoNotOptimize(run_check(s));
}
BENCHMARK_CAPTURE(BM_Check, lax_a, "lax", Family::A)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, prop1, "prop1", Family::General)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, bcflow_d, "bcflow", Family::D)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
