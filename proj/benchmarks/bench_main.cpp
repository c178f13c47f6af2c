#include <benchmark/benchmark.h>

#include "sftgw/curves.hpp"
#include "sftgw/hurwitz.hpp"
#include "sftgw/qdkdv.hpp"

using namespace sftgw;

static void BM_WeylMulHamiltonians(benchmark::State& state) {
  TruncationContext ctx;
  ctx.max_energy = static_cast<int>(state.range(0));
  const Poly a = hamiltonian_bosonic(1, ctx);
  const Poly b = hamiltonian_bosonic(2, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_mul(a, b, ctx));
}
BENCHMARK(BM_WeylMulHamiltonians)->Arg(3)->Arg(4)->Arg(6);

static void BM_HamiltonianBosonic(benchmark::State& state) {
  TruncationContext ctx;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_bosonic(n, ctx));
}
BENCHMARK(BM_HamiltonianBosonic)->Arg(1)->Arg(3)->Arg(5);

static void BM_EllipticGlue(benchmark::State& state) {
  TruncationContext ctx;
  ctx.max_z = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(elliptic_potential(ctx));
}
BENCHMARK(BM_EllipticGlue)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_HurwitzNumber(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const HurwitzKey key{d, Partition({d}), Partition({d}), Partition({d})};
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_number(key));
}
BENCHMARK(BM_HurwitzNumber)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_HurwitzRaw(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const HurwitzKey key{d, Partition({d}), Partition({d}), Partition({d})};
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_number_raw(key));
}
BENCHMARK(BM_HurwitzRaw)->Arg(3)->Arg(4);
BENCHMARK_MAIN();
