#include <benchmark/benchmark.h>

#include "adenets/dynkin.hpp"
#include "adenets/int_matrix.hpp"
#include "adenets/sweep.hpp"
#include "adenets/theta.hpp"

using namespace adenets;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void BM_LemmaSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lemma_sweep(99, 1e-9, mode(state)));
}
BENCHMARK(BM_LemmaSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ThetaSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta_sweep(17, mode(state)));
}
BENCHMARK(BM_ThetaSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NimrepSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nimrep_sweep(40, mode(state)));
}
BENCHMARK(BM_NimrepSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ChebyshevFamily(benchmark::State& state) {
  const DynkinGraph g(GraphKind::A(static_cast<int>(state.range(1))));
  for (auto _ : state)
    benchmark::DoNotOptimize(chebyshev_family(g.adjacency(), g.coxeter() - 1, mode(state)));
}
BENCHMARK(BM_ChebyshevFamily)
    ->ArgsProduct({{0, 1}, {60, 120}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
