// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "compcorr/edss.hpp"
#include "compcorr/oracle.hpp"

using namespace compcorr;

namespace {

const DensityMatrix& holevo_input() {
  static const DensityMatrix rho = bell_diagonal({0.4, -0.3, 0.2});
  return rho;
}

void BM_HolevoParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::maximize_holevo(holevo_input()).value);
}

void BM_HolevoReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::maximize_holevo_reference(holevo_input()).value);
}

void BM_EdssParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(edss::edss_useful({0.3, -0.3, 0.3}, edss::AncillaGrid{}).status);
}

void BM_EdssReference(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(edss::edss_useful_reference({0.3, -0.3, 0.3}, edss::AncillaGrid{}).status);
}

void BM_SendStepKernel(benchmark::State& state) {
  const auto rho = bell_diagonal({0.3, -0.3, 0.3}).matrix();
  const auto c = edss::Ancilla{1.0, 0.5, 0.8}.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(edss::send_step_eigenvalues(rho, c).a_cut);
}

void BM_FullProtocol(benchmark::State& state) {
  const auto rho = bell_diagonal({0.3, -0.3, 0.3});
  const edss::Ancilla c{1.0, 0.5, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(edss::run_protocol(rho, c).success);
}

} // namespace

BENCHMARK(BM_HolevoParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HolevoReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdssParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdssReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SendStepKernel);
BENCHMARK(BM_FullProtocol);

BENCHMARK_MAIN();
