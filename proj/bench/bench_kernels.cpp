// Parallel kernels against their serial reference loops.
// Thread count follows QPS_THREADS (or OpenMP defaults).

#include "qps/fock.hpp"
#include "qps/grid.hpp"
#include "qps/kernels.hpp"
#include "qps/parallel.hpp"

#include <benchmark/benchmark.h>

#include <map>

namespace {

struct Setup {
  qps::PhaseGrid grid;
  qps::CVector eta;
  qps::CMatrix vectors;
};

const Setup& setup(int n, double spacing) {
  static std::map<std::pair<int, double>, Setup> cache;
  auto it = cache.find({n, spacing});
  if (it == cache.end()) {
    Setup s;
    s.grid = qps::build_grid(7.0, spacing);
    s.eta = qps::CVector::Zero(n);
    s.eta(0) = 1.0;
    s.vectors = qps::kernels::reference::coherent_vectors(s.grid, s.eta);
    it = cache.emplace(std::make_pair(n, spacing), std::move(s)).first;
  }
  return it->second;
}

double spacing_of(const benchmark::State& st) { return st.range(1) / 100.0; }

void BM_coherent_parallel(benchmark::State& st) {
  const auto& s = setup(static_cast<int>(st.range(0)), spacing_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(qps::kernels::coherent_vectors(s.grid, s.eta));
  st.counters["points"] = static_cast<double>(s.grid.size());
}

void BM_coherent_reference(benchmark::State& st) {
  const auto& s = setup(static_cast<int>(st.range(0)), spacing_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(qps::kernels::reference::coherent_vectors(s.grid, s.eta));
  st.counters["points"] = static_cast<double>(s.grid.size());
}

void BM_outer_parallel(benchmark::State& st) {
  const auto& s = setup(static_cast<int>(st.range(0)), spacing_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(qps::kernels::weighted_outer_sum(s.vectors, s.grid.weight));
}

void BM_outer_reference(benchmark::State& st) {
  const auto& s = setup(static_cast<int>(st.range(0)), spacing_of(st));
  for (auto _ : st) benchmark::DoNotOptimize(qps::kernels::reference::weighted_outer_sum(s.vectors, s.grid.weight));
}

// (dimension, spacing in hundredths)
#define QPS_ARGS ->Args({24, 15})->Args({32, 5})->Unit(benchmark::kMillisecond)->UseRealTime()

BENCHMARK(BM_coherent_parallel) QPS_ARGS;
BENCHMARK(BM_coherent_reference) QPS_ARGS;
BENCHMARK(BM_outer_parallel) QPS_ARGS;
BENCHMARK(BM_outer_reference) QPS_ARGS;

}  // namespace

int main(int argc, char** argv) {
  qps::parallel::set_threads(qps::parallel::configured_threads());
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
