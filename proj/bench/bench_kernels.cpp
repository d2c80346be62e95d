// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "oracles.hpp"
#include "topicent/kernels.hpp"

using namespace topicent;

namespace {

struct EStepInput {
  Corpus corpus;
  EmWorkspace ws;
  PhiMatrix phi;
  ThetaMatrix theta;

  explicit EStepInput(std::size_t topics)
      : corpus(oracle::random_corpus(2000, 5000, 50, 150, 1)),
        ws(corpus),
        phi(oracle::random_phi(5000, topics, 2)),
        theta(oracle::random_theta(topics, 2000, 3)) {}
};

template <auto Kernel>
void estep(benchmark::State& state) {
  const EStepInput in(static_cast<std::size_t>(state.range(0)));
  kernels::ExpectedCounts out;
  for (auto _ : state) {
    Kernel(in.ws, in.phi, in.theta, out);
    benchmark::DoNotOptimize(out.loglik);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.corpus.total_tokens()));
}

template <auto Kernel>
void scan(benchmark::State& state) {
  const auto phi = oracle::random_phi(50000, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(phi));
}

template <auto Kernel>
void jaccard(benchmark::State& state) {
  std::mt19937 gen(5);
  std::vector<std::vector<WordId>> sets(static_cast<std::size_t>(state.range(0)));
  for (auto& s : sets)
    for (WordId w = 0; w < 20000; ++w)
      if (gen() % 4 == 0) s.push_back(w);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(sets));
}

}  // namespace

BENCHMARK(estep<kernels::serial::expectation>)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(estep<kernels::omp::expectation>)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<kernels::serial::scan_high_prob>)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<kernels::omp::scan_high_prob>)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(jaccard<kernels::serial::jaccard_cells>)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(jaccard<kernels::omp::jaccard_cells>)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
