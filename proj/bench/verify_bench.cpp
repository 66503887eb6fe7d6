#include <benchmark/benchmark.h>

#include <omp.h>

#include <random>

#include "tcplan/catalog/space_spec.hpp"
#include "tcplan/planner/product.hpp"
#include "tcplan/planner/registry.hpp"
#include "tcplan/verify/verifier.hpp"

namespace {

const char* const kSpaces[] = {"circle", "sphere:2", "torus:4", "product(sphere:2,sphere:2)"};

tcplan::verify::VerifyConfig config() {
  tcplan::verify::VerifyConfig cfg;
  cfg.pairs = 2000;
  return cfg;
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto p = tcplan::planner::make_planner(tcplan::catalog::parse_space_spec(kSpaces[state.range(0)]));
  const auto cfg = config();
  for (auto _ : state) benchmark::DoNotOptimize(tcplan::verify::verify_planner(p, cfg));
  state.SetLabel(std::string(kSpaces[state.range(0)]) + ", " + std::to_string(omp_get_max_threads()) + " threads");
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cfg.pairs));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto p = tcplan::planner::make_planner(tcplan::catalog::parse_space_spec(kSpaces[state.range(0)]));
  const auto cfg = config();
  for (auto _ : state) benchmark::DoNotOptimize(tcplan::verify::verify_planner_serial(p, cfg));
  state.SetLabel(kSpaces[state.range(0)]);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cfg.pairs));
}

// Product weights: prefix fast path against subset enumeration.
template <bool Fast>
void BM_LevelWeights(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> f(n), g(n);
  for (auto& x : f) x = u(rng);
  for (auto& x : g) x = u(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fast ? tcplan::planner::level_weights(f, g)
                                  : tcplan::planner::level_weights_reference(f, g));
  }
}

}  // namespace

BENCHMARK(BM_VerifyParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelWeights<true>)->DenseRange(2, 6, 2);
BENCHMARK(BM_LevelWeights<false>)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
