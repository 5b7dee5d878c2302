// Serial reference vs OpenMP kernels on the same (group, word) inputs.

#include <benchmark/benchmark.h>

#include "wordlab/catalog.hpp"
#include "wordlab/fiber.hpp"

using namespace wordlab;

namespace {

const char* const kGroups[] = {"q8", "heisenberg(3)", "free_class2_exp_p(3,2)"};
const char* const kWord = "x1^2 [x2,x3] x3^-1";

void BM_BruteSerial(benchmark::State& state) {
  const FiniteGroup g = catalog_by_spec(kGroups[state.range(0)]);
  const Word w = parse_word(kWord);
  for (auto _ : state) benchmark::DoNotOptimize(count_brute_force_serial(g, w));
  state.SetLabel(g.name());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.order() * g.order() * g.order()));
}

void BM_BruteParallel(benchmark::State& state) {
  const FiniteGroup g = catalog_by_spec(kGroups[state.range(0)]);
  const Word w = parse_word(kWord);
  CountOptions options;
  options.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_brute_force(g, w, options));
  state.SetLabel(g.name());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.order() * g.order() * g.order()));
}

void BM_CentralParallel(benchmark::State& state) {
  const FiniteGroup g = catalog_by_spec(kGroups[state.range(0)]);
  const Word w = parse_word(kWord);
  CountOptions options;
  options.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_central_quotient(g, w, options));
  state.SetLabel(g.name());
}

}  // namespace

BENCHMARK(BM_BruteSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->ArgsProduct({{0, 1, 2}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CentralParallel)->ArgsProduct({{0, 1, 2}, {1, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
