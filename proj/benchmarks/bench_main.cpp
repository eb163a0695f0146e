#include <benchmark/benchmark.h>

#include <string>

#include "gag/gag.hpp"

namespace {

using namespace gag;

const GammaGroupoid& example() {
  static const GammaGroupoid G = parse_file(std::string(GAG_FIXTURE_DIR) + "/paper_example.gag");
  return G;
}

void BM_CheckLaw(benchmark::State& state) {
  const auto law = static_cast<Law>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_law(example(), law).holds);
  state.SetLabel(std::string(to_string(law)));
}
BENCHMARK(BM_CheckLaw)->DenseRange(0, static_cast<int>(kAllLaws.size()) - 1);

void BM_EnumerateIdeals(benchmark::State& state) {
  const auto kind = static_cast<IdealKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(example(), kind).size());
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(0, static_cast<int>(kAllIdealKinds.size()) - 1);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(example()).size());
}
BENCHMARK(BM_VerifyAll);

void BM_SearchCount(benchmark::State& state) {
  SearchSpec spec;
  spec.order = static_cast<std::size_t>(state.range(0));
  spec.gammas = static_cast<std::size_t>(state.range(1));
  spec.filters = {Filter::LeftInvertive};
  for (auto _ : state) benchmark::DoNotOptimize(count(spec));
}
BENCHMARK(BM_SearchCount)->Args({3, 1})->Args({3, 2})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_SearchUpToIso(benchmark::State& state) {
  SearchSpec spec;
  spec.order = 3;
  spec.gammas = 2;
  spec.filters = {Filter::LeftInvertive};
  spec.up_to_iso = true;
  for (auto _ : state) benchmark::DoNotOptimize(count(spec));
}
BENCHMARK(BM_SearchUpToIso)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
