#include <benchmark/benchmark.h>

#include "hinembed/proximity.hpp"
#include "hinembed/synthetic.hpp"

using namespace hinembed;

namespace {

TypedGraph planted(int scale) {
  PlantedHinConfig cfg;
  cfg.authors = 200 * scale;
  cfg.papers = 400 * scale;
  cfg.venues = 8 * scale;
  cfg.topics = 100 * scale;
  return add_inverse_edges(TypedGraph::from_records(make_planted_hin(cfg).records));
}

void BM_TruncatedProximity(benchmark::State& state) {
  const auto g = planted(static_cast<int>(state.range(0)));
  const int l = static_cast<int>(state.range(1));
  const auto measure = state.range(2) ? Measure::PCRW : Measure::PathCount;
  std::size_t nnz = 0;
  for (auto _ : state) {
    auto m = truncated_proximity(g, measure, l);
    nnz = m.nonzeros();
    benchmark::DoNotOptimize(nnz);
  }
  state.counters["nodes"] = static_cast<double>(g.node_count());
  state.counters["nonzeros"] = static_cast<double>(nnz);
}
BENCHMARK(BM_TruncatedProximity)
    ->ArgsProduct({{1, 4}, {2, 3}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_ProximityThreads(benchmark::State& state) {
  const auto g = planted(4);
  ProximityOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_proximity(g, Measure::PCRW, 2, options).nonzeros());
}
BENCHMARK(BM_ProximityThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EpsilonPruning(benchmark::State& state) {
  const auto g = planted(4);
  ProximityOptions options;
  options.epsilon = state.range(0) ? 1e-3 : 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(truncated_proximity(g, Measure::PCRW, 3, options).nonzeros());
}
BENCHMARK(BM_EpsilonPruning)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
