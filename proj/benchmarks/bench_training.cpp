#include <benchmark/benchmark.h>

#include <vector>

#include "hinembed/sampling.hpp"
#include "hinembed/synthetic.hpp"
#include "hinembed/trainer.hpp"

using namespace hinembed;

namespace {

const TypedGraph& graph() {
  static const TypedGraph g =
      add_inverse_edges(TypedGraph::from_records(make_planted_hin(PlantedHinConfig{}).records));
  return g;
}

const ProximityMatrix& proximity() {
  static const ProximityMatrix m = truncated_proximity(graph(), Measure::PCRW, 2);
  return m;
}

void BM_SgdStep(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  auto e = init_embeddings(graph().nodes(), d, 1);
  PairSampler pairs(proximity(), SamplingMode::AliasProportional);
  NoiseTable noise(graph());
  Rng rng(1);
  std::vector<std::size_t> negs(5);
  std::vector<double> scratch(2 * d + negs.size());
  for (auto _ : state) {
    auto draw = pairs.sample(rng);
    for (auto& n : negs) n = noise.sample(rng);
    benchmark::DoNotOptimize(sgd_step(e, draw.src, draw.dst, negs, draw.weight, 0.025, scratch));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SgdStep)->Arg(10)->Arg(128);

void BM_Train(benchmark::State& state) {
  TrainConfig cfg;
  cfg.total_samples = 1'000'000;
  cfg.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(train(graph(), proximity(), cfg).embeddings.size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.total_samples));
}
BENCHMARK(BM_Train)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AliasSample(benchmark::State& state) {
  PairSampler pairs(proximity(), SamplingMode::AliasProportional);
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(pairs.sample(rng));
}
BENCHMARK(BM_AliasSample);

}  // namespace

BENCHMARK_MAIN();
