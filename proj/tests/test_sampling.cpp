#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "hinembed/errors.hpp"
#include "hinembed/sampling.hpp"
#include "support/fixtures.hpp"

using namespace hinembed;

namespace {

double three_sigma(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n); }

}  // namespace

TEST_CASE("alias table probabilities and frequencies") {
  std::vector<double> w{1.0, 0.0, 3.0, 4.0};
  AliasTable t(w);
  CHECK(t.size() == 4);
  CHECK(t.probability(0) == doctest::Approx(0.125));
  CHECK(t.probability(1) == 0.0);
  CHECK(t.probability(3) == doctest::Approx(0.5));

  Rng rng(123);
  const int n = 400000;
  std::vector<int> hits(4, 0);
  for (int i = 0; i < n; ++i) ++hits[t.sample(rng)];
  CHECK(hits[1] == 0);
  for (std::size_t i = 0; i < 4; ++i) {
    const double p = t.probability(i);
    CHECK(std::abs(hits[i] / double(n) - p) <= three_sigma(p, n) + 1e-12);
  }

  CHECK_THROWS(AliasTable(std::vector<double>{}));
  CHECK_THROWS(AliasTable(std::vector<double>{0.0, 0.0}));
  CHECK_THROWS(AliasTable(std::vector<double>{1.0, -1.0}));
}

TEST_CASE("single-entry alias table") {
  AliasTable t(std::vector<double>{2.5});
  Rng rng(1);
  for (int i = 0; i < 100; ++i) CHECK(t.sample(rng) == 0);
  CHECK(t.probability(0) == 1.0);
}

TEST_CASE("noise law on degrees (16, 1)") {
  std::vector<std::size_t> deg{16, 1};
  NoiseTable noise(deg);
  CHECK(noise.probability(0) == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
  CHECK(noise.probability(1) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));

  Rng rng = make_rng(7, "noise");
  const int n = 1'000'000;
  int zeros = 0;
  for (int i = 0; i < n; ++i) zeros += noise.sample(rng) == 0;
  CHECK(std::abs(zeros / double(n) - 8.0 / 9.0) <= three_sigma(8.0 / 9.0, n));
}

TEST_CASE("nodes without out-edges are never noise") {
  std::vector<std::size_t> deg{0, 3, 0, 1};
  NoiseTable noise(deg);
  CHECK(noise.probability(0) == 0.0);
  CHECK(noise.probability(2) == 0.0);
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    auto v = noise.sample(rng);
    CHECK((v == 1 || v == 3));
  }
}

TEST_CASE("per-type noise stays within the requested type") {
  auto g = test::fixture();
  NoiseTable noise(g, true);
  CHECK(noise.per_type());
  Rng rng(9);
  const auto a1 = test::node(g, "A:a1");
  for (int i = 0; i < 2000; ++i) CHECK(g.node(noise.sample_like(rng, a1)).type == "A");
  // Global probabilities follow augmented degree^0.75.
  double total = 0.0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) total += std::pow(double(g.out_degree(v)), 0.75);
  CHECK(noise.probability(a1) == doctest::Approx(std::pow(2.0, 0.75) / total).epsilon(1e-14));
}

TEST_CASE("pair sampler only draws off-diagonal nonzeros") {
  ProximityMatrix m(4, Measure::PCRW, 2, true);
  m.set_row(0, {{0, 5.0}, {1, 1.0}, {2, 2.0}});
  m.set_row(1, {{3, 4.0}});
  m.set_row(2, {{0, 0.5}, {2, 9.0}});
  m.set_row(3, {{1, 0.5}});
  for (auto mode : {SamplingMode::AliasProportional, SamplingMode::UniformWeighted}) {
    PairSampler sampler(m, mode);
    REQUIRE(sampler.pairs().size() == 5);
    std::map<std::pair<NodeIndex, NodeIndex>, int> hits;
    Rng rng = make_rng(3, "sampler");
    const int n = 500000;
    for (int i = 0; i < n; ++i) {
      auto d = sampler.sample(rng);
      REQUIRE(d.src != d.dst);
      REQUIRE(m.at(d.src, d.dst) > 0.0);
      ++hits[{d.src, d.dst}];
    }
    double psum = 0.0;
    for (std::size_t k = 0; k < sampler.pairs().size(); ++k) {
      const auto& p = sampler.pairs()[k];
      const double prob = sampler.probability(k);
      psum += prob;
      const double expected =
          mode == SamplingMode::AliasProportional ? p.score / 8.0 : 1.0 / 5.0;
      CHECK(prob == doctest::Approx(expected).epsilon(1e-14));
      CHECK(std::abs(hits[{p.src, p.dst}] / double(n) - prob) <= three_sigma(prob, n));
    }
    CHECK(psum == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("sampling modes have the same expected update") {
  ProximityMatrix m(3, Measure::PCRW, 2, true);
  m.set_row(0, {{1, 0.3}});
  m.set_row(1, {{2, 1.7}});
  m.set_row(2, {{0, 0.05}});
  PairSampler alias(m, SamplingMode::AliasProportional);
  PairSampler uniform(m, SamplingMode::UniformWeighted);
  REQUIRE(alias.pairs().size() == uniform.pairs().size());
  for (std::size_t k = 0; k < alias.pairs().size(); ++k) {
    CHECK(std::abs(alias.probability(k) * alias.weight(k) -
                   uniform.probability(k) * uniform.weight(k)) < 1e-12);
  }
}

TEST_CASE("pair sampler rejects matrices without off-diagonal mass") {
  ProximityMatrix m(2, Measure::PCRW, 2, true);
  m.set_row(0, {{0, 1.0}});
  CHECK_THROWS_AS(PairSampler(m, SamplingMode::AliasProportional), ConfigError);
}

TEST_CASE("sampling mode names") {
  CHECK(parse_sampling_mode("alias") == SamplingMode::AliasProportional);
  CHECK(parse_sampling_mode("uniform_weighted") == SamplingMode::UniformWeighted);
  CHECK(to_string(SamplingMode::UniformWeighted) == "uniform_weighted");
  CHECK_THROWS(parse_sampling_mode("bogus"));
}
