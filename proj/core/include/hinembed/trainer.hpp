#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hinembed/embedding.hpp"
#include "hinembed/graph.hpp"
#include "hinembed/proximity.hpp"
#include "hinembed/sampling.hpp"

namespace hinembed {

double dot(std::span<const double> a, std::span<const double> b);
double sigmoid(double x);
// log(sigmoid(x)) without overflow, i.e. -log(1 + e^{-x}).
double log_sigmoid(double x);

// sigmoid(v_i . v_j). Throws DomainError on a length mismatch.
double joint_probability(std::span<const double> vi, std::span<const double> vj);

// -sum over off-diagonal nonzeros of s(i,j) * log p(i,j).
double kl_objective(const TypedGraph& g, const ProximityMatrix& m, const EmbeddingMatrix& e);

// Per-pair negative-sampling surrogate
//   T = -log(1 + e^{-vi.vj}) - sum_k log(1 + e^{vi.v'_k}).
double negative_objective(std::span<const double> vi, std::span<const double> vj,
                          std::span<const std::span<const double>> negatives);

struct ObjectiveGradient {
  std::vector<double> source;                  // dT/dv_i
  std::vector<double> target;                  // dT/dv_j
  std::vector<std::vector<double>> negatives;  // dT/dv'_k
};

ObjectiveGradient negative_objective_gradient(std::span<const double> vi,
                                              std::span<const double> vj,
                                              std::span<const std::span<const double>> negatives);

inline constexpr double kComponentClamp = 30.0;

// One ascent step on T for pair (i, j) scaled by weight * lr, applied to the
// rows of e in place. Reads and writes go through relaxed atomics so that
// concurrent callers may share e without locks. Returns false, leaving e
// untouched, when an intermediate dot product is not finite. `scratch` must
// hold at least 2 * e.dim() + negatives.size() doubles.
bool sgd_step(EmbeddingMatrix& e, std::size_t i, std::size_t j,
              std::span<const std::size_t> negatives, double weight, double lr,
              std::span<double> scratch);

struct TrainConfig {
  int horizon = 2;
  std::size_t dim = 10;
  Measure measure = Measure::PCRW;
  int negatives = 5;
  double rho0 = 0.025;
  std::uint64_t total_samples = 10'000'000;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  SamplingMode mode = SamplingMode::AliasProportional;
  // Draw negatives among nodes of the positive target's type.
  bool typed_negatives = false;
  double epsilon = 0.0;

  // Throws ConfigError on an out-of-range field.
  void validate() const;
};

// rho0 * max(1 - t/T, 1e-4).
double learning_rate(double rho0, std::uint64_t step, std::uint64_t total);

struct TrainResult {
  EmbeddingMatrix embeddings;
  double proximity_seconds = 0.0;
  double training_seconds = 0.0;
  std::uint64_t skipped_steps = 0;
  std::size_t positive_pairs = 0;
};

// Computes the truncated proximity on g and trains on it.
TrainResult train(const TypedGraph& g, const TrainConfig& cfg);
// Trains on a precomputed proximity matrix over g's nodes.
TrainResult train(const TypedGraph& g, const ProximityMatrix& m, const TrainConfig& cfg);

}  // namespace hinembed
