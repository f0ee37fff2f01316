#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hinembed/graph.hpp"
#include "hinembed/proximity.hpp"
#include "hinembed/random.hpp"

namespace hinembed {

// Walker/Vose alias table: O(n) build, O(1) draws.
class AliasTable {
 public:
  AliasTable() = default;
  // Weights must be finite and non-negative with a positive sum.
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return prob_.size(); }
  bool empty() const { return prob_.empty(); }

  std::size_t sample(Rng& rng) const {
    std::size_t k = uniform_index(rng, prob_.size());
    return uniform01(rng) < prob_[k] ? k : alias_[k];
  }

  // Exact probability of drawing index i.
  double probability(std::size_t i) const { return normalized_.at(i); }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
  std::vector<double> normalized_;
};

// Noise distribution P_n(v) proportional to d_out(v)^{3/4} over all nodes,
// optionally restricted to the nodes of one type.
class NoiseTable {
 public:
  NoiseTable() = default;
  explicit NoiseTable(const TypedGraph& g, bool per_type = false);
  // Direct construction from out-degrees (all nodes share one type).
  explicit NoiseTable(std::span<const std::size_t> out_degrees);

  NodeIndex sample(Rng& rng) const { return support_[table_.sample(rng)]; }
  // Draws among nodes sharing `like`'s type; falls back to the global table
  // when that type has no node with positive out-degree or per-type tables
  // were not built.
  NodeIndex sample_like(Rng& rng, NodeIndex like) const;

  double probability(NodeIndex v) const;
  bool per_type() const { return !type_tables_.empty(); }

 private:
  std::vector<NodeIndex> support_;
  std::vector<std::size_t> position_;  // node -> index in support_, or npos
  AliasTable table_;

  struct TypeTable {
    std::vector<NodeIndex> support;
    AliasTable table;
  };
  std::vector<std::uint32_t> node_type_;
  std::vector<TypeTable> type_tables_;
};

enum class SamplingMode {
  // Pairs drawn with probability s(i,j)/S, unit gradient weight.
  AliasProportional,
  // Pairs drawn uniformly, gradient weighted by s(i,j)/mean(s).
  UniformWeighted,
};

SamplingMode parse_sampling_mode(std::string_view text);
std::string to_string(SamplingMode mode);

// Draws positive training pairs from the off-diagonal nonzeros of a
// proximity matrix.
class PairSampler {
 public:
  struct Pair {
    NodeIndex src;
    NodeIndex dst;
    double score;
  };
  struct Draw {
    NodeIndex src;
    NodeIndex dst;
    double weight;
  };

  PairSampler(const ProximityMatrix& m, SamplingMode mode);

  Draw sample(Rng& rng) const {
    std::size_t k = mode_ == SamplingMode::AliasProportional ? table_.sample(rng)
                                                             : uniform_index(rng, pairs_.size());
    return {pairs_[k].src, pairs_[k].dst, weight(k)};
  }

  std::span<const Pair> pairs() const { return pairs_; }
  SamplingMode mode() const { return mode_; }
  // Exact draw probability and gradient weight of pair k.
  double probability(std::size_t k) const;
  double weight(std::size_t k) const {
    return mode_ == SamplingMode::AliasProportional ? 1.0 : pairs_[k].score / mean_score_;
  }

 private:
  std::vector<Pair> pairs_;
  SamplingMode mode_;
  AliasTable table_;
  double mean_score_ = 1.0;
};

}  // namespace hinembed
