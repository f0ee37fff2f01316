#include "hinembed/sampling.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "hinembed/errors.hpp"

namespace hinembed {

AliasTable::AliasTable(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw DomainError("alias table needs at least one weight");
  if (n > std::numeric_limits<std::uint32_t>::max()) throw DomainError("alias table too large");
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("alias weights must be finite and >= 0");
    total += w;
  }
  if (!(total > 0.0)) throw DomainError("alias weights sum to zero");

  normalized_.resize(n);
  prob_.resize(n);
  alias_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    normalized_[i] = weights[i] / total;
    scaled[i] = normalized_[i] * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    std::uint32_t s = small.back();
    small.pop_back();
    std::uint32_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (auto i : large) {
    prob_[i] = 1.0;
    alias_[i] = i;
  }
  for (auto i : small) {
    prob_[i] = 1.0;
    alias_[i] = i;
  }
}

namespace {

double noise_weight(std::size_t out_degree) {
  return std::pow(static_cast<double>(out_degree), 0.75);
}

}  // namespace

NoiseTable::NoiseTable(std::span<const std::size_t> out_degrees) {
  constexpr auto npos = std::numeric_limits<std::size_t>::max();
  position_.assign(out_degrees.size(), npos);
  std::vector<double> weights;
  for (std::size_t v = 0; v < out_degrees.size(); ++v) {
    if (out_degrees[v] == 0) continue;
    position_[v] = support_.size();
    support_.push_back(static_cast<NodeIndex>(v));
    weights.push_back(noise_weight(out_degrees[v]));
  }
  if (weights.empty()) throw ConfigError("noise distribution is empty: no node has out-edges");
  table_ = AliasTable(weights);
}

NoiseTable::NoiseTable(const TypedGraph& g, bool per_type) {
  std::vector<std::size_t> degrees(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) degrees[v] = g.out_degree(v);
  *this = NoiseTable(std::span<const std::size_t>(degrees));
  if (!per_type) return;

  std::map<std::string, std::uint32_t> type_ids;
  node_type_.resize(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    auto [it, inserted] = type_ids.try_emplace(g.node(v).type, static_cast<std::uint32_t>(type_ids.size()));
    node_type_[v] = it->second;
  }
  type_tables_.resize(type_ids.size());
  std::vector<std::vector<double>> weights(type_ids.size());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (degrees[v] == 0) continue;
    type_tables_[node_type_[v]].support.push_back(v);
    weights[node_type_[v]].push_back(noise_weight(degrees[v]));
  }
  for (std::size_t t = 0; t < type_tables_.size(); ++t) {
    if (!weights[t].empty()) type_tables_[t].table = AliasTable(weights[t]);
  }
}

NodeIndex NoiseTable::sample_like(Rng& rng, NodeIndex like) const {
  if (type_tables_.empty()) return sample(rng);
  const auto& tt = type_tables_[node_type_.at(like)];
  if (tt.table.empty()) return sample(rng);
  return tt.support[tt.table.sample(rng)];
}

double NoiseTable::probability(NodeIndex v) const {
  if (v >= position_.size() || position_[v] == std::numeric_limits<std::size_t>::max()) return 0.0;
  return table_.probability(position_[v]);
}

SamplingMode parse_sampling_mode(std::string_view text) {
  if (text == "alias" || text == "alias_proportional") return SamplingMode::AliasProportional;
  if (text == "uniform" || text == "uniform_weighted") return SamplingMode::UniformWeighted;
  throw ConfigError("unknown sampling mode '" + std::string(text) +
                    "' (expected alias_proportional or uniform_weighted)");
}

std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::AliasProportional ? "alias_proportional" : "uniform_weighted";
}

PairSampler::PairSampler(const ProximityMatrix& m, SamplingMode mode) : mode_(mode) {
  double total = 0.0;
  for (NodeIndex s = 0; s < m.node_count(); ++s) {
    for (const auto& e : m.row(s)) {
      if (e.dst == s || !(e.score > 0.0)) continue;
      pairs_.push_back({s, e.dst, e.score});
      total += e.score;
    }
  }
  if (pairs_.empty()) throw ConfigError("proximity matrix has no off-diagonal nonzero entry");
  mean_score_ = total / static_cast<double>(pairs_.size());
  if (mode_ == SamplingMode::AliasProportional) {
    std::vector<double> weights;
    weights.reserve(pairs_.size());
    for (const auto& p : pairs_) weights.push_back(p.score);
    table_ = AliasTable(weights);
  }
}

double PairSampler::probability(std::size_t k) const {
  if (mode_ == SamplingMode::AliasProportional) return table_.probability(k);
  return 1.0 / static_cast<double>(pairs_.size());
}

}  // namespace hinembed
