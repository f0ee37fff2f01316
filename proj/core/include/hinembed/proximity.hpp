#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hinembed/graph.hpp"

namespace hinembed {

enum class Measure { PathCount, PCRW };

Measure parse_measure(std::string_view text);  // "pc" | "pcrw", case-insensitive
std::string to_string(Measure m);

// A sequence of edge types. Its length is the number of links.
struct MetaPath {
  std::vector<EdgeTypeLabel> steps;

  std::size_t length() const { return steps.size(); }
  std::string str() const;
  // Comma-separated edge types, e.g. "write,write^-1".
  static MetaPath parse(std::string_view text);

  auto operator<=>(const MetaPath&) const = default;
};

struct ProximityEntry {
  NodeIndex dst;
  double score;

  bool operator==(const ProximityEntry&) const = default;
};

// Sparse row sorted by dst; every score is > 0.
using SparseRow = std::vector<ProximityEntry>;

// Row-major sparse proximity scores over a graph's node indices.
class ProximityMatrix {
 public:
  ProximityMatrix() = default;
  ProximityMatrix(std::size_t node_count, Measure measure, int horizon, bool cumulative)
      : rows_(node_count), measure_(measure), horizon_(horizon), cumulative_(cumulative) {}

  std::size_t node_count() const { return rows_.size(); }
  std::span<const ProximityEntry> row(NodeIndex src) const { return rows_.at(src); }
  double at(NodeIndex src, NodeIndex dst) const;  // 0 when absent
  std::size_t nonzeros() const;

  Measure measure() const { return measure_; }
  int horizon() const { return horizon_; }
  bool cumulative() const { return cumulative_; }

  // Replaces a row. Entries must be sorted by dst with positive scores.
  void set_row(NodeIndex src, SparseRow row);

  bool operator==(const ProximityMatrix&) const = default;

 private:
  std::vector<SparseRow> rows_;
  Measure measure_ = Measure::PCRW;
  int horizon_ = 0;
  bool cumulative_ = true;
};

struct ProximityOptions {
  // PCRW partial masses below epsilon are dropped after each step; 0 keeps all.
  double epsilon = 0.0;
  unsigned threads = 1;
};

// Scores summed over walks of exactly k edges, by iterating
//   S_k[s, t] = sum over out-edges (s, o') of inc(s, o') * S_{k-1}[o', t]
// from S_0 = identity, with inc = transition probability (PCRW) or 1 (PC).
ProximityMatrix exact_k_step(const TypedGraph& g, Measure measure, int k,
                             const ProximityOptions& options = {});

// Sum of exact_k_step over k = 1..l. Closed walks put mass on the diagonal;
// the length-0 identity is never included.
ProximityMatrix truncated_proximity(const TypedGraph& g, Measure measure, int l,
                                    const ProximityOptions& options = {});

// Proximity from src restricted to instances of one meta path. Empty when the
// meta path cannot start at src's type.
SparseRow metapath_proximity(const TypedGraph& g, const MetaPath& path, Measure measure,
                             NodeIndex src);

// Every meta path of length 1..max_length that the schema allows starting
// from src_type, in lexicographic order of edge types.
std::vector<MetaPath> enumerate_metapaths(const SchemaView& schema, const std::string& src_type,
                                          int max_length);

// Exhaustive depth-first enumeration of all walks of length 1..l from src.
// Independent of the dynamic program; used as a test oracle. Refuses with
// DomainError when the number of walks exceeds walk_limit.
SparseRow brute_force_oracle(const TypedGraph& g, Measure measure, int l, NodeIndex src,
                             std::uint64_t walk_limit = 10'000'000);

// Exact number of walks of length 1..l starting from src (saturating).
std::uint64_t count_walks(const TypedGraph& g, int l, NodeIndex src);

// Row of src normalized to sum 1. Throws DomainError on an empty row.
SparseRow empirical_distribution(const ProximityMatrix& m, NodeIndex src);

// TSV "src_type:src_id<TAB>dst_type:dst_id<TAB>score", score with 9 decimals,
// sorted by (src, dst) NodeRef order.
void write_proximity(const ProximityMatrix& m, const TypedGraph& g, std::ostream& out);
ProximityMatrix read_proximity(std::istream& in, const TypedGraph& g, Measure measure,
                               int horizon, bool cumulative);

}  // namespace hinembed
