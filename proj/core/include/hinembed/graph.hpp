#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hinembed {

using NodeIndex = std::uint32_t;
using EdgeTypeIndex = std::uint32_t;

// Suffix that marks the reversal of an edge type, e.g. "write^-1".
inline constexpr std::string_view kInverseSuffix = "^-1";

// A typed node. Printed and parsed as "type:id"; the type may not contain ':'.
struct NodeRef {
  std::string type;
  std::string id;

  auto operator<=>(const NodeRef&) const = default;

  std::string str() const { return type + ":" + id; }
  static NodeRef parse(std::string_view text);
};

struct EdgeTypeLabel {
  std::string name;
  bool is_inverse = false;

  auto operator<=>(const EdgeTypeLabel&) const = default;

  EdgeTypeLabel inverse() const { return {name, !is_inverse}; }
  std::string str() const { return is_inverse ? name + std::string(kInverseSuffix) : name; }
  static EdgeTypeLabel parse(std::string_view text);
};

// One line of an edge file.
struct EdgeRecord {
  NodeRef src;
  EdgeTypeLabel type;
  NodeRef dst;

  auto operator<=>(const EdgeRecord&) const = default;
};

struct EdgeSignature {
  std::string src_type;
  EdgeTypeLabel edge_type;
  std::string dst_type;

  auto operator<=>(const EdgeSignature&) const = default;

  std::string str() const { return src_type + ":" + edge_type.str() + ":" + dst_type; }
};

class SchemaView {
 public:
  SchemaView() = default;
  SchemaView(std::set<std::string> node_types, std::set<EdgeSignature> signatures)
      : node_types_(std::move(node_types)), signatures_(std::move(signatures)) {}

  const std::set<std::string>& node_types() const { return node_types_; }
  const std::set<EdgeSignature>& signatures() const { return signatures_; }

  // Destination types reachable from src_type by one edge of the given type.
  std::vector<std::string> step(const std::string& src_type, const EdgeTypeLabel& edge) const;

 private:
  std::set<std::string> node_types_;
  std::set<EdgeSignature> signatures_;
};

struct Edge {
  NodeIndex src;
  EdgeTypeIndex type;
  NodeIndex dst;
};

// Out-edge as stored in the adjacency index. `probability` is 1/n where n is
// the number of out-edges of the source sharing this edge type, so parallel
// edges add up to multiplicity/n.
struct OutEdge {
  EdgeTypeIndex type;
  NodeIndex dst;
  double probability;
};

// Directed typed multigraph. Immutable once built; safe to share across
// threads. Nodes are indexed in order of first appearance in the records.
class TypedGraph {
 public:
  TypedGraph() = default;

  // Builds the graph from records. Records using inverse edge types are
  // accepted here; the text loader rejects them.
  static TypedGraph from_records(std::span<const EdgeRecord> records);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  const NodeRef& node(NodeIndex v) const { return nodes_.at(v); }
  const std::vector<NodeRef>& nodes() const { return nodes_; }
  std::optional<NodeIndex> find(const NodeRef& ref) const;
  NodeIndex index_of(const NodeRef& ref) const;  // throws DomainError when absent

  std::size_t edge_type_count() const { return edge_types_.size(); }
  const EdgeTypeLabel& edge_type(EdgeTypeIndex t) const { return edge_types_.at(t); }
  std::optional<EdgeTypeIndex> find_edge_type(const EdgeTypeLabel& label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  EdgeRecord record(const Edge& e) const;

  // Out-edges of v sorted by (type, dst).
  std::span<const OutEdge> out_edges(NodeIndex v) const {
    return {out_edges_.data() + offsets_[v], out_edges_.data() + offsets_[v + 1]};
  }
  // Out-edges of v with the given type.
  std::span<const OutEdge> out_edges(NodeIndex v, EdgeTypeIndex type) const;
  std::size_t out_degree(NodeIndex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Nodes of one type, in index order.
  std::vector<NodeIndex> nodes_of_type(std::string_view type) const;
  // All node indices ordered by NodeRef.
  std::vector<NodeIndex> sorted_nodes() const;

  bool has_inverse_edges() const;
  const SchemaView& schema() const { return schema_; }

 private:
  std::vector<NodeRef> nodes_;
  std::map<NodeRef, NodeIndex> node_index_;
  std::vector<EdgeTypeLabel> edge_types_;
  std::map<EdgeTypeLabel, EdgeTypeIndex> edge_type_index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<OutEdge> out_edges_;
  SchemaView schema_;
};

// Reads the tab-separated edge format:
//   src_id <TAB> src_type <TAB> edge_type <TAB> dst_id <TAB> dst_type
// Blank lines and lines starting with '#' are skipped.
TypedGraph load_graph(std::istream& in);
TypedGraph load_graph_file(const std::filesystem::path& path);

// Writes the non-inverse edges in the loader's format, in edge order.
void write_graph(const TypedGraph& g, std::ostream& out);

// Adds (v, r^-1, u) for every edge (u, r, v). The input must not already
// contain inverse edges.
TypedGraph add_inverse_edges(const TypedGraph& g);

// multiplicity(src, r, dst) / |out-edges of src with type r|. Throws
// DomainError when no such edge exists.
double transition_prob(const TypedGraph& g, NodeIndex src, NodeIndex dst, EdgeTypeIndex r);
double transition_prob(const TypedGraph& g, const NodeRef& src, const NodeRef& dst,
                       const EdgeTypeLabel& r);

}  // namespace hinembed
