#include "hinembed/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hinembed/errors.hpp"

namespace hinembed {

namespace {

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

bool ends_with_inverse_suffix(std::string_view s) {
  return s.size() >= kInverseSuffix.size() &&
         s.substr(s.size() - kInverseSuffix.size()) == kInverseSuffix;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

void check_identifier(std::string_view value, std::string_view what, std::size_t line) {
  if (value.empty()) throw ParseError("empty " + std::string(what), line);
  if (has_whitespace(value)) {
    throw ParseError(std::string(what) + " '" + std::string(value) + "' contains whitespace",
                     line);
  }
}

}  // namespace

NodeRef NodeRef::parse(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw ParseError("expected type:id, got '" + std::string(text) + "'");
  }
  return {std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

EdgeTypeLabel EdgeTypeLabel::parse(std::string_view text) {
  if (ends_with_inverse_suffix(text)) {
    auto base = text.substr(0, text.size() - kInverseSuffix.size());
    if (base.empty()) throw ParseError("empty edge type name");
    return {std::string(base), true};
  }
  if (text.empty()) throw ParseError("empty edge type name");
  return {std::string(text), false};
}

std::vector<std::string> SchemaView::step(const std::string& src_type,
                                          const EdgeTypeLabel& edge) const {
  std::vector<std::string> out;
  for (const auto& sig : signatures_) {
    if (sig.src_type == src_type && sig.edge_type == edge) out.push_back(sig.dst_type);
  }
  return out;
}

TypedGraph TypedGraph::from_records(std::span<const EdgeRecord> records) {
  TypedGraph g;
  auto intern_node = [&g](const NodeRef& ref) {
    auto [it, inserted] = g.node_index_.try_emplace(ref, static_cast<NodeIndex>(g.nodes_.size()));
    if (inserted) g.nodes_.push_back(ref);
    return it->second;
  };
  auto intern_type = [&g](const EdgeTypeLabel& label) {
    auto [it, inserted] =
        g.edge_type_index_.try_emplace(label, static_cast<EdgeTypeIndex>(g.edge_types_.size()));
    if (inserted) g.edge_types_.push_back(label);
    return it->second;
  };

  std::set<std::string> node_types;
  std::set<EdgeSignature> signatures;
  g.edges_.reserve(records.size());
  for (const auto& r : records) {
    if (r.src.type.empty() || r.dst.type.empty()) throw DomainError("node type must be non-empty");
    NodeIndex s = intern_node(r.src);
    NodeIndex d = intern_node(r.dst);
    EdgeTypeIndex t = intern_type(r.type);
    g.edges_.push_back({s, t, d});
    node_types.insert(r.src.type);
    node_types.insert(r.dst.type);
    signatures.insert({r.src.type, r.type, r.dst.type});
  }
  g.schema_ = SchemaView(std::move(node_types), std::move(signatures));

  // CSR adjacency grouped by source, then (type, dst).
  const std::size_t n = g.nodes_.size();
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) ++g.offsets_[e.src + 1];
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.out_edges_.resize(g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : g.edges_) g.out_edges_[cursor[e.src]++] = {e.type, e.dst, 0.0};

  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.out_edges_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.out_edges_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last, [](const OutEdge& a, const OutEdge& b) {
      return a.type != b.type ? a.type < b.type : a.dst < b.dst;
    });
    for (auto group = first; group != last;) {
      auto group_end = std::find_if(group, last, [&](const OutEdge& e) { return e.type != group->type; });
      const double p = 1.0 / static_cast<double>(group_end - group);
      for (auto it = group; it != group_end; ++it) it->probability = p;
      group = group_end;
    }
  }
  return g;
}

std::optional<NodeIndex> TypedGraph::find(const NodeRef& ref) const {
  auto it = node_index_.find(ref);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex TypedGraph::index_of(const NodeRef& ref) const {
  auto v = find(ref);
  if (!v) throw DomainError("unknown node " + ref.str());
  return *v;
}

std::optional<EdgeTypeIndex> TypedGraph::find_edge_type(const EdgeTypeLabel& label) const {
  auto it = edge_type_index_.find(label);
  if (it == edge_type_index_.end()) return std::nullopt;
  return it->second;
}

EdgeRecord TypedGraph::record(const Edge& e) const {
  return {nodes_[e.src], edge_types_[e.type], nodes_[e.dst]};
}

std::span<const OutEdge> TypedGraph::out_edges(NodeIndex v, EdgeTypeIndex type) const {
  auto all = out_edges(v);
  auto [lo, hi] = std::equal_range(all.begin(), all.end(), OutEdge{type, 0, 0.0},
                                   [](const OutEdge& a, const OutEdge& b) { return a.type < b.type; });
  return {lo, hi};
}

std::vector<NodeIndex> TypedGraph::nodes_of_type(std::string_view type) const {
  std::vector<NodeIndex> out;
  for (NodeIndex v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].type == type) out.push_back(v);
  }
  return out;
}

std::vector<NodeIndex> TypedGraph::sorted_nodes() const {
  std::vector<NodeIndex> out;
  out.reserve(nodes_.size());
  for (const auto& [ref, v] : node_index_) out.push_back(v);
  return out;
}

bool TypedGraph::has_inverse_edges() const {
  return std::any_of(edge_types_.begin(), edge_types_.end(),
                     [](const EdgeTypeLabel& t) { return t.is_inverse; });
}

TypedGraph load_graph(std::istream& in) {
  std::vector<EdgeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto f = split_tabs(line);
    if (f.size() != 5) {
      throw ParseError("expected 5 tab-separated fields, got " + std::to_string(f.size()), line_no);
    }
    check_identifier(f[0], "source id", line_no);
    check_identifier(f[1], "source type", line_no);
    check_identifier(f[2], "edge type", line_no);
    check_identifier(f[3], "target id", line_no);
    check_identifier(f[4], "target type", line_no);
    if (f[1].find(':') != std::string_view::npos || f[4].find(':') != std::string_view::npos) {
      throw ParseError("node type may not contain ':'", line_no);
    }
    if (ends_with_inverse_suffix(f[2])) {
      throw ParseError("edge type '" + std::string(f[2]) + "' uses the reserved suffix " +
                           std::string(kInverseSuffix),
                       line_no);
    }
    records.push_back({{std::string(f[1]), std::string(f[0])},
                       {std::string(f[2]), false},
                       {std::string(f[4]), std::string(f[3])}});
  }
  if (in.bad()) throw ParseError("read failure");
  return TypedGraph::from_records(records);
}

TypedGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return load_graph(in);
}

void write_graph(const TypedGraph& g, std::ostream& out) {
  for (const auto& e : g.edges()) {
    const auto& type = g.edge_type(e.type);
    if (type.is_inverse) continue;
    const auto& s = g.node(e.src);
    const auto& d = g.node(e.dst);
    out << s.id << '\t' << s.type << '\t' << type.name << '\t' << d.id << '\t' << d.type << '\n';
  }
}

TypedGraph add_inverse_edges(const TypedGraph& g) {
  if (g.has_inverse_edges()) throw DomainError("graph already contains inverse edges");
  std::vector<EdgeRecord> records;
  records.reserve(2 * g.edge_count());
  for (const auto& e : g.edges()) records.push_back(g.record(e));
  for (const auto& e : g.edges()) {
    records.push_back({g.node(e.dst), g.edge_type(e.type).inverse(), g.node(e.src)});
  }
  return TypedGraph::from_records(records);
}

double transition_prob(const TypedGraph& g, NodeIndex src, NodeIndex dst, EdgeTypeIndex r) {
  auto group = g.out_edges(src, r);
  double p = 0.0;
  for (const auto& e : group) {
    if (e.dst == dst) p += e.probability;
  }
  if (p == 0.0) throw DomainError("no edge of the requested type between the given nodes");
  return p;
}

double transition_prob(const TypedGraph& g, const NodeRef& src, const NodeRef& dst,
                       const EdgeTypeLabel& r) {
  auto s = g.find(src);
  auto d = g.find(dst);
  auto t = g.find_edge_type(r);
  if (!s || !d || !t) {
    throw DomainError("edge " + src.str() + " -" + r.str() + "-> " + dst.str() + " does not exist");
  }
  return transition_prob(g, *s, *d, *t);
}

}  // namespace hinembed
