#include "hinembed/proximity.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <thread>

#include "hinembed/errors.hpp"

namespace hinembed {

Measure parse_measure(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "pc" || lower == "pathcount") return Measure::PathCount;
  if (lower == "pcrw") return Measure::PCRW;
  throw ConfigError("unknown proximity measure '" + std::string(text) + "' (expected pc or pcrw)");
}

std::string to_string(Measure m) { return m == Measure::PathCount ? "pc" : "pcrw"; }

std::string MetaPath::str() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += steps[i].str();
  }
  return out;
}

MetaPath MetaPath::parse(std::string_view text) {
  MetaPath mp;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    mp.steps.push_back(EdgeTypeLabel::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return mp;
}

double ProximityMatrix::at(NodeIndex src, NodeIndex dst) const {
  const auto& r = rows_.at(src);
  auto it = std::lower_bound(r.begin(), r.end(), dst,
                             [](const ProximityEntry& e, NodeIndex d) { return e.dst < d; });
  return it != r.end() && it->dst == dst ? it->score : 0.0;
}

std::size_t ProximityMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void ProximityMatrix::set_row(NodeIndex src, SparseRow row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!(row[i].score > 0.0)) throw DomainError("proximity scores must be positive");
    if (i && row[i - 1].dst >= row[i].dst) throw DomainError("proximity row must be sorted by dst");
  }
  rows_.at(src) = std::move(row);
}

namespace {

// Dense scatter buffer reused across rows.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : value_(n, 0.0), seen_(n, 0) {}

  void add(NodeIndex t, double x) {
    if (!seen_[t]) {
      seen_[t] = 1;
      touched_.push_back(t);
    }
    value_[t] += x;
  }

  SparseRow drain(double epsilon) {
    std::sort(touched_.begin(), touched_.end());
    SparseRow row;
    row.reserve(touched_.size());
    for (NodeIndex t : touched_) {
      if (value_[t] > 0.0 && value_[t] >= epsilon) row.push_back({t, value_[t]});
      value_[t] = 0.0;
      seen_[t] = 0;
    }
    touched_.clear();
    return row;
  }

 private:
  std::vector<double> value_;
  std::vector<std::uint8_t> seen_;
  std::vector<NodeIndex> touched_;
};

// Runs body(src, acc) for every source, splitting contiguous source blocks
// across threads, each with its own accumulator.
void for_each_source(std::size_t n, unsigned threads,
                     const std::function<void(NodeIndex, Accumulator&)>& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  auto run = [&](std::size_t begin, std::size_t end) {
    Accumulator acc(n);
    for (std::size_t s = begin; s < end; ++s) body(static_cast<NodeIndex>(s), acc);
  };
  if (threads == 1) {
    run(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = std::min(n, t * chunk);
    std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back(run, begin, end);
  }
  for (auto& th : pool) th.join();
}

using Level = std::vector<SparseRow>;

Level next_level(const TypedGraph& g, Measure measure, const Level& prev,
                 const ProximityOptions& options) {
  const std::size_t n = g.node_count();
  const double epsilon = measure == Measure::PCRW ? options.epsilon : 0.0;
  Level next(n);
  for_each_source(n, options.threads, [&](NodeIndex s, Accumulator& acc) {
    for (const auto& e : g.out_edges(s)) {
      const double inc = measure == Measure::PCRW ? e.probability : 1.0;
      for (const auto& [t, score] : prev[e.dst]) acc.add(t, inc * score);
    }
    next[s] = acc.drain(epsilon);
  });
  return next;
}

Level identity_level(std::size_t n) {
  Level level(n);
  for (std::size_t s = 0; s < n; ++s) level[s] = {{static_cast<NodeIndex>(s), 1.0}};
  return level;
}

SparseRow merge_add(const SparseRow& a, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].dst < b[j].dst)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].dst < a[i].dst) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].dst, a[i].score + b[j].score});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_horizon(int l) {
  if (l < 1) throw DomainError("walk length must be at least 1");
}

}  // namespace

ProximityMatrix exact_k_step(const TypedGraph& g, Measure measure, int k,
                             const ProximityOptions& options) {
  check_horizon(k);
  Level level = identity_level(g.node_count());
  for (int step = 1; step <= k; ++step) level = next_level(g, measure, level, options);
  ProximityMatrix m(g.node_count(), measure, k, false);
  for (std::size_t s = 0; s < level.size(); ++s) m.set_row(static_cast<NodeIndex>(s), std::move(level[s]));
  return m;
}

ProximityMatrix truncated_proximity(const TypedGraph& g, Measure measure, int l,
                                    const ProximityOptions& options) {
  check_horizon(l);
  const std::size_t n = g.node_count();
  Level level = identity_level(n);
  Level total(n);
  for (int step = 1; step <= l; ++step) {
    level = next_level(g, measure, level, options);
    for (std::size_t s = 0; s < n; ++s) total[s] = merge_add(total[s], level[s]);
  }
  ProximityMatrix m(n, measure, l, true);
  for (std::size_t s = 0; s < n; ++s) m.set_row(static_cast<NodeIndex>(s), std::move(total[s]));
  return m;
}

SparseRow metapath_proximity(const TypedGraph& g, const MetaPath& path, Measure measure,
                             NodeIndex src) {
  if (path.steps.empty()) throw DomainError("meta path must contain at least one edge type");
  std::vector<std::string> types{g.node(src).type};
  SparseRow row{{src, 1.0}};
  Accumulator acc(g.node_count());
  for (const auto& label : path.steps) {
    std::vector<std::string> next_types;
    for (const auto& t : types) {
      for (auto& d : g.schema().step(t, label)) next_types.push_back(std::move(d));
    }
    auto type = g.find_edge_type(label);
    if (next_types.empty() || !type) return {};
    std::sort(next_types.begin(), next_types.end());
    next_types.erase(std::unique(next_types.begin(), next_types.end()), next_types.end());
    types = std::move(next_types);

    for (const auto& [u, score] : row) {
      for (const auto& e : g.out_edges(u, *type)) {
        acc.add(e.dst, (measure == Measure::PCRW ? e.probability : 1.0) * score);
      }
    }
    row = acc.drain(0.0);
    if (row.empty()) return {};
  }
  return row;
}

std::vector<MetaPath> enumerate_metapaths(const SchemaView& schema, const std::string& src_type,
                                          int max_length) {
  std::vector<MetaPath> out;
  std::function<void(const std::set<std::string>&, MetaPath&)> extend =
      [&](const std::set<std::string>& types, MetaPath& prefix) {
        if (static_cast<int>(prefix.length()) == max_length) return;
        std::map<EdgeTypeLabel, std::set<std::string>> next;
        for (const auto& sig : schema.signatures()) {
          if (types.count(sig.src_type)) next[sig.edge_type].insert(sig.dst_type);
        }
        for (const auto& [label, dst_types] : next) {
          prefix.steps.push_back(label);
          out.push_back(prefix);
          extend(dst_types, prefix);
          prefix.steps.pop_back();
        }
      };
  MetaPath prefix;
  extend({src_type}, prefix);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_walks(const TypedGraph& g, int l, NodeIndex src) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  const std::size_t n = g.node_count();
  std::vector<std::uint64_t> cur(n, 0), next(n, 0);
  cur[src] = 1;
  std::uint64_t total = 0;
  for (int step = 1; step <= l; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (NodeIndex u = 0; u < n; ++u) {
      if (!cur[u]) continue;
      for (const auto& e : g.out_edges(u)) next[e.dst] = sat_add(next[e.dst], cur[u]);
    }
    for (auto c : next) total = sat_add(total, c);
    cur.swap(next);
  }
  return total;
}

SparseRow brute_force_oracle(const TypedGraph& g, Measure measure, int l, NodeIndex src,
                             std::uint64_t walk_limit) {
  check_horizon(l);
  const std::uint64_t walks = count_walks(g, l, src);
  if (walks > walk_limit) {
    throw DomainError("enumeration would visit about " + std::to_string(walks) +
                      " walks (limit " + std::to_string(walk_limit) + ")");
  }
  std::map<NodeIndex, double> sums;
  std::function<void(NodeIndex, int, double)> walk = [&](NodeIndex u, int depth, double score) {
    auto edges = g.out_edges(u);
    for (const auto& e : edges) {
      double step = 1.0;
      if (measure == Measure::PCRW) {
        auto same_type = std::count_if(edges.begin(), edges.end(),
                                       [&](const OutEdge& o) { return o.type == e.type; });
        step = 1.0 / static_cast<double>(same_type);
      }
      sums[e.dst] += score * step;
      if (depth + 1 < l) walk(e.dst, depth + 1, score * step);
    }
  };
  walk(src, 0, 1.0);
  SparseRow row;
  for (const auto& [t, s] : sums) row.push_back({t, s});
  return row;
}

SparseRow empirical_distribution(const ProximityMatrix& m, NodeIndex src) {
  auto row = m.row(src);
  double total = 0.0;
  for (const auto& e : row) total += e.score;
  if (!(total > 0.0)) throw DomainError("proximity row is empty");
  SparseRow out(row.begin(), row.end());
  for (auto& e : out) e.score /= total;
  return out;
}

void write_proximity(const ProximityMatrix& m, const TypedGraph& g, std::ostream& out) {
  const auto order = g.sorted_nodes();
  std::vector<std::size_t> rank(g.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  char buf[64];
  for (NodeIndex s : order) {
    SparseRow row(m.row(s).begin(), m.row(s).end());
    std::sort(row.begin(), row.end(),
              [&](const ProximityEntry& a, const ProximityEntry& b) { return rank[a.dst] < rank[b.dst]; });
    const std::string src = g.node(s).str();
    for (const auto& e : row) {
      std::snprintf(buf, sizeof buf, "%.9f", e.score);
      out << src << '\t' << g.node(e.dst).str() << '\t' << buf << '\n';
    }
  }
}

ProximityMatrix read_proximity(std::istream& in, const TypedGraph& g, Measure measure,
                               int horizon, bool cumulative) {
  std::vector<SparseRow> rows(g.node_count());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError("expected 3 tab-separated fields", line_no);
    }
    auto lookup = [&](std::string_view text) {
      try {
        auto v = g.find(NodeRef::parse(text));
        if (!v) throw ParseError("unknown node " + std::string(text), line_no);
        return *v;
      } catch (const ParseError& e) {
        if (e.line()) throw;
        throw ParseError(e.what(), line_no);
      }
    };
    NodeIndex s = lookup(std::string_view(line).substr(0, t1));
    NodeIndex d = lookup(std::string_view(line).substr(t1 + 1, t2 - t1 - 1));
    const char* first = line.data() + t2 + 1;
    const char* last = line.data() + line.size();
    double score = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, score);
    if (ec != std::errc() || ptr != last || !(score >= 0.0) || !std::isfinite(score)) {
      throw ParseError("invalid score '" + std::string(first, last) + "'", line_no);
    }
    // Masses below the printed precision come back as 0 and stay absent.
    if (score > 0.0) rows[s].push_back({d, score});
  }
  ProximityMatrix m(g.node_count(), measure, horizon, cumulative);
  for (std::size_t s = 0; s < rows.size(); ++s) {
    auto& row = rows[s];
    std::sort(row.begin(), row.end(),
              [](const ProximityEntry& a, const ProximityEntry& b) { return a.dst < b.dst; });
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].dst == row[i - 1].dst) throw ParseError("duplicate proximity entry");
    }
    m.set_row(static_cast<NodeIndex>(s), std::move(row));
  }
  return m;
}

}  // namespace hinembed
