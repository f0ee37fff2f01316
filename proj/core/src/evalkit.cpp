#include "hinembed/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>

#include "hinembed/errors.hpp"
#include "hinembed/random.hpp"

namespace hinembed {

LabeledNodes read_labels(std::istream& in) {
  LabeledNodes labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected 'type:id<TAB>label'", line_no);
    }
    std::string label = line.substr(tab + 1);
    if (label.empty()) throw ParseError("empty label", line_no);
    NodeRef node;
    try {
      node = NodeRef::parse(std::string_view(line).substr(0, tab));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!labels.emplace(node, std::move(label)).second) {
      throw ParseError("duplicate label for " + node.str(), line_no);
    }
  }
  return labels;
}

LabeledNodes read_labels_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_labels(in);
}

double auc_from_scores(std::span<const double> positives, std::span<const double> negatives) {
  if (positives.empty() || negatives.empty()) {
    throw DomainError("AUC needs at least one positive and one negative");
  }
  struct Item {
    double score;
    bool positive;
  };
  std::vector<Item> items;
  items.reserve(positives.size() + negatives.size());
  for (double s : positives) items.push_back({s, true});
  for (double s : negatives) items.push_back({s, false});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.score < b.score; });

  // Mann-Whitney U from mid-ranks.
  double positive_rank_sum = 0.0;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j].score == items[i].score) ++j;
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      if (items[t].positive) positive_rank_sum += mid_rank;
    }
    i = j;
  }
  const double np = static_cast<double>(positives.size());
  const double nn = static_cast<double>(negatives.size());
  const double u = positive_rank_sum - np * (np + 1.0) / 2.0;
  return u / (np * nn);
}

namespace {

double dot_rows(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

double auc_link_recovery(const TypedGraph& g, const EmbeddingMatrix& e, const EdgeSignature& sig) {
  const auto sources = g.nodes_of_type(sig.src_type);
  const auto targets = g.nodes_of_type(sig.dst_type);
  if (sources.empty() || targets.empty()) throw DomainError("no candidate pairs for " + sig.str());
  const auto rows = align_rows(g, e);

  std::set<std::pair<NodeIndex, NodeIndex>> linked;
  auto type = g.find_edge_type(sig.edge_type);
  if (type) {
    for (const auto& edge : g.edges()) {
      if (edge.type == *type && g.node(edge.src).type == sig.src_type &&
          g.node(edge.dst).type == sig.dst_type) {
        linked.emplace(edge.src, edge.dst);
      }
    }
  }
  std::vector<double> pos, neg;
  for (NodeIndex s : sources) {
    for (NodeIndex t : targets) {
      if (s == t) continue;
      const double score = dot_rows(e.vec(rows[s]), e.vec(rows[t]));
      (linked.count({s, t}) ? pos : neg).push_back(score);
    }
  }
  return auc_from_scores(pos, neg);
}

std::vector<std::pair<EdgeSignature, double>> auc_all_signatures(const TypedGraph& g,
                                                                  const EmbeddingMatrix& e) {
  std::vector<std::pair<EdgeSignature, double>> out;
  for (const auto& sig : g.schema().signatures()) {
    if (sig.edge_type.is_inverse) continue;
    try {
      out.emplace_back(sig, auc_link_recovery(g, e, sig));
    } catch (const DomainError&) {
      // Complete or empty relation: AUC undefined.
    }
  }
  return out;
}

F1Scores f1_scores(std::span<const std::string> truth, std::span<const std::string> predicted) {
  if (truth.size() != predicted.size() || truth.empty()) {
    throw DomainError("F1 needs equal-length, non-empty label sequences");
  }
  std::map<std::string, std::size_t> tp, fp, fn;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    tp[truth[i]];
    tp[predicted[i]];
    if (truth[i] == predicted[i]) {
      ++tp[truth[i]];
      ++correct;
    } else {
      ++fn[truth[i]];
      ++fp[predicted[i]];
    }
  }
  double macro = 0.0;
  for (const auto& [label, t] : tp) {
    const double denom = 2.0 * static_cast<double>(t) + static_cast<double>(fp[label] + fn[label]);
    macro += denom > 0.0 ? 2.0 * static_cast<double>(t) / denom : 0.0;
  }
  // Single-label multiclass micro F1 equals accuracy.
  return {macro / static_cast<double>(tp.size()),
          static_cast<double>(correct) / static_cast<double>(truth.size())};
}

std::string majority_vote(std::span<const Neighbor> neighbors) {
  if (neighbors.empty()) throw DomainError("majority vote over no neighbors");
  std::map<std::string, std::pair<std::size_t, double>> tally;
  for (const auto& n : neighbors) {
    auto& [count, dist] = tally[n.label];
    ++count;
    dist += n.distance;
  }
  auto best = tally.begin();
  for (auto it = tally.begin(); it != tally.end(); ++it) {
    const auto& [c, d] = it->second;
    const auto& [bc, bd] = best->second;
    if (c > bc || (c == bc && d < bd)) best = it;
  }
  return best->first;
}

std::string knn_predict(const EmbeddingMatrix& e, std::span<const std::size_t> train_rows,
                        std::span<const std::string> train_labels, std::span<const double> query,
                        std::size_t k) {
  if (train_rows.size() != train_labels.size() || train_rows.empty()) {
    throw DomainError("kNN needs a non-empty training set with one label per row");
  }
  if (query.size() != e.dim()) throw DomainError("query dimension does not match the embedding");
  k = std::min(k, train_rows.size());
  std::vector<std::pair<double, std::size_t>> dists(train_rows.size());
  for (std::size_t i = 0; i < train_rows.size(); ++i) {
    auto v = e.vec(train_rows[i]);
    double s = 0.0;
    for (std::size_t c = 0; c < query.size(); ++c) s += (query[c] - v[c]) * (query[c] - v[c]);
    dists[i] = {std::sqrt(s), i};
  }
  std::partial_sort(dists.begin(), dists.begin() + static_cast<std::ptrdiff_t>(k), dists.end());
  std::vector<Neighbor> nearest;
  for (std::size_t i = 0; i < k; ++i) nearest.push_back({train_labels[dists[i].second], dists[i].first});
  return majority_vote(nearest);
}

F1Scores knn_classify(const EmbeddingMatrix& e, const LabeledNodes& labels,
                      const KnnClassifyOptions& options) {
  if (options.k < 1) throw ConfigError("k must be at least 1");
  if (options.repeats < 1) throw ConfigError("repeats must be at least 1");
  if (!(options.train_fraction > 0.0 && options.train_fraction < 1.0)) {
    throw ConfigError("train fraction must lie in (0, 1)");
  }
  std::vector<std::size_t> rows;
  std::vector<std::string> tags;
  std::set<std::string> classes, types;
  for (const auto& [node, label] : labels) {
    rows.push_back(e.find(node).value_or(SIZE_MAX));
    if (rows.back() == SIZE_MAX) throw DomainError("no embedding for labeled node " + node.str());
    tags.push_back(label);
    classes.insert(label);
    types.insert(node.type);
  }
  if (types.size() > 1) throw DomainError("labeled nodes must share one node type");
  if (classes.size() < 2) throw DomainError("classification needs at least two labels");

  const std::size_t n = rows.size();
  const auto n_train = static_cast<std::size_t>(std::llround(options.train_fraction * static_cast<double>(n)));
  const auto k = static_cast<std::size_t>(options.k);
  if (n_train < k || n_train >= n) {
    throw DomainError("not enough labeled nodes for a " + std::to_string(options.k) + "-NN split");
  }

  F1Scores mean;
  for (int r = 0; r < options.repeats; ++r) {
    Rng rng = make_rng(options.seed, "splits", static_cast<std::uint64_t>(r));
    std::vector<std::size_t> order(n);
    bool covered = false;
    for (int attempt = 0; attempt < 100 && !covered; ++attempt) {
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_index(rng, i + 1)]);
      std::set<std::string> seen;
      for (std::size_t i = 0; i < n_train; ++i) seen.insert(tags[order[i]]);
      covered = seen.size() == classes.size();
    }
    if (!covered) throw DomainError("could not draw a split covering every class in 100 attempts");

    std::vector<std::size_t> train_rows;
    std::vector<std::string> train_tags;
    for (std::size_t i = 0; i < n_train; ++i) {
      train_rows.push_back(rows[order[i]]);
      train_tags.push_back(tags[order[i]]);
    }
    std::vector<std::string> truth, predicted;
    for (std::size_t q = n_train; q < n; ++q) {
      truth.push_back(tags[order[q]]);
      predicted.push_back(knn_predict(e, train_rows, train_tags, e.vec(rows[order[q]]), k));
    }
    auto f1 = f1_scores(truth, predicted);
    mean.macro_f1 += f1.macro_f1;
    mean.micro_f1 += f1.micro_f1;
  }
  mean.macro_f1 /= options.repeats;
  mean.micro_f1 /= options.repeats;
  return mean;
}

double nmi(std::span<const int> clusters, std::span<const int> labels) {
  if (clusters.size() != labels.size() || clusters.empty()) {
    throw DomainError("NMI needs equal-length, non-empty assignments");
  }
  const double n = static_cast<double>(clusters.size());
  std::map<int, double> pc, pl;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    pc[clusters[i]] += 1.0;
    pl[labels[i]] += 1.0;
    joint[{clusters[i], labels[i]}] += 1.0;
  }
  auto entropy = [n](const std::map<int, double>& counts) {
    double h = 0.0;
    for (const auto& [_, c] : counts) h -= (c / n) * std::log(c / n);
    return h;
  };
  const double hc = entropy(pc);
  const double hl = entropy(pl);
  if (hc <= 0.0 || hl <= 0.0) return 0.0;
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    mi += (c / n) * std::log(c * n / (pc[key.first] * pl[key.second]));
  }
  return std::clamp(mi / std::sqrt(hc * hl), 0.0, 1.0);
}

double cluster_nmi(const EmbeddingMatrix& e, const LabeledNodes& labels, std::uint64_t seed) {
  std::map<std::string, int> label_ids;
  for (const auto& [_, label] : labels) label_ids.emplace(label, 0);
  int next = 0;
  for (auto& [_, id] : label_ids) id = next++;
  const int k = static_cast<int>(label_ids.size());
  if (labels.size() < label_ids.size() || k < 1) {
    throw DomainError("fewer labeled nodes than clusters");
  }
  std::vector<double> points;
  std::vector<int> truth;
  points.reserve(labels.size() * e.dim());
  for (const auto& [node, label] : labels) {
    auto v = e.vec(node);
    points.insert(points.end(), v.begin(), v.end());
    truth.push_back(label_ids[label]);
  }
  auto result = kmeans(points, e.dim(), k, seed);
  return nmi(result.assignment, truth);
}

std::vector<ScoredNode> knn_query(const EmbeddingMatrix& e, const NodeRef& query, std::size_t k,
                                  const std::optional<std::string>& type_filter) {
  auto q = e.find(query);
  if (!q) throw DomainError("no embedding for query " + query.str());
  auto vq = e.vec(*q);
  std::vector<ScoredNode> pool;
  for (std::size_t r = 0; r < e.size(); ++r) {
    if (r == *q) continue;
    if (type_filter && e.node(r).type != *type_filter) continue;
    pool.push_back({e.node(r), dot_rows(vq, e.vec(r))});
  }
  auto better = [](const ScoredNode& a, const ScoredNode& b) {
    return a.score != b.score ? a.score > b.score : a.node < b.node;
  };
  const std::size_t take = std::min(k, pool.size());
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end(), better);
  pool.resize(take);
  return pool;
}

namespace {

std::map<NodeRef, std::size_t> positions(const RankedList& list) {
  std::map<NodeRef, std::size_t> pos;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!pos.emplace(list[i], i + 1).second) {
      throw DomainError("duplicate element " + list[i].str() + " in ranked list");
    }
  }
  return pos;
}

void check_lengths(const RankedList& a, const RankedList& b) {
  if (a.size() != b.size()) throw DomainError("top-k lists must have equal length");
}

}  // namespace

double footrule_distance(const RankedList& a, const RankedList& b) {
  check_lengths(a, b);
  const auto pa = positions(a);
  const auto pb = positions(b);
  const std::size_t missing = a.size() + 1;
  auto at = [missing](const std::map<NodeRef, std::size_t>& pos, const NodeRef& x) {
    auto it = pos.find(x);
    return it == pos.end() ? missing : it->second;
  };
  std::set<NodeRef> all;
  all.insert(a.begin(), a.end());
  all.insert(b.begin(), b.end());
  double total = 0.0;
  for (const auto& x : all) {
    const auto ia = at(pa, x);
    const auto ib = at(pb, x);
    total += static_cast<double>(ia > ib ? ia - ib : ib - ia);
  }
  return total;
}

double kendall_distance(const RankedList& a, const RankedList& b, double penalty) {
  check_lengths(a, b);
  const auto pa = positions(a);
  const auto pb = positions(b);
  std::vector<NodeRef> all;
  {
    std::set<NodeRef> u(a.begin(), a.end());
    u.insert(b.begin(), b.end());
    all.assign(u.begin(), u.end());
  }
  double total = 0.0;
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      const auto ax = pa.find(all[x]), ay = pa.find(all[y]);
      const auto bx = pb.find(all[x]), by = pb.find(all[y]);
      const bool in_a_x = ax != pa.end(), in_a_y = ay != pa.end();
      const bool in_b_x = bx != pb.end(), in_b_y = by != pb.end();
      if (in_a_x && in_a_y && in_b_x && in_b_y) {
        // Both lists rank both elements.
        if ((ax->second < ay->second) != (bx->second < by->second)) total += 1.0;
      } else if (in_a_x && in_a_y && (in_b_x || in_b_y)) {
        // b ranks exactly one; it implicitly precedes the other.
        const bool b_says_x_first = in_b_x;
        if ((ax->second < ay->second) != b_says_x_first) total += 1.0;
      } else if (in_b_x && in_b_y && (in_a_x || in_a_y)) {
        const bool a_says_x_first = in_a_x;
        if ((bx->second < by->second) != a_says_x_first) total += 1.0;
      } else if ((in_a_x && in_a_y) || (in_b_x && in_b_y)) {
        // Both in one list, neither in the other: order undetermined.
        total += penalty;
      } else {
        // One element only in a, the other only in b.
        total += 1.0;
      }
    }
  }
  return total;
}

}  // namespace hinembed
