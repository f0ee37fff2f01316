// Acceptance gate: one PASS/FAIL line per criterion.
//   hinembed_acceptance            run every criterion
//   hinembed_acceptance --only 5   run one criterion
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hinembed/evalkit.hpp"
#include "hinembed/proximity.hpp"
#include "hinembed/sampling.hpp"
#include "hinembed/synthetic.hpp"
#include "hinembed/trainer.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

using namespace hinembed;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1 ---------------------------------------------------------

struct Step {
  const char* edge;
  const char* node;
};

struct Instance {
  const char* metapath;
  std::vector<Step> steps;  // from a1
  double pcrw;
};

// Independent instance enumeration restricted to one meta path.
void instances_of(const TypedGraph& g, const MetaPath& mp, NodeIndex at, std::size_t depth,
                  std::vector<NodeIndex>& walk, std::vector<std::vector<NodeIndex>>& out) {
  if (depth == mp.length()) {
    out.push_back(walk);
    return;
  }
  auto r = g.find_edge_type(mp.steps[depth]);
  if (!r) return;
  for (const auto& e : g.out_edges(at, *r)) {
    walk.push_back(e.dst);
    instances_of(g, mp, e.dst, depth + 1, walk, out);
    walk.pop_back();
  }
}

Outcome criterion1() {
  Outcome o;
  const auto g = test::fixture();
  const NodeIndex a1 = test::node(g, "A:a1"), a2 = test::node(g, "A:a2");
  const std::vector<Instance> table{
      {"write,write^-1", {{"write", "P:p3"}, {"write^-1", "A:a2"}}, 0.25},
      {"write,cite^-1,write^-1", {{"write", "P:p1"}, {"cite^-1", "P:p2"}, {"write^-1", "A:a2"}}, 0.5},
      {"write,mention,mention^-1,write^-1",
       {{"write", "P:p1"}, {"mention", "T:t1"}, {"mention^-1", "P:p2"}, {"write^-1", "A:a2"}}, 0.25},
      {"write,mention,mention^-1,write^-1",
       {{"write", "P:p3"}, {"mention", "T:t2"}, {"mention^-1", "P:p3"}, {"write^-1", "A:a2"}}, 0.25},
      {"write,publish^-1,publish,write^-1",
       {{"write", "P:p3"}, {"publish^-1", "V:v3"}, {"publish", "P:p3"}, {"write^-1", "A:a2"}}, 0.25},
  };

  // Each listed instance is a walk in the graph whose PCRW score is the
  // product of its transition probabilities; its PC score is 1.
  std::map<std::string, std::pair<double, double>> expected_sums;  // metapath -> (pc, pcrw)
  for (const auto& inst : table) {
    NodeIndex at = a1;
    double score = 1.0;
    bool walkable = true;
    for (const auto& s : inst.steps) {
      auto label = EdgeTypeLabel::parse(s.edge);
      auto next = test::node(g, s.node);
      auto r = g.find_edge_type(label);
      if (!r) {
        walkable = false;
        break;
      }
      try {
        score *= transition_prob(g, at, next, *r);
      } catch (const std::exception&) {
        walkable = false;
        break;
      }
      at = next;
    }
    o.require(walkable && std::abs(score - inst.pcrw) <= 1e-12,
              fmt("%s instance PCRW %.12g (expect %.12g)", inst.metapath, score, inst.pcrw));
    auto& sum = expected_sums[inst.metapath];
    sum.first += 1.0;
    sum.second += inst.pcrw;
  }

  for (const auto& [text, sums] : expected_sums) {
    const auto mp = MetaPath::parse(text);
    std::vector<NodeIndex> walk;
    std::vector<std::vector<NodeIndex>> found;
    instances_of(g, mp, a1, 0, walk, found);
    std::size_t to_a2 = 0;
    bool each_pc_one = true;
    for (const auto& w : found) {
      if (w.back() != a2) continue;
      ++to_a2;
      each_pc_one = each_pc_one && w.size() == mp.length();
    }
    double pc = 0.0, pcrw = 0.0;
    for (const auto& e : metapath_proximity(g, mp, Measure::PathCount, a1))
      if (e.dst == a2) pc = e.score;
    for (const auto& e : metapath_proximity(g, mp, Measure::PCRW, a1))
      if (e.dst == a2) pcrw = e.score;
    o.require(each_pc_one && static_cast<double>(to_a2) == sums.first && pc == sums.first,
              fmt("%s: %zu instance(s) a1->a2, s_PC = %g (expect %g, 1 per instance)", text.c_str(), to_a2,
                  pc, sums.first));
    o.require(std::abs(pcrw - sums.second) <= 1e-12,
              fmt("%s: s_PCRW = %.12g (expect %.12g)", text.c_str(), pcrw, sums.second));
  }
  return o;
}

// ---- criterion 2 ---------------------------------------------------------

Outcome criterion2() {
  Outcome o;
  std::size_t entries = 0, pc_mismatch = 0, pcrw_mismatch = 0, refused = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = add_inverse_edges(test::random_typed_graph(seed));
    for (int l = 1; l <= 4; ++l) {
      for (auto measure : {Measure::PathCount, Measure::PCRW}) {
        const auto m = truncated_proximity(g, measure, l);
        for (NodeIndex s = 0; s < g.node_count(); ++s) {
          SparseRow oracle;
          try {
            oracle = brute_force_oracle(g, measure, l, s);
          } catch (const std::exception&) {
            ++refused;
            continue;
          }
          // Compare over the union of supports.
          std::map<NodeIndex, std::pair<double, double>> both;
          for (const auto& e : m.row(s)) both[e.dst].first = e.score;
          for (const auto& e : oracle) both[e.dst].second = e.score;
          for (const auto& [t, v] : both) {
            ++entries;
            const double diff = std::abs(v.first - v.second);
            if (measure == Measure::PathCount) {
              pc_mismatch += v.first != v.second;
            } else {
              worst = std::max(worst, diff);
              pcrw_mismatch += diff > 1e-9;
            }
          }
        }
      }
    }
  }
  o.require(refused == 0, fmt("oracle refused %zu source rows", refused));
  o.require(pc_mismatch == 0, fmt("PC: %zu of %zu entries differ", pc_mismatch, entries));
  o.require(pcrw_mismatch == 0, fmt("PCRW: %zu entries beyond 1e-9, max |diff| = %.3g", pcrw_mismatch, worst));
  return o;
}

// ---- criterion 3 ---------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  using Vec = std::vector<double>;
  Rng rng = make_rng(2024, "gradcheck");
  const std::size_t d = 10;
  const int K = 5;
  const double h = 1e-5;
  auto rand_vec = [&] {
    Vec v(d);
    for (auto& x : v) x = 2.0 * uniform01(rng) - 1.0;
    return v;
  };
  auto objective = [](const Vec& vi, const Vec& vj, const std::vector<Vec>& negs) {
    std::vector<std::span<const double>> spans(negs.begin(), negs.end());
    return negative_objective(vi, vj, spans);
  };
  auto rel = [](const Vec& a, const Vec& b) {
    double diff = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
      diff += (a[c] - b[c]) * (a[c] - b[c]);
      na += a[c] * a[c];
      nb += b[c] * b[c];
    }
    return std::sqrt(diff) / std::max({std::sqrt(na), std::sqrt(nb), 1e-300});
  };

  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Vec vi = rand_vec(), vj = rand_vec();
    std::vector<Vec> negs;
    for (int k = 0; k < K; ++k) negs.push_back(rand_vec());
    std::vector<std::span<const double>> spans(negs.begin(), negs.end());
    const auto grad = negative_objective_gradient(vi, vj, spans);

    // target 0 = v_i, 1 = v_j, 2 + k = v'_k
    for (int target = 0; target < 2 + K; ++target) {
      Vec numeric(d);
      for (std::size_t c = 0; c < d; ++c) {
        double f[2];
        for (int side = 0; side < 2; ++side) {
          Vec xi = vi, xj = vj;
          auto xn = negs;
          Vec& x = target == 0 ? xi : target == 1 ? xj : xn[static_cast<std::size_t>(target - 2)];
          x[c] += side == 0 ? h : -h;
          f[side] = objective(xi, xj, xn);
        }
        numeric[c] = (f[0] - f[1]) / (2.0 * h);
      }
      const Vec& analytic = target == 0   ? grad.source
                            : target == 1 ? grad.target
                                          : grad.negatives[static_cast<std::size_t>(target - 2)];
      worst = std::max(worst, rel(analytic, numeric));
    }
  }
  o.require(worst < 1e-4, fmt("max relative error %.3g over 100 instances (d=10, K=5, h=1e-5)", worst));
  return o;
}

// ---- criterion 4 ---------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  const std::vector<std::size_t> degrees{16, 1};
  NoiseTable noise(degrees);
  o.require(std::abs(noise.probability(0) - 8.0 / 9.0) < 1e-15 && std::abs(noise.probability(1) - 1.0 / 9.0) < 1e-15,
            fmt("table probabilities (%.15f, %.15f)", noise.probability(0), noise.probability(1)));
  Rng rng = make_rng(1, "noise");
  const double n = 1e6;
  std::size_t first = 0;
  for (std::size_t i = 0; i < 1'000'000; ++i) first += noise.sample(rng) == 0;
  const double p = 8.0 / 9.0;
  const double se = std::sqrt(p * (1.0 - p) / n);
  const double f0 = static_cast<double>(first) / n;
  o.require(std::abs(f0 - p) <= 3.0 * se,
            fmt("frequencies (%.6f, %.6f); |f0 - 8/9| = %.2f standard errors", f0, 1.0 - f0, std::abs(f0 - p) / se));
  return o;
}

// ---- criteria 5-7: planted HIN -------------------------------------------

struct Planted {
  TypedGraph graph;
  LabeledNodes labels;
};

const Planted& planted() {
  static const Planted p = [] {
    PlantedHinConfig cfg;  // 200 authors, 400 papers, 8 venues, 100 topics, 2 communities, 95% intra
    auto hin = make_planted_hin(cfg);
    return Planted{add_inverse_edges(TypedGraph::from_records(hin.records)), hin.author_labels};
  }();
  return p;
}

TrainConfig planted_config(Measure measure, std::uint64_t seed, unsigned threads) {
  TrainConfig cfg;
  cfg.measure = measure;
  cfg.horizon = 2;
  cfg.dim = 10;
  cfg.negatives = 5;
  cfg.total_samples = 2'000'000;
  cfg.threads = threads;
  cfg.seed = seed;
  return cfg;
}

const EdgeSignature kWrite{"A", {"write", false}, "P"};

double average_auc(const TypedGraph& g, const EmbeddingMatrix& e) {
  auto all = auc_all_signatures(g, e);
  double s = 0.0;
  for (const auto& [sig, auc] : all) s += auc;
  return all.empty() ? 0.0 : s / static_cast<double>(all.size());
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = planted();
  o.details.push_back(fmt("     planted HIN: %zu nodes, %zu edges with inverses, %zu labeled authors",
                          p.graph.node_count(), p.graph.edge_count(), p.labels.size()));
  const auto r = train(p.graph, planted_config(Measure::PCRW, 1, 1));
  const double auc = auc_link_recovery(p.graph, r.embeddings, kWrite);
  const auto f1 = knn_classify(r.embeddings, p.labels, {});
  const double nmi = cluster_nmi(r.embeddings, p.labels, 1);
  const double elapsed = seconds_since(t0);
  o.require(auc >= 0.90, fmt("(a) write AUC %.4f >= 0.90", auc));
  o.require(f1.macro_f1 >= 0.90, fmt("(b) kNN macro-F1 %.4f >= 0.90 (micro %.4f)", f1.macro_f1, f1.micro_f1));
  o.require(nmi >= 0.5, fmt("(c) k-means NMI %.4f >= 0.5", nmi));
  o.require(elapsed < 60.0, fmt("runtime %.2f s < 60 s (proximity %.2f s, training %.2f s)", elapsed,
                                r.proximity_seconds, r.training_seconds));
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto& p = planted();
  int wins = 0;
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto pcrw = train(p.graph, planted_config(Measure::PCRW, seed, 1));
    const auto pc = train(p.graph, planted_config(Measure::PathCount, seed, 1));
    const double a_pcrw = average_auc(p.graph, pcrw.embeddings);
    const double a_pc = average_auc(p.graph, pc.embeddings);
    const bool ok = a_pcrw >= a_pc - 0.02;
    wins += ok;
    o.details.push_back(fmt("     seed %llu: average AUC PCRW %.4f, PC %.4f (write: %.4f vs %.4f) %s",
                            static_cast<unsigned long long>(seed), a_pcrw, a_pc,
                            auc_link_recovery(p.graph, pcrw.embeddings, kWrite),
                            auc_link_recovery(p.graph, pc.embeddings, kWrite), ok ? "ok" : "miss"));
  }
  o.require(wins >= 2, fmt("PCRW >= PC - 0.02 on %d of 3 seeds (majority needed)", wins));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto& p = planted();
  const auto cfg1 = planted_config(Measure::PCRW, 7, 1);
  const auto m = truncated_proximity(p.graph, cfg1.measure, cfg1.horizon);
  const auto a = train(p.graph, m, cfg1);
  const auto b = train(p.graph, m, cfg1);
  std::ostringstream sa, sb;
  save_embeddings(a.embeddings, sa);
  save_embeddings(b.embeddings, sb);
  o.require(a.embeddings == b.embeddings && sa.str() == sb.str(),
            "threads=1 fixed-seed runs are bitwise identical (in memory and saved)");

  const auto cfg4 = planted_config(Measure::PCRW, 7, 4);
  const auto c = train(p.graph, m, cfg4);
  const double speedup = a.training_seconds / c.training_seconds;
  o.require(speedup >= 2.0, fmt("threads=4 training speedup %.2fx >= 2x (%.3f s vs %.3f s, %u hardware threads)",
                                speedup, a.training_seconds, c.training_seconds,
                                std::thread::hardware_concurrency()));
  const double auc1 = auc_link_recovery(p.graph, a.embeddings, kWrite);
  const double auc4 = auc_link_recovery(p.graph, c.embeddings, kWrite);
  o.require(std::abs(auc1 - auc4) <= 0.02, fmt("write AUC threads=4 %.4f vs threads=1 %.4f (within 0.02)", auc4, auc1));
  return o;
}

// ---- criterion 8 ---------------------------------------------------------

RankedList random_list(Rng& rng, std::size_t k, std::size_t universe) {
  std::vector<int> pool(universe);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + uniform_index(rng, universe - i)]);
  RankedList out;
  for (std::size_t i = 0; i < k; ++i) out.push_back({"X", std::to_string(pool[i])});
  return out;
}

Outcome criterion8() {
  Outcome o;

  {
    std::size_t groups = 0, bad = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto g = add_inverse_edges(test::random_typed_graph(seed));
      for (NodeIndex u = 0; u < g.node_count(); ++u) {
        for (EdgeTypeIndex r = 0; r < g.edge_type_count(); ++r) {
          auto group = g.out_edges(u, r);
          if (group.empty()) continue;
          ++groups;
          std::set<NodeIndex> targets;
          for (const auto& e : group) targets.insert(e.dst);
          double sum = 0.0;
          for (NodeIndex v : targets) sum += transition_prob(g, u, v, r);
          bad += std::abs(sum - 1.0) > 1e-12;
        }
      }
    }
    o.require(bad == 0, fmt("per-type transition stochasticity: %zu of %zu (node, type) groups off", bad, groups));
  }

  {
    std::size_t rows = 0, bad = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto g = add_inverse_edges(test::random_typed_graph(seed));
      for (NodeIndex s = 0; s < g.node_count(); ++s) {
        for (const auto& mp : enumerate_metapaths(g.schema(), g.node(s).type, 3)) {
          double mass = 0.0;
          for (const auto& e : metapath_proximity(g, mp, Measure::PCRW, s)) mass += e.score;
          ++rows;
          worst = std::max(worst, mass);
          bad += mass > 1.0 + 1e-12;
        }
      }
    }
    o.require(bad == 0, fmt("per-meta-path PCRW mass <= 1: %zu of %zu rows exceed (max %.15f)", bad, rows, worst));
  }

  {
    std::size_t checked = 0, bad = 0, not_monotone = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto g = add_inverse_edges(test::random_typed_graph(seed));
      const auto pc = truncated_proximity(g, Measure::PathCount, 3);
      for (NodeIndex s = 0; s < g.node_count(); ++s) {
        for (const auto& e : pc.row(s)) {
          ++checked;
          bad += pc.at(e.dst, s) != e.score;
        }
      }
      for (auto measure : {Measure::PathCount, Measure::PCRW}) {
        ProximityMatrix prev = truncated_proximity(g, measure, 1);
        for (int l = 2; l <= 4; ++l) {
          auto next = truncated_proximity(g, measure, l);
          for (NodeIndex s = 0; s < g.node_count(); ++s)
            for (const auto& e : prev.row(s)) not_monotone += next.at(s, e.dst) < e.score;
          prev = std::move(next);
        }
      }
    }
    o.require(bad == 0, fmt("PC symmetry under inverse augmentation: %zu of %zu entries asymmetric", bad, checked));
    o.require(not_monotone == 0, fmt("cumulative monotonicity in l: %zu decreasing entries", not_monotone));
  }

  {
    // Raw dot products vs their sigmoid on a trained embedding.
    const auto& p = planted();
    auto cfg = planted_config(Measure::PCRW, 5, 1);
    cfg.total_samples = 200'000;
    const auto r = train(p.graph, cfg);
    std::vector<double> pos, neg, spos, sneg;
    for (NodeIndex s : p.graph.nodes_of_type("A")) {
      std::set<NodeIndex> linked;
      auto t = p.graph.find_edge_type({"write", false});
      for (const auto& e : p.graph.out_edges(s, *t)) linked.insert(e.dst);
      for (NodeIndex q : p.graph.nodes_of_type("P")) {
        const double x = dot(r.embeddings.vec(p.graph.node(s)), r.embeddings.vec(p.graph.node(q)));
        (linked.count(q) ? pos : neg).push_back(x);
        (linked.count(q) ? spos : sneg).push_back(sigmoid(x));
      }
    }
    const double raw = auc_from_scores(pos, neg), squashed = auc_from_scores(spos, sneg);
    // Independent check: AUC from raw pair counting.
    Rng rng(3);
    std::vector<double> a(300), b(300), ea, eb;
    for (auto& x : a) x = std::round(uniform01(rng) * 20.0);
    for (auto& x : b) x = std::round(uniform01(rng) * 20.0) - 2.0;
    for (double x : a) ea.push_back(std::exp(0.3 * x) - 7.0);
    for (double x : b) eb.push_back(std::exp(0.3 * x) - 7.0);
    o.require(raw == squashed && auc_from_scores(a, b) == auc_from_scores(ea, eb) &&
                  raw == auc_link_recovery(p.graph, r.embeddings, kWrite),
              fmt("AUC monotone-transform invariance: dot %.12f, sigmoid(dot) %.12f", raw, squashed));
  }

  {
    Rng rng = make_rng(8, "topk");
    std::size_t asym = 0, zero_bad = 0, tri_footrule = 0, tri_kendall = 0;
    const int triples = 1000;
    std::string kendall_example;
    for (int i = 0; i < triples; ++i) {
      const std::size_t k = 1 + uniform_index(rng, 10);
      const std::size_t universe = k + uniform_index(rng, k + 1);
      auto a = random_list(rng, k, universe), b = random_list(rng, k, universe), c = random_list(rng, k, universe);
      for (const auto* x : {&a, &b, &c}) {
        for (const auto* y : {&a, &b, &c}) {
          asym += footrule_distance(*x, *y) != footrule_distance(*y, *x);
          asym += kendall_distance(*x, *y) != kendall_distance(*y, *x);
          zero_bad += (footrule_distance(*x, *y) == 0.0) != (*x == *y);
          zero_bad += (kendall_distance(*x, *y) == 0.0) != (*x == *y);
        }
      }
      tri_footrule += footrule_distance(a, c) > footrule_distance(a, b) + footrule_distance(b, c);
      if (kendall_distance(a, c) > kendall_distance(a, b) + kendall_distance(b, c)) {
        if (tri_kendall++ == 0) {
          kendall_example = fmt("e.g. k=%zu: K(a,c)=%g > K(a,b)+K(b,c)=%g", k, kendall_distance(a, c),
                                kendall_distance(a, b) + kendall_distance(b, c));
        }
      }
    }
    o.require(asym == 0, fmt("top-k symmetry: %zu asymmetric evaluations", asym));
    o.require(zero_bad == 0, fmt("top-k distance zero iff lists equal: %zu violations", zero_bad));
    o.require(tri_footrule == 0, fmt("footrule triangle inequality: %zu of %d random triples violate", tri_footrule, triples));
    o.require(tri_kendall == 0, fmt("kendall (p = 0) triangle inequality: %zu of %d random triples violate %s",
                                    tri_kendall, triples, kendall_example.c_str()));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "fixture instance regression", 1.0, criterion1},
      {2, "oracle equivalence", 60.0, criterion2},
      {3, "gradient correctness", 5.0, criterion3},
      {4, "noise law", 5.0, criterion4},
      {5, "planted structure end to end", 0.0, criterion5},  // timed inside
      {6, "PCRW vs PC trend", 0.0, criterion6},
      {7, "determinism and hogwild", 0.0, criterion7},
      {8, "property suites", 0.0, criterion8},
  };
  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    if (c.budget_seconds > 0.0) {
      o.require(elapsed < c.budget_seconds, fmt("runtime %.3f s < %.0f s", elapsed, c.budget_seconds));
    }
    std::printf("%s  criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, elapsed);
    for (const auto& d : o.details) std::printf("        %s\n", d.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
