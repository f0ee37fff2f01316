#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "hinembed/embedding.hpp"
#include "hinembed/errors.hpp"
#include "hinembed/evalkit.hpp"
#include "hinembed/graph.hpp"
#include "hinembed/proximity.hpp"
#include "hinembed/trainer.hpp"
#include "hinembed/version.hpp"
#include "manifest.hpp"

namespace hinembed::cli {

namespace {

struct GraphOptions {
  std::string path;
  bool no_inverse = false;
};

struct ProximityArgs {
  GraphOptions graph;
  std::string measure = "pcrw";
  int horizon = 2;
  bool cumulative = true;
  double epsilon = 0.0;
  unsigned threads = 1;
  std::string out = "-";
  std::string manifest;
};

struct TrainArgs {
  GraphOptions graph;
  std::string measure = "pcrw";
  int horizon = 2;
  std::size_t dim = 10;
  int negatives = 5;
  double rho0 = 0.025;
  std::uint64_t samples = 10'000'000;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::string mode = "alias_proportional";
  bool typed_negatives = false;
  double epsilon = 0.0;
  std::string out;
  std::string manifest;
};

struct EvalArgs {
  std::string embedding;
  std::string graph;
  std::string labels;
  std::string task;
  int k = 5;
  int repeats = 10;
  std::uint64_t seed = 1;
  std::string query;
  std::string type_filter;
  std::string list_a;
  std::string list_b;
  double penalty = 0.0;
  std::string out = "-";
};

struct KnnArgs {
  std::string embedding;
  std::string query;
  std::size_t k = 5;
  std::string type_filter;
};

// Writes through fn to a file, or to `fallback` when path is "-" or empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write " + path);
  fn(file);
  if (!file) throw ParseError("write failure on " + path);
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string general(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

TypedGraph load_for_walks(const GraphOptions& opts, RunManifest& manifest) {
  Stopwatch clock;
  auto g = load_graph_file(opts.path);
  if (!opts.no_inverse) g = add_inverse_edges(g);
  manifest.set("graph", opts.path);
  manifest.set("inverse_edges", opts.no_inverse ? "off" : "on");
  manifest.set("nodes", g.node_count());
  manifest.set("edges", g.edge_count());
  manifest.set_seconds("time_load_s", clock.seconds());
  return g;
}

std::string manifest_path(const std::string& explicit_path, const std::string& out) {
  if (!explicit_path.empty()) return explicit_path;
  if (out.empty() || out == "-") return {};
  return out + ".manifest";
}

void finish_manifest(RunManifest& manifest, const std::string& path) {
  if (!path.empty()) manifest.write(path);
}

int cmd_proximity(const ProximityArgs& a, std::ostream& out) {
  RunManifest manifest;
  manifest.set("tool", "hinembed");
  manifest.set("version", kVersion);
  manifest.set("command", "proximity");
  const Measure measure = parse_measure(a.measure);
  auto g = load_for_walks(a.graph, manifest);
  manifest.set("measure", to_string(measure));
  manifest.set("l", a.horizon);
  manifest.set("cumulative", a.cumulative ? "true" : "false");
  manifest.set("epsilon", general(a.epsilon));
  manifest.set("threads", a.threads);

  Stopwatch clock;
  ProximityOptions options{a.epsilon, a.threads};
  ProximityMatrix m;
  if (g.empty()) {
    m = ProximityMatrix(0, measure, a.horizon, a.cumulative);
  } else if (a.cumulative) {
    m = truncated_proximity(g, measure, a.horizon, options);
  } else {
    m = exact_k_step(g, measure, a.horizon, options);
  }
  manifest.set_seconds("time_proximity_s", clock.seconds());
  manifest.set("nonzeros", m.nonzeros());
  emit(a.out, out, [&](std::ostream& os) { write_proximity(m, g, os); });
  manifest.set("out", a.out);
  finish_manifest(manifest, manifest_path(a.manifest, a.out));
  return kOk;
}

int cmd_train(const TrainArgs& a, std::ostream& out) {
  RunManifest manifest;
  manifest.set("tool", "hinembed");
  manifest.set("version", kVersion);
  manifest.set("command", "train");

  TrainConfig cfg;
  cfg.measure = parse_measure(a.measure);
  cfg.horizon = a.horizon;
  cfg.dim = a.dim;
  cfg.negatives = a.negatives;
  cfg.rho0 = a.rho0;
  cfg.total_samples = a.samples;
  cfg.threads = a.threads;
  cfg.seed = a.seed;
  cfg.mode = parse_sampling_mode(a.mode);
  cfg.typed_negatives = a.typed_negatives;
  cfg.epsilon = a.epsilon;
  cfg.validate();

  auto g = load_for_walks(a.graph, manifest);
  manifest.set("measure", to_string(cfg.measure));
  manifest.set("l", cfg.horizon);
  manifest.set("d", cfg.dim);
  manifest.set("negatives", cfg.negatives);
  manifest.set("rho0", general(cfg.rho0));
  manifest.set("samples", cfg.total_samples);
  manifest.set("threads", cfg.threads);
  manifest.set("seed", cfg.seed);
  manifest.set("mode", to_string(cfg.mode));
  manifest.set("typed_negatives", cfg.typed_negatives ? "true" : "false");
  manifest.set("epsilon", general(cfg.epsilon));

  TrainResult result;
  try {
    result = train(g, cfg);
  } catch (const ConfigError& e) {
    // Configuration was validated above; what remains is about the input graph.
    throw DomainError(e.what());
  }
  for (double x : result.embeddings.data()) {
    if (!std::isfinite(x)) throw NumericError("training produced a non-finite component");
  }
  manifest.set_seconds("time_proximity_s", result.proximity_seconds);
  manifest.set_seconds("time_train_s", result.training_seconds);
  manifest.set("positive_pairs", result.positive_pairs);
  manifest.set("skipped_steps", result.skipped_steps);
  emit(a.out, out, [&](std::ostream& os) { save_embeddings(result.embeddings, os); });
  manifest.set("out", a.out);
  finish_manifest(manifest, manifest_path(a.manifest, a.out));
  return kOk;
}

RankedList read_ranked_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  RankedList list;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    // Accept bare "type:id" lines or the knn output "rank<TAB>type:id<TAB>score".
    std::string field = line;
    auto tab = line.find('\t');
    if (tab != std::string::npos) {
      auto next = line.find('\t', tab + 1);
      field = line.substr(tab + 1, next == std::string::npos ? std::string::npos : next - tab - 1);
    }
    try {
      list.push_back(NodeRef::parse(field));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return list;
}

void print_ranked(const std::vector<ScoredNode>& ranked, std::ostream& os) {
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    os << r + 1 << '\t' << ranked[r].node.str() << '\t' << fixed6(ranked[r].score) << '\n';
  }
}

std::optional<std::string> type_filter(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

LabeledNodes load_labels_checked(const std::string& path, const EmbeddingMatrix& e) {
  if (path.empty()) throw ConfigError("--labels is required for this task");
  auto labels = read_labels_file(path);
  for (const auto& [node, _] : labels) {
    if (!e.find(node)) throw DomainError("labeled node " + node.str() + " has no embedding");
  }
  return labels;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  auto e = load_embeddings_file(a.embedding);
  std::ostringstream report;
  if (a.task == "recovery") {
    if (a.graph.empty()) throw ConfigError("--graph is required for recovery");
    auto g = load_graph_file(a.graph);
    auto results = auc_all_signatures(g, e);
    if (results.empty()) throw DomainError("no edge signature has a defined AUC");
    double sum = 0.0;
    for (const auto& [sig, auc] : results) {
      report << "auc:" << sig.str() << '\t' << fixed6(auc) << '\n';
      sum += auc;
    }
    report << "auc_average\t" << fixed6(sum / static_cast<double>(results.size())) << '\n';
  } else if (a.task == "classify") {
    auto labels = load_labels_checked(a.labels, e);
    KnnClassifyOptions options;
    options.k = a.k;
    options.repeats = a.repeats;
    options.seed = a.seed;
    auto f1 = knn_classify(e, labels, options);
    report << "macro_f1\t" << fixed6(f1.macro_f1) << '\n';
    report << "micro_f1\t" << fixed6(f1.micro_f1) << '\n';
  } else if (a.task == "cluster") {
    auto labels = load_labels_checked(a.labels, e);
    report << "nmi\t" << fixed6(cluster_nmi(e, labels, a.seed)) << '\n';
  } else if (a.task == "knn") {
    if (a.query.empty()) throw ConfigError("--query is required for knn");
    print_ranked(knn_query(e, NodeRef::parse(a.query), static_cast<std::size_t>(a.k),
                           type_filter(a.type_filter)),
                 report);
  } else if (a.task == "topk") {
    if (a.list_a.empty() || a.list_b.empty()) throw ConfigError("--list-a and --list-b are required");
    auto la = read_ranked_list(a.list_a);
    auto lb = read_ranked_list(a.list_b);
    report << "footrule\t" << general(footrule_distance(la, lb)) << '\n';
    report << "kendall\t" << general(kendall_distance(la, lb, a.penalty)) << '\n';
  } else {
    throw ConfigError("unknown task '" + a.task + "'");
  }
  emit(a.out, out, [&](std::ostream& os) { os << report.str(); });
  return kOk;
}

int cmd_knn(const KnnArgs& a, std::ostream& out) {
  auto e = load_embeddings_file(a.embedding);
  NodeRef query = NodeRef::parse(a.query);
  if (!e.find(query)) throw DomainError("unknown query node " + a.query);
  print_ranked(knn_query(e, query, a.k, type_filter(a.type_filter)), out);
  return kOk;
}

void add_graph_options(CLI::App* cmd, GraphOptions& g) {
  cmd->add_option("graph", g.path, "Edge file (src_id, src_type, edge_type, dst_id, dst_type)")
      ->required();
  cmd->add_flag("--no-inverse", g.no_inverse, "Do not add reversed (^-1) edges");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Meta-path proximity embeddings for heterogeneous information networks", "hinembed"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ProximityArgs pa;
  auto* prox = app.add_subcommand("proximity", "Compute truncated meta-path proximities");
  add_graph_options(prox, pa.graph);
  prox->add_option("--measure", pa.measure, "pc or pcrw")->check(CLI::IsMember({"pc", "pcrw"}));
  prox->add_option("--l", pa.horizon, "Maximum walk length")->check(CLI::PositiveNumber);
  prox->add_flag("--cumulative,!--exact", pa.cumulative,
                 "Sum walk lengths 1..l (default) or keep exactly length l");
  prox->add_option("--epsilon", pa.epsilon, "Drop PCRW partial masses below this")->check(CLI::NonNegativeNumber);
  prox->add_option("--threads", pa.threads, "Worker threads")->check(CLI::PositiveNumber);
  prox->add_option("--out", pa.out, "Output TSV ('-' for stdout)");
  prox->add_option("--manifest", pa.manifest, "Manifest path (default <out>.manifest)");

  TrainArgs ta;
  auto* trn = app.add_subcommand("train", "Train node embeddings");
  add_graph_options(trn, ta.graph);
  trn->add_option("--measure", ta.measure, "pc or pcrw")->check(CLI::IsMember({"pc", "pcrw"}));
  trn->add_option("--l", ta.horizon, "Proximity horizon")->check(CLI::PositiveNumber);
  trn->add_option("--d", ta.dim, "Embedding dimension")->check(CLI::PositiveNumber);
  trn->add_option("--negatives", ta.negatives, "Negative samples per positive (K)")->check(CLI::PositiveNumber);
  trn->add_option("--rho0", ta.rho0, "Initial learning rate")->check(CLI::PositiveNumber);
  trn->add_option("--samples", ta.samples, "Total positive-pair updates");
  trn->add_option("--threads", ta.threads, "Worker threads")->check(CLI::PositiveNumber);
  trn->add_option("--seed", ta.seed, "Master random seed");
  trn->add_option("--mode", ta.mode, "Positive-pair sampling")
      ->check(CLI::IsMember({"alias_proportional", "uniform_weighted"}));
  trn->add_flag("--typed-negatives", ta.typed_negatives, "Draw negatives among the target's node type");
  trn->add_option("--epsilon", ta.epsilon, "Proximity pruning threshold")->check(CLI::NonNegativeNumber);
  trn->add_option("--out", ta.out, "Embedding output file")->required();
  trn->add_option("--manifest", ta.manifest, "Manifest path (default <out>.manifest)");

  EvalArgs ea;
  auto* ev = app.add_subcommand("eval", "Evaluate embeddings");
  ev->add_option("--embedding", ea.embedding, "Embedding file")->required();
  ev->add_option("--graph", ea.graph, "Edge file (recovery)");
  ev->add_option("--labels", ea.labels, "Labels TSV (classify, cluster)");
  ev->add_option("--task", ea.task, "recovery | classify | cluster | knn | topk")
      ->required()
      ->check(CLI::IsMember({"recovery", "classify", "cluster", "knn", "topk"}));
  ev->add_option("--k", ea.k, "Neighbors for classify / list size for knn")->check(CLI::PositiveNumber);
  ev->add_option("--repeats", ea.repeats, "Random splits for classify")->check(CLI::PositiveNumber);
  ev->add_option("--seed", ea.seed, "Seed for splits and clustering");
  ev->add_option("--query", ea.query, "Query node type:id (knn)");
  ev->add_option("--type-filter", ea.type_filter, "Restrict knn results to a node type");
  ev->add_option("--list-a", ea.list_a, "First ranked list (topk)");
  ev->add_option("--list-b", ea.list_b, "Second ranked list (topk)");
  ev->add_option("--penalty", ea.penalty, "Kendall penalty for undetermined pairs")->check(CLI::Range(0.0, 1.0));
  ev->add_option("--out", ea.out, "Report file ('-' for stdout)");

  KnnArgs ka;
  auto* knn = app.add_subcommand("knn", "Nearest nodes by dot product");
  knn->add_option("embedding", ka.embedding, "Embedding file")->required();
  knn->add_option("--query", ka.query, "Query node type:id")->required();
  knn->add_option("--k", ka.k, "Number of results")->check(CLI::PositiveNumber);
  knn->add_option("--type-filter", ka.type_filter, "Restrict results to a node type");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (prox->parsed()) return cmd_proximity(pa, out);
    if (trn->parsed()) return cmd_train(ta, out);
    if (ev->parsed()) return cmd_eval(ea, out);
    if (knn->parsed()) return cmd_knn(ka, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hinembed"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hinembed::cli
