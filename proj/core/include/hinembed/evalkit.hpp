#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hinembed/embedding.hpp"
#include "hinembed/graph.hpp"

namespace hinembed {

// Class label per node; all nodes share one type.
using LabeledNodes = std::map<NodeRef, std::string>;

// TSV "type:id<TAB>label".
LabeledNodes read_labels(std::istream& in);
LabeledNodes read_labels_file(const std::filesystem::path& path);

// Probability that a positive outscores a negative, ties counting one half.
// Computed from mid-ranks. Throws DomainError when either side is empty.
double auc_from_scores(std::span<const double> positives, std::span<const double> negatives);

// AUC of dot-product scores over every ordered (src_type, dst_type) pair
// excluding self-pairs; positives are the graph's edges with the given
// signature.
double auc_link_recovery(const TypedGraph& g, const EmbeddingMatrix& e, const EdgeSignature& sig);

// Per-signature AUC for every non-inverse edge signature of g. Signatures
// whose AUC is undefined are omitted.
std::vector<std::pair<EdgeSignature, double>> auc_all_signatures(const TypedGraph& g,
                                                                  const EmbeddingMatrix& e);

struct F1Scores {
  double macro_f1 = 0.0;
  double micro_f1 = 0.0;
};

// Macro F1 averages over classes appearing in truth or predictions.
F1Scores f1_scores(std::span<const std::string> truth, std::span<const std::string> predicted);

struct Neighbor {
  std::string label;
  double distance;
};

// Most frequent label; ties go to the smaller distance sum, then the
// lexicographically smaller label.
std::string majority_vote(std::span<const Neighbor> neighbors);

// Majority label among the k training rows nearest to query (Euclidean).
std::string knn_predict(const EmbeddingMatrix& e, std::span<const std::size_t> train_rows,
                        std::span<const std::string> train_labels, std::span<const double> query,
                        std::size_t k);

struct KnnClassifyOptions {
  int k = 5;
  double train_fraction = 0.8;
  int repeats = 10;
  std::uint64_t seed = 1;
};

// Euclidean kNN over random train/test splits; scores averaged over repeats.
F1Scores knn_classify(const EmbeddingMatrix& e, const LabeledNodes& labels,
                      const KnnClassifyOptions& options = {});

struct KMeansResult {
  std::vector<int> assignment;
  std::vector<double> centroids;  // k x dim, row-major
  double inertia = 0.0;
};

// Lloyd's algorithm with k-means++ seeding; best inertia over restarts.
// points is n x dim row-major.
KMeansResult kmeans(std::span<const double> points, std::size_t dim, int k, std::uint64_t seed,
                    int restarts = 10, int max_iterations = 300);

// I(C;L) / sqrt(H(C) H(L)); 0 when either entropy is 0.
double nmi(std::span<const int> clusters, std::span<const int> labels);

// k-means with one cluster per distinct label, scored by NMI.
double cluster_nmi(const EmbeddingMatrix& e, const LabeledNodes& labels, std::uint64_t seed);

struct ScoredNode {
  NodeRef node;
  double score;
};

// Top-k nodes by dot product with the query (query excluded), optionally
// restricted to one node type. Ties break by NodeRef order.
std::vector<ScoredNode> knn_query(const EmbeddingMatrix& e, const NodeRef& query, std::size_t k,
                                  const std::optional<std::string>& type_filter = std::nullopt);

using RankedList = std::vector<NodeRef>;

// Top-k Spearman footrule; elements missing from a list sit at position k+1.
// Throws DomainError on unequal lengths or duplicates.
double footrule_distance(const RankedList& a, const RankedList& b);

// Top-k Kendall distance: discordant pairs whose order both lists determine
// count 1; pairs present in only one list and absent from the other count
// `penalty`.
double kendall_distance(const RankedList& a, const RankedList& b, double penalty = 0.0);

}  // namespace hinembed
