#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hinembed/graph.hpp"

namespace hinembed {

// One dense vector per node, stored row-major.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::vector<NodeRef> nodes, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  const NodeRef& node(std::size_t row) const { return nodes_.at(row); }
  const std::vector<NodeRef>& nodes() const { return nodes_; }
  std::optional<std::size_t> find(const NodeRef& ref) const;

  std::span<double> vec(std::size_t row) { return {data_.data() + row * dim_, dim_}; }
  std::span<const double> vec(std::size_t row) const { return {data_.data() + row * dim_, dim_}; }
  // Throws DomainError when ref has no vector.
  std::span<const double> vec(const NodeRef& ref) const;

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool operator==(const EmbeddingMatrix& other) const {
    return dim_ == other.dim_ && nodes_ == other.nodes_ && data_ == other.data_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<NodeRef> nodes_;
  std::map<NodeRef, std::size_t> index_;
  std::vector<double> data_;
};

// Components i.i.d. uniform in [-0.5/d, 0.5/d], deterministic in seed.
EmbeddingMatrix init_embeddings(std::vector<NodeRef> nodes, std::size_t dim, std::uint64_t seed);

// Row of each graph node in e; throws DomainError naming the first node
// without a vector.
std::vector<std::size_t> align_rows(const TypedGraph& g, const EmbeddingMatrix& e);

// Text format: "N d" header, then "type:id c1 ... cd" per node with
// components printed to 9 significant digits.
void save_embeddings(const EmbeddingMatrix& e, std::ostream& out);
void save_embeddings_file(const EmbeddingMatrix& e, const std::filesystem::path& path);
EmbeddingMatrix load_embeddings(std::istream& in);
EmbeddingMatrix load_embeddings_file(const std::filesystem::path& path);

}  // namespace hinembed
