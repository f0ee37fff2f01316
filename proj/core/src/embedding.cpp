#include "hinembed/embedding.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "hinembed/errors.hpp"
#include "hinembed/random.hpp"

namespace hinembed {

EmbeddingMatrix::EmbeddingMatrix(std::vector<NodeRef> nodes, std::size_t dim)
    : dim_(dim), nodes_(std::move(nodes)), data_(nodes_.size() * dim, 0.0) {
  if (dim_ == 0) throw ConfigError("embedding dimension must be at least 1");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i], i).second) {
      throw DomainError("duplicate embedding node " + nodes_[i].str());
    }
  }
}

std::optional<std::size_t> EmbeddingMatrix::find(const NodeRef& ref) const {
  auto it = index_.find(ref);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const double> EmbeddingMatrix::vec(const NodeRef& ref) const {
  auto row = find(ref);
  if (!row) throw DomainError("no embedding for node " + ref.str());
  return vec(*row);
}

EmbeddingMatrix init_embeddings(std::vector<NodeRef> nodes, std::size_t dim, std::uint64_t seed) {
  EmbeddingMatrix e(std::move(nodes), dim);
  Rng rng = make_rng(seed, "init");
  const double half = 0.5 / static_cast<double>(dim);
  for (double& x : e.data()) x = (2.0 * uniform01(rng) - 1.0) * half;
  return e;
}

std::vector<std::size_t> align_rows(const TypedGraph& g, const EmbeddingMatrix& e) {
  std::vector<std::size_t> rows(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    auto row = e.find(g.node(v));
    if (!row) throw DomainError("no embedding for node " + g.node(v).str());
    rows[v] = *row;
  }
  return rows;
}

void save_embeddings(const EmbeddingMatrix& e, std::ostream& out) {
  out << e.size() << ' ' << e.dim() << '\n';
  char buf[32];
  for (std::size_t r = 0; r < e.size(); ++r) {
    out << e.node(r).str();
    for (double x : e.vec(r)) {
      std::snprintf(buf, sizeof buf, "%.9g", x);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

void save_embeddings_file(const EmbeddingMatrix& e, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  save_embeddings(e, out);
  if (!out) throw ParseError("write failure on " + path.string());
}

EmbeddingMatrix load_embeddings(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  std::size_t count = 0, dim = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> count >> dim) || (header >> extra)) throw ParseError("header must be 'N d'", 1);
    if (dim == 0) throw ParseError("dimension must be at least 1", 1);
  }
  std::vector<NodeRef> nodes;
  std::set<NodeRef> seen;
  std::vector<double> values;
  nodes.reserve(count);
  values.reserve(count * dim);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (nodes.size() == count) throw ParseError("more rows than the header declares", line_no);
    std::istringstream row(line);
    std::string name;
    row >> name;
    try {
      nodes.push_back(NodeRef::parse(name));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), line_no);
    }
    if (!seen.insert(nodes.back()).second) throw ParseError("duplicate node " + name, line_no);
    std::string token;
    std::size_t got = 0;
    while (row >> token) {
      double x = 0.0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
      if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(x)) {
        throw ParseError("non-numeric component '" + token + "'", line_no);
      }
      values.push_back(x);
      ++got;
    }
    if (got != dim) {
      throw ParseError("expected " + std::to_string(dim) + " components, got " + std::to_string(got),
                       line_no);
    }
  }
  if (nodes.size() != count) {
    throw ParseError("header declares " + std::to_string(count) + " rows, found " +
                     std::to_string(nodes.size()));
  }
  EmbeddingMatrix e(std::move(nodes), dim);
  e.data() = std::move(values);
  return e;
}

EmbeddingMatrix load_embeddings_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return load_embeddings(in);
}

}  // namespace hinembed
