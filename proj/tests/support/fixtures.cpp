#include "support/fixtures.hpp"

namespace hinembed::test {

std::string data_path(const std::string& name) { return std::string(HINEMBED_TEST_DATA_DIR) + "/" + name; }

TypedGraph fixture_raw() { return load_graph_file(data_path("bib_fixture.tsv")); }

TypedGraph fixture() { return add_inverse_edges(fixture_raw()); }

NodeIndex node(const TypedGraph& g, const std::string& type_colon_id) {
  return g.index_of(NodeRef::parse(type_colon_id));
}

}  // namespace hinembed::test
