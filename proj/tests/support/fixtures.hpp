#pragma once

#include <string>

#include "hinembed/graph.hpp"

namespace hinembed::test {

std::string data_path(const std::string& name);

// The shipped bibliographic fixture, raw and with inverse edges.
TypedGraph fixture_raw();
TypedGraph fixture();

NodeIndex node(const TypedGraph& g, const std::string& type_colon_id);

}  // namespace hinembed::test
