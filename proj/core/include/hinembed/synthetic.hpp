#pragma once

#include <cstdint>
#include <vector>

#include "hinembed/evalkit.hpp"
#include "hinembed/graph.hpp"

namespace hinembed {

// Bibliographic HIN with planted communities: authors -write-> papers,
// venues -publish-> papers, papers -mention-> topics. Every paper belongs to
// one community; each of its endpoints is drawn from that community with
// probability `intra`, otherwise from another community.
struct PlantedHinConfig {
  int authors = 200;
  int papers = 400;
  int venues = 8;
  int topics = 100;
  int communities = 2;
  int min_authors_per_paper = 2;
  int max_authors_per_paper = 3;
  int topics_per_paper = 3;
  double intra = 0.95;
  std::uint64_t seed = 1;
};

struct PlantedHin {
  std::vector<EdgeRecord> records;
  LabeledNodes author_labels;  // community of every author present in records
};

PlantedHin make_planted_hin(const PlantedHinConfig& cfg);

}  // namespace hinembed
