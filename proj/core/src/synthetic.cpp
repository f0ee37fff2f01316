#include "hinembed/synthetic.hpp"

#include <set>
#include <string>

#include "hinembed/errors.hpp"
#include "hinembed/random.hpp"

namespace hinembed {

namespace {

// Members of community c among `count` nodes are those with index % C == c.
int draw_member(Rng& rng, int count, int communities, int community) {
  const int members = (count - community + communities - 1) / communities;
  return community + communities * static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(members)));
}

int pick_community(Rng& rng, int home, int communities, double intra) {
  if (communities == 1 || uniform01(rng) < intra) return home;
  int other = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(communities - 1)));
  return other >= home ? other + 1 : other;
}

}  // namespace

PlantedHin make_planted_hin(const PlantedHinConfig& cfg) {
  const int C = cfg.communities;
  if (C < 1 || cfg.authors < C || cfg.papers < C || cfg.venues < C || cfg.topics < C) {
    throw ConfigError("every node type needs at least one member per community");
  }
  if (cfg.min_authors_per_paper < 1 || cfg.max_authors_per_paper < cfg.min_authors_per_paper ||
      cfg.topics_per_paper < 1) {
    throw ConfigError("invalid per-paper counts");
  }
  Rng rng = make_rng(cfg.seed, "planted");
  PlantedHin out;
  auto name = [](char prefix, int i) { return std::string(1, prefix) + std::to_string(i); };

  std::set<int> present_authors;
  for (int p = 0; p < cfg.papers; ++p) {
    const int home = p % C;
    const NodeRef paper{"P", name('p', p)};

    const int n_authors = cfg.min_authors_per_paper +
                          static_cast<int>(uniform_index(
                              rng, static_cast<std::uint64_t>(cfg.max_authors_per_paper - cfg.min_authors_per_paper + 1)));
    std::set<int> authors;
    // First slot cycles through the community so every author gets work.
    const int designated = p % cfg.authors;
    const int first_c = pick_community(rng, home, C, cfg.intra);
    authors.insert(first_c == designated % C ? designated : draw_member(rng, cfg.authors, C, first_c));
    for (int attempt = 0; static_cast<int>(authors.size()) < n_authors && attempt < 64; ++attempt) {
      authors.insert(draw_member(rng, cfg.authors, C, pick_community(rng, home, C, cfg.intra)));
    }
    for (int a : authors) {
      out.records.push_back({{"A", name('a', a)}, {"write", false}, paper});
      present_authors.insert(a);
    }

    const int venue = draw_member(rng, cfg.venues, C, pick_community(rng, home, C, cfg.intra));
    out.records.push_back({{"V", name('v', venue)}, {"publish", false}, paper});

    std::set<int> topics;
    for (int attempt = 0; static_cast<int>(topics.size()) < cfg.topics_per_paper && attempt < 64; ++attempt) {
      topics.insert(draw_member(rng, cfg.topics, C, pick_community(rng, home, C, cfg.intra)));
    }
    for (int t : topics) out.records.push_back({paper, {"mention", false}, {"T", name('t', t)}});
  }
  for (int a : present_authors) out.author_labels[{"A", name('a', a)}] = "c" + std::to_string(a % C);
  return out;
}

}  // namespace hinembed
