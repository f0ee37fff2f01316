#include "manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hinembed/errors.hpp"

namespace hinembed::cli {

void RunManifest::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

void RunManifest::set_seconds(std::string key, double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  set(std::move(key), std::string(buf));
}

std::string RunManifest::str() const {
  std::ostringstream out;
  for (const auto& [k, v] : entries_) out << k << '\t' << v << '\n';
  return out.str();
}

void RunManifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write manifest " + path.string());
  out << str();
}

}  // namespace hinembed::cli
