#include <algorithm>
#include <limits>

#include "hinembed/errors.hpp"
#include "hinembed/evalkit.hpp"
#include "hinembed/random.hpp"

namespace hinembed {

namespace {

double squared_distance(const double* a, const double* b, std::size_t dim) {
  double s = 0.0;
  for (std::size_t c = 0; c < dim; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
  return s;
}

// k-means++ seeding: first centre uniform, then proportional to D^2.
std::vector<double> seed_centroids(std::span<const double> points, std::size_t n, std::size_t dim,
                                   int k, Rng& rng) {
  std::vector<double> centroids;
  centroids.reserve(static_cast<std::size_t>(k) * dim);
  auto add = [&](std::size_t i) {
    centroids.insert(centroids.end(), points.begin() + static_cast<std::ptrdiff_t>(i * dim),
                     points.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim));
  };
  add(uniform_index(rng, n));
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  for (int c = 1; c < k; ++c) {
    const double* last = centroids.data() + static_cast<std::size_t>(c - 1) * dim;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], squared_distance(points.data() + i * dim, last, dim));
      total += d2[i];
    }
    std::size_t pick = n - 1;
    if (total > 0.0) {
      double target = uniform01(rng) * total;
      for (std::size_t i = 0; i < n; ++i) {
        target -= d2[i];
        if (target < 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      pick = uniform_index(rng, n);
    }
    add(pick);
  }
  return centroids;
}

KMeansResult lloyd(std::span<const double> points, std::size_t n, std::size_t dim, int k,
                   std::vector<double> centroids, int max_iterations) {
  KMeansResult r;
  r.assignment.assign(n, -1);
  const auto kk = static_cast<std::size_t>(k);
  std::vector<std::size_t> counts(kk);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        double d = squared_distance(points.data() + i * dim,
                                    centroids.data() + static_cast<std::size_t>(c) * dim, dim);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (r.assignment[i] != best) {
        r.assignment[i] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    std::fill(centroids.begin(), centroids.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(r.assignment[i]);
      ++counts[c];
      for (std::size_t d = 0; d < dim; ++d) centroids[c * dim + d] += points[i * dim + d];
    }
    for (std::size_t c = 0; c < kk; ++c) {
      if (counts[c] == 0) continue;
      for (std::size_t d = 0; d < dim; ++d) centroids[c * dim + d] /= static_cast<double>(counts[c]);
    }
    for (std::size_t c = 0; c < kk; ++c) {
      if (counts[c] != 0) continue;
      // Empty cluster: move it onto the point farthest from its centre.
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<std::size_t>(r.assignment[i]);
        if (counts[a] <= 1) continue;
        double d = squared_distance(points.data() + i * dim, centroids.data() + a * dim, dim);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      --counts[static_cast<std::size_t>(r.assignment[far])];
      r.assignment[far] = static_cast<int>(c);
      counts[c] = 1;
      std::copy_n(points.begin() + static_cast<std::ptrdiff_t>(far * dim), dim,
                  centroids.begin() + static_cast<std::ptrdiff_t>(c * dim));
    }
  }
  r.inertia = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r.inertia += squared_distance(points.data() + i * dim,
                                  centroids.data() + static_cast<std::size_t>(r.assignment[i]) * dim, dim);
  }
  r.centroids = std::move(centroids);
  return r;
}

}  // namespace

KMeansResult kmeans(std::span<const double> points, std::size_t dim, int k, std::uint64_t seed,
                    int restarts, int max_iterations) {
  if (dim == 0 || points.size() % dim != 0) throw DomainError("points do not match dimension");
  const std::size_t n = points.size() / dim;
  if (k < 1) throw DomainError("k must be at least 1");
  if (n < static_cast<std::size_t>(k)) throw DomainError("fewer points than clusters");
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Rng rng = make_rng(seed, "kmeans", static_cast<std::uint64_t>(r));
    auto result = lloyd(points, n, dim, k, seed_centroids(points, n, dim, k, rng), max_iterations);
    if (result.inertia < best.inertia) best = std::move(result);
  }
  return best;
}

}  // namespace hinembed
