#include "hinembed/trainer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "hinembed/errors.hpp"

namespace hinembed {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) s += a[c] * b[c];
  return s;
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double z = std::exp(x);
  return z / (1.0 + z);
}

double log_sigmoid(double x) {
  return x >= 0.0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

double joint_probability(std::span<const double> vi, std::span<const double> vj) {
  if (vi.size() != vj.size()) throw DomainError("vector length mismatch");
  return sigmoid(dot(vi, vj));
}

double kl_objective(const TypedGraph& g, const ProximityMatrix& m, const EmbeddingMatrix& e) {
  if (m.node_count() != g.node_count()) throw DomainError("proximity matrix does not match graph");
  const auto rows = align_rows(g, e);
  double total = 0.0;
  for (NodeIndex s = 0; s < m.node_count(); ++s) {
    for (const auto& [t, score] : m.row(s)) {
      if (t == s) continue;
      total -= score * log_sigmoid(dot(e.vec(rows[s]), e.vec(rows[t])));
    }
  }
  return total;
}

double negative_objective(std::span<const double> vi, std::span<const double> vj,
                          std::span<const std::span<const double>> negatives) {
  // log(1 + e^{-x}) = -log_sigmoid(x), evaluated without overflow.
  double t = log_sigmoid(dot(vi, vj));
  for (const auto& vn : negatives) t += log_sigmoid(-dot(vi, vn));
  return t;
}

ObjectiveGradient negative_objective_gradient(std::span<const double> vi,
                                              std::span<const double> vj,
                                              std::span<const std::span<const double>> negatives) {
  const std::size_t d = vi.size();
  ObjectiveGradient g;
  g.source.assign(d, 0.0);
  g.target.assign(d, 0.0);
  const double pos = sigmoid(-dot(vi, vj));
  for (std::size_t c = 0; c < d; ++c) {
    g.source[c] = pos * vj[c];
    g.target[c] = pos * vi[c];
  }
  for (const auto& vn : negatives) {
    const double neg = sigmoid(dot(vi, vn));
    std::vector<double> gn(d);
    for (std::size_t c = 0; c < d; ++c) {
      g.source[c] -= neg * vn[c];
      gn[c] = -neg * vi[c];
    }
    g.negatives.push_back(std::move(gn));
  }
  return g;
}

namespace {

inline double load(double& x) { return std::atomic_ref<double>(x).load(std::memory_order_relaxed); }
inline void store(double& x, double v) {
  std::atomic_ref<double>(x).store(std::clamp(v, -kComponentClamp, kComponentClamp),
                                   std::memory_order_relaxed);
}

}  // namespace

bool sgd_step(EmbeddingMatrix& e, std::size_t i, std::size_t j,
              std::span<const std::size_t> negatives, double weight, double lr,
              std::span<double> scratch) {
  const std::size_t d = e.dim();
  if (scratch.size() < 2 * d + negatives.size()) throw DomainError("sgd scratch buffer too small");
  double* base = e.data().data();
  double* vi = base + i * d;
  double* vj = base + j * d;
  double* snap = scratch.data();
  double* grad = snap + d;
  double* coef = grad + d;

  for (std::size_t c = 0; c < d; ++c) snap[c] = load(vi[c]);
  double x = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    const double y = load(vj[c]);
    x += snap[c] * y;
    grad[c] = y;
  }
  if (!std::isfinite(x)) return false;
  const double pos = sigmoid(-x);
  for (std::size_t c = 0; c < d; ++c) grad[c] *= pos;

  for (std::size_t k = 0; k < negatives.size(); ++k) {
    double* vn = base + negatives[k] * d;
    double y = 0.0;
    for (std::size_t c = 0; c < d; ++c) y += snap[c] * load(vn[c]);
    if (!std::isfinite(y)) return false;
    coef[k] = sigmoid(y);
    for (std::size_t c = 0; c < d; ++c) grad[c] -= coef[k] * load(vn[c]);
  }

  const double step = lr * weight;
  for (std::size_t c = 0; c < d; ++c) store(vj[c], load(vj[c]) + step * pos * snap[c]);
  for (std::size_t k = 0; k < negatives.size(); ++k) {
    double* vn = base + negatives[k] * d;
    for (std::size_t c = 0; c < d; ++c) store(vn[c], load(vn[c]) - step * coef[k] * snap[c]);
  }
  for (std::size_t c = 0; c < d; ++c) store(vi[c], snap[c] + step * grad[c]);
  return true;
}

void TrainConfig::validate() const {
  if (horizon < 1) throw ConfigError("l must be at least 1");
  if (dim < 1) throw ConfigError("d must be at least 1");
  if (negatives < 1) throw ConfigError("K must be at least 1");
  if (!(rho0 > 0.0) || !std::isfinite(rho0)) throw ConfigError("rho0 must be positive");
  if (threads < 1) throw ConfigError("threads must be at least 1");
  if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be non-negative");
}

double learning_rate(double rho0, std::uint64_t step, std::uint64_t total) {
  const double frac = total ? static_cast<double>(step) / static_cast<double>(total) : 1.0;
  return rho0 * std::max(1.0 - frac, 1e-4);
}

TrainResult train(const TypedGraph& g, const TrainConfig& cfg) {
  cfg.validate();
  if (g.empty()) throw ConfigError("cannot train on an empty graph");
  const auto start = std::chrono::steady_clock::now();
  ProximityOptions options;
  options.epsilon = cfg.epsilon;
  options.threads = cfg.threads;
  auto m = truncated_proximity(g, cfg.measure, cfg.horizon, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto result = train(g, m, cfg);
  result.proximity_seconds = seconds;
  return result;
}

TrainResult train(const TypedGraph& g, const ProximityMatrix& m, const TrainConfig& cfg) {
  cfg.validate();
  if (g.empty()) throw ConfigError("cannot train on an empty graph");
  if (m.node_count() != g.node_count()) throw ConfigError("proximity matrix does not match graph");
  const PairSampler pairs(m, cfg.mode);
  const NoiseTable noise(g, cfg.typed_negatives);

  TrainResult result;
  result.positive_pairs = pairs.pairs().size();
  result.embeddings = init_embeddings(g.nodes(), cfg.dim, cfg.seed);
  if (cfg.total_samples == 0) return result;

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = cfg.total_samples;
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(cfg.threads, total));
  const auto K = static_cast<std::size_t>(cfg.negatives);
  constexpr std::uint64_t kSyncEvery = 1024;
  constexpr int kResampleLimit = 16;
  std::atomic<std::uint64_t> progress{0};
  std::atomic<std::uint64_t> skipped{0};
  EmbeddingMatrix& e = result.embeddings;

  auto worker = [&](unsigned tid, std::uint64_t quota) {
    Rng pair_rng = make_rng(cfg.seed, "sampler", tid);
    Rng noise_rng = make_rng(cfg.seed, "noise", tid);
    std::vector<double> scratch(2 * cfg.dim + K);
    std::vector<std::size_t> negs(K);
    std::uint64_t pending = 0;
    std::uint64_t local_skipped = 0;
    for (std::uint64_t s = 0; s < quota; ++s) {
      if (pending == kSyncEvery) {
        progress.fetch_add(pending, std::memory_order_relaxed);
        pending = 0;
      }
      const double lr = learning_rate(cfg.rho0, progress.load(std::memory_order_relaxed) + pending, total);
      const auto draw = pairs.sample(pair_rng);
      for (auto& neg : negs) {
        for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
          neg = cfg.typed_negatives ? noise.sample_like(noise_rng, draw.dst) : noise.sample(noise_rng);
          if (neg != draw.src && neg != draw.dst) break;
        }
      }
      if (!sgd_step(e, draw.src, draw.dst, negs, draw.weight, lr, scratch)) ++local_skipped;
      ++pending;
    }
    progress.fetch_add(pending, std::memory_order_relaxed);
    skipped.fetch_add(local_skipped, std::memory_order_relaxed);
  };

  if (threads == 1) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t quota = total / threads + (t < total % threads ? 1 : 0);
      pool.emplace_back(worker, t, quota);
    }
    for (auto& th : pool) th.join();
  }

  result.skipped_steps = skipped.load();
  result.training_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace hinembed
