#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sparsecut/expansion.hpp"
#include "sparsecut/structure.hpp"

namespace sparsecut {

/// Source of green/red colorings of V(G). Colorings are addressed by index so
/// that trials can be evaluated in any order or in parallel.
class ColoringFamily {
 public:
  virtual ~ColoringFamily() = default;
  [[nodiscard]] virtual std::uint64_t size() const = 0;
  /// Writes coloring `index` into green (1 = green) for n vertices.
  virtual void coloring(std::uint64_t index, int n, std::vector<char>& green) const = 0;
  [[nodiscard]] virtual std::string describe() const = 0;
};

/// All 2^n colorings; coloring i makes vertex v green iff bit v of i is set.
class ExhaustiveFamily final : public ColoringFamily {
 public:
  static constexpr int kMaxVertices = 22;

  explicit ExhaustiveFamily(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("exhaustive coloring family supports at most " + std::to_string(kMaxVertices) + " vertices, got " + std::to_string(n));
    }
  }
  [[nodiscard]] std::uint64_t size() const override { return std::uint64_t{1} << n_; }
  void coloring(std::uint64_t index, int n, std::vector<char>& green) const override {
    if (n != n_) throw std::invalid_argument("coloring family built for a different vertex count");
    green.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) green[static_cast<std::size_t>(v)] = static_cast<char>((index >> v) & 1U);
  }
  [[nodiscard]] std::string describe() const override { return "exhaustive"; }

 private:
  int n_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// `trials` uniform colorings. Coloring t is a pure function of (seed, t):
/// word b of its bit stream is splitmix64(splitmix64(seed ^ splitmix64(t)) + b).
class RandomizedFamily final : public ColoringFamily {
 public:
  RandomizedFamily(std::uint64_t trials, std::uint64_t seed) : trials_(trials), seed_(seed) {}
  [[nodiscard]] std::uint64_t size() const override { return trials_; }
  void coloring(std::uint64_t index, int n, std::vector<char>& green) const override {
    green.resize(static_cast<std::size_t>(n));
    const std::uint64_t key = detail::splitmix64(seed_ ^ detail::splitmix64(index));
    std::uint64_t word = 0;
    for (int v = 0; v < n; ++v) {
      if (v % 64 == 0) word = detail::splitmix64(key + static_cast<std::uint64_t>(v / 64));
      green[static_cast<std::size_t>(v)] = static_cast<char>(word & 1U);
      word >>= 1U;
    }
  }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::string describe() const override {
    return "randomized(trials=" + std::to_string(trials_) + ", seed=" + std::to_string(seed_) + ")";
  }

 private:
  std::uint64_t trials_;
  std::uint64_t seed_;
};

/// ceil(2^((d+1)k) * log_inv_delta) with an exact rational logarithm bound.
inline std::uint64_t trials_for_log_bound(int k, int d, const Rational& log_inv_delta) {
  if (k < 1 || d < 0) throw std::invalid_argument("trial count needs k >= 1 and d >= 0");
  if (log_inv_delta.sign() <= 0) throw std::invalid_argument("log(1/delta) must be positive");
  const long exponent = static_cast<long>(d + 1) * k;
  if (exponent > 62) throw std::overflow_error("trial count 2^" + std::to_string(exponent) + " * ln(1/delta) does not fit in 64 bits");
  const __int128 pow2 = __int128{1} << exponent;
  const __int128 scaled = pow2 * log_inv_delta.num();
  const __int128 q = (scaled + log_inv_delta.den() - 1) / log_inv_delta.den();
  if (q > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("trial count 2^" + std::to_string(exponent) + " * ln(1/delta) does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(q);
}

/// ceil(2^((d+1)k) * ln(1/delta)). The logarithm is evaluated in long double
/// and nudged upward by a few ulps, so rounding can only overestimate.
inline std::uint64_t trial_count(int k, int d, const Rational& delta) {
  if (k < 1 || d < 0) throw std::invalid_argument("trial count needs k >= 1 and d >= 0");
  if (delta.sign() <= 0 || delta >= Rational(1)) throw std::invalid_argument("delta must lie strictly between 0 and 1");
  const long exponent = static_cast<long>(d + 1) * k;
  if (exponent > 62) throw std::overflow_error("trial count 2^" + std::to_string(exponent) + " * ln(1/delta) does not fit in 64 bits");
  long double ln = std::log(static_cast<long double>(delta.den())) - std::log(static_cast<long double>(delta.num()));
  for (int i = 0; i < 4; ++i) ln = std::nextafter(ln, std::numeric_limits<long double>::infinity());
  const long double raw = std::ldexp(ln, static_cast<int>(exponent));
  if (!(raw < 9.2e18L)) throw std::overflow_error("trial count 2^" + std::to_string(exponent) + " * ln(1/delta) does not fit in 64 bits");
  return static_cast<std::uint64_t>(std::ceil(raw));
}

struct GreenComponentSummary {
  VertexSet members;
  int count = 0;       ///< n_i
  Rational boundary;   ///< m_i = w(E(C_i, V - C_i))
};

inline std::vector<GreenComponentSummary> green_components(const WeightedGraph& g, const std::vector<char>& green) {
  std::vector<GreenComponentSummary> out;
  for (VertexSet& comp : connected_components(g, green)) {
    GreenComponentSummary s;
    s.count = static_cast<int>(comp.size());
    s.boundary = Rational(0);
    for (const Vertex v : comp) {
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!green[static_cast<std::size_t>(nb.vertex)]) s.boundary += nb.weight;
      }
    }
    s.members = std::move(comp);
    out.push_back(std::move(s));
  }
  return out;
}

/// Exact-size 0/1 knapsack over components: D[s] = min total boundary of a
/// subset of components with total size s. Returns the best D[s]/s over
/// 1 <= s <= smax and the union of the chosen components, or nullopt when no
/// subset fits.
inline std::optional<SseSolution> best_component_union(const std::vector<GreenComponentSummary>& comps, int smax) {
  const ExpansionValue inf = ExpansionValue::infinity();
  const auto width = static_cast<std::size_t>(smax + 1);
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].count <= smax) items.push_back(i);
  }
  if (items.empty()) return std::nullopt;

  std::vector<ExpansionValue> d(width, inf);
  d[0] = ExpansionValue(0);
  std::vector<char> take(items.size() * width, 0);
  for (std::size_t t = 0; t < items.size(); ++t) {
    const GreenComponentSummary& c = comps[items[t]];
    const ExpansionValue m(c.boundary);
    for (int s = smax; s >= c.count; --s) {
      const ExpansionValue cand = d[static_cast<std::size_t>(s - c.count)] + m;
      if (cand < d[static_cast<std::size_t>(s)]) {
        d[static_cast<std::size_t>(s)] = cand;
        take[t * width + static_cast<std::size_t>(s)] = 1;
      }
    }
  }

  ExpansionValue best = inf;
  int best_s = 0;
  for (int s = 1; s <= smax; ++s) {
    const ExpansionValue v = d[static_cast<std::size_t>(s)] / Rational(s);
    if (v < best) {
      best = v;
      best_s = s;
    }
  }
  if (best.is_infinite()) return std::nullopt;

  VertexSet witness;
  int s = best_s;
  for (std::size_t t = items.size(); t-- > 0 && s > 0;) {
    if (!take[t * width + static_cast<std::size_t>(s)]) continue;
    const GreenComponentSummary& c = comps[items[t]];
    witness.insert(witness.end(), c.members.begin(), c.members.end());
    s -= c.count;
  }
  return SseSolution{best, normalized(std::move(witness))};
}

struct RandomSeparationResult {
  std::optional<SseSolution> best;  ///< nullopt when no coloring produced a candidate
  std::uint64_t trials = 0;
  std::uint64_t best_trial = 0;     ///< smallest trial index attaining the best value
  std::uint64_t productive_trials = 0;
};

/// Worker count from SSC_THREADS (default 1).
inline unsigned threads_from_env() {
  const char* raw = std::getenv("SSC_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) throw std::invalid_argument(std::string("SSC_THREADS must be a positive integer, got '") + raw + "'");
  return static_cast<unsigned>(std::min<long>(v, 256));
}

/// Random separation for kSSE. With ExhaustiveFamily the result equals psi_k;
/// with a random family it is an upper bound that is tight once some coloring
/// makes an optimal set green and its neighbourhood red.
inline RandomSeparationResult sse_random_separation(const WeightedGraph& g, int k, const ColoringFamily& family, unsigned threads = 1) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("sse_random_separation needs at least 2 vertices");
  if (k < 1 || k > n - 1) throw std::invalid_argument("random separation needs 1 <= k <= n-1");
  if (g.has_vertex_weights()) throw std::invalid_argument("sse_random_separation requires unit vertex weights");

  const std::uint64_t total = family.size();
  threads = std::max(1U, static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1))));

  struct Partial {
    std::optional<SseSolution> best;
    std::uint64_t trial = 0;
    std::uint64_t productive = 0;
  };
  auto run = [&](std::uint64_t begin, std::uint64_t end, Partial& out) {
    std::vector<char> green;
    for (std::uint64_t t = begin; t < end; ++t) {
      family.coloring(t, n, green);
      auto cand = best_component_union(green_components(g, green), k);
      if (!cand) continue;
      ++out.productive;
      if (!out.best || cand->value < out.best->value) {
        out.best = std::move(cand);
        out.trial = t;
      }
    }
  };

  std::vector<Partial> parts(threads);
  if (threads == 1) {
    run(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t b = std::min(total, chunk * w);
      const std::uint64_t e = std::min(total, b + chunk);
      pool.emplace_back(run, b, e, std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
  }

  // Chunks are in trial order, so a strict comparison keeps the lowest trial on ties.
  RandomSeparationResult result;
  result.trials = total;
  for (Partial& p : parts) {
    result.productive_trials += p.productive;
    if (p.best && (!result.best || p.best->value < result.best->value)) {
      result.best = std::move(p.best);
      result.best_trial = p.trial;
    }
  }
  return result;
}

}  // namespace sparsecut
