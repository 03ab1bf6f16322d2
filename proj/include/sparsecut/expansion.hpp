#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsecut/expansion_value.hpp"
#include "sparsecut/graph.hpp"

namespace sparsecut {

/// Optimal small set: value psi_k and one minimizing set.
struct SseSolution {
  ExpansionValue value;
  VertexSet witness;
};

/// Optimal k-partition: value phi_k and one minimizing partition.
struct KscSolution {
  ExpansionValue value;
  KPartition partition;
};

/// Total weight of edges with exactly one endpoint in s.
inline Rational cut_weight(const WeightedGraph& g, std::span<const Vertex> s) {
  const auto in = membership(g, s);
  Rational total{0};
  for (const Edge& e : g.edges()) {
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) total += e.weight;
  }
  return total;
}

/// Sum of vertex weights (|s| when the graph carries no vertex weights).
inline Rational set_weight(const WeightedGraph& g, std::span<const Vertex> s) {
  require_vertex_set(g, s);
  if (!g.has_vertex_weights()) return Rational(static_cast<std::int64_t>(s.size()));
  Rational total{0};
  for (const Vertex v : s) total += g.vertex_weight(v);
  return total;
}

/// cut_weight(s) / w(s). Throws for the empty set, where expansion is undefined.
inline ExpansionValue edge_expansion(const WeightedGraph& g, std::span<const Vertex> s) {
  if (s.empty()) throw std::invalid_argument("edge expansion of the empty set is undefined");
  const VertexSet members = normalized(VertexSet(s.begin(), s.end()));
  return ExpansionValue(cut_weight(g, members) / set_weight(g, members));
}

/// Checks that p is a partition of V(g) into nonempty parts; throws otherwise.
inline void require_partition(const WeightedGraph& g, const KPartition& p) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  for (const VertexSet& part : p) {
    if (part.empty()) throw std::invalid_argument("partition has an empty part");
    require_vertex_set(g, part);
    for (const Vertex v : part) {
      if (seen[static_cast<std::size_t>(v)]++ != 0) throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two parts");
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[static_cast<std::size_t>(v)] == 0) throw std::invalid_argument("vertex " + std::to_string(v) + " is in no part");
  }
}

/// Largest part expansion of a partition.
inline ExpansionValue partition_expansion(const WeightedGraph& g, const KPartition& p) {
  require_partition(g, p);
  ExpansionValue worst(0);
  for (const VertexSet& part : p) worst = std::max(worst, edge_expansion(g, part));
  return worst;
}

namespace detail {

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (l > INT64_MAX) throw std::overflow_error("weight denominators too large for exhaustive search");
  return static_cast<std::int64_t>(l);
}

inline std::int64_t checked_scale(const Rational& r, std::int64_t factor) {
  const __int128 v = static_cast<__int128>(r.num()) * (factor / r.den());
  if (v > INT64_MAX) throw std::overflow_error("weights too large for exhaustive search");
  return static_cast<std::int64_t>(v);
}

/// Edge and vertex weights multiplied by the lcm of their denominators, so the
/// exhaustive searches can run in integers. Expansion is cut/weight scaled by
/// vertex_scale / edge_scale.
struct IntegerWeights {
  std::int64_t edge_scale = 1;
  std::int64_t vertex_scale = 1;
  std::vector<std::vector<std::pair<Vertex, std::int64_t>>> adjacency;
  std::vector<std::int64_t> vertex;

  explicit IntegerWeights(const WeightedGraph& g) {
    for (const Edge& e : g.edges()) edge_scale = checked_lcm(edge_scale, e.weight.den());
    for (Vertex v = 0; v < g.order(); ++v) vertex_scale = checked_lcm(vertex_scale, g.vertex_weight(v).den());
    adjacency.resize(static_cast<std::size_t>(g.order()));
    vertex.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      vertex[static_cast<std::size_t>(v)] = checked_scale(g.vertex_weight(v), vertex_scale);
      for (const Neighbor& nb : g.neighbors(v)) {
        adjacency[static_cast<std::size_t>(v)].emplace_back(nb.vertex, checked_scale(nb.weight, edge_scale));
      }
    }
  }

  [[nodiscard]] Rational expansion(std::int64_t cut, std::int64_t weight) const {
    return Rational(cut, edge_scale) / Rational(weight, vertex_scale);
  }
};

// a/b < c/d for positive denominators
inline bool ratio_less(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}
inline bool ratio_equal(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d == static_cast<__int128>(c) * b;
}

}  // namespace detail

/// Exhaustive psi_k: minimum expansion over nonempty S with |S| <= min(k, n-1).
/// Ties go to the lexicographically smallest member list.
inline SseSolution sse_brute(const WeightedGraph& g, int k) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("sse_brute needs at least 2 vertices");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int limit = std::min(k, n - 1);
  const detail::IntegerWeights iw(g);

  bool found = false;
  std::int64_t best_cut = 0;
  std::int64_t best_weight = 1;
  VertexSet best;
  std::vector<char> in(static_cast<std::size_t>(n), 0);

  for (int size = 1; size <= limit; ++size) {
    VertexSet combo(static_cast<std::size_t>(size));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      std::int64_t cut = 0;
      std::int64_t weight = 0;
      for (const Vertex v : combo) in[static_cast<std::size_t>(v)] = 1;
      for (const Vertex v : combo) {
        weight += iw.vertex[static_cast<std::size_t>(v)];
        for (const auto& [u, w] : iw.adjacency[static_cast<std::size_t>(v)]) {
          if (!in[static_cast<std::size_t>(u)]) cut += w;
        }
      }
      for (const Vertex v : combo) in[static_cast<std::size_t>(v)] = 0;

      const bool better = !found || detail::ratio_less(cut, weight, best_cut, best_weight) ||
                          (detail::ratio_equal(cut, weight, best_cut, best_weight) && combo < best);
      if (better) {
        found = true;
        best_cut = cut;
        best_weight = weight;
        best = combo;
      }

      int i = size - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {ExpansionValue(iw.expansion(best_cut, best_weight)), best};
}

/// Exhaustive phi_k over all partitions into exactly k nonempty blocks.
/// Blocks are enumerated as restricted growth strings; the first optimum in
/// that order is returned, with blocks ordered by their smallest vertex.
inline KscSolution ksc_brute(const WeightedGraph& g, int k) {
  const int n = g.order();
  if (k < 2 || k > n) throw std::invalid_argument("ksc_brute needs 2 <= k <= n");
  if (n > 30) throw std::invalid_argument("ksc_brute is limited to 30 vertices");
  const detail::IntegerWeights iw(g);

  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::int64_t> cut(static_cast<std::size_t>(k), 0);
  std::vector<std::int64_t> weight(static_cast<std::size_t>(k), 0);
  std::vector<int> best_label;
  std::int64_t best_cut = 0;
  std::int64_t best_weight = 1;

  auto evaluate = [&] {
    std::size_t worst = 0;
    for (std::size_t j = 1; j < static_cast<std::size_t>(k); ++j) {
      if (detail::ratio_less(cut[worst], weight[worst], cut[j], weight[j])) worst = j;
    }
    if (best_label.empty() || detail::ratio_less(cut[worst], weight[worst], best_cut, best_weight)) {
      best_label = label;
      best_cut = cut[worst];
      best_weight = weight[worst];
    }
  };

  auto recurse = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      if (used == k) evaluate();
      return;
    }
    if (n - v < k - used) return;
    const int top = std::min(used + 1, k);
    for (int b = 0; b < top; ++b) {
      label[static_cast<std::size_t>(v)] = b;
      weight[static_cast<std::size_t>(b)] += iw.vertex[static_cast<std::size_t>(v)];
      for (const auto& [u, w] : iw.adjacency[static_cast<std::size_t>(v)]) {
        const int lu = label[static_cast<std::size_t>(u)];
        if (u < v && lu != b) {
          cut[static_cast<std::size_t>(b)] += w;
          cut[static_cast<std::size_t>(lu)] += w;
        }
      }
      self(self, v + 1, std::max(used, b + 1));
      for (const auto& [u, w] : iw.adjacency[static_cast<std::size_t>(v)]) {
        const int lu = label[static_cast<std::size_t>(u)];
        if (u < v && lu != b) {
          cut[static_cast<std::size_t>(b)] -= w;
          cut[static_cast<std::size_t>(lu)] -= w;
        }
      }
      weight[static_cast<std::size_t>(b)] -= iw.vertex[static_cast<std::size_t>(v)];
    }
    label[static_cast<std::size_t>(v)] = -1;
  };
  recurse(recurse, 0, 0);

  KPartition parts(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < n; ++v) parts[static_cast<std::size_t>(best_label[static_cast<std::size_t>(v)])].push_back(v);
  return {ExpansionValue(iw.expansion(best_cut, best_weight)), parts};
}

}  // namespace sparsecut
