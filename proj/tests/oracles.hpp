#pragma once

// Test-only reference implementations. They share nothing with the solvers
// beyond the graph type, so they can check the library brute forces too.

#include <cstdint>
#include <vector>

#include "sparsecut/sparsecut.hpp"

namespace sparsecut::testing {

/// Expansion of the vertex set given as a bitmask, straight from the edge list.
inline ExpansionValue mask_expansion(const WeightedGraph& g, std::uint32_t mask) {
  if (mask == 0) return ExpansionValue::infinity();
  Rational cut{0};
  for (const Edge& e : g.edges()) {
    if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) cut += e.weight;
  }
  Rational size{0};
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((mask >> v) & 1U) size += g.vertex_weight(v);
  }
  return ExpansionValue(cut / size);
}

/// psi_k by scanning all 2^n masks.
inline ExpansionValue naive_sse(const WeightedGraph& g, int k) {
  const int n = g.order();
  const int limit = std::min(k, n - 1);
  ExpansionValue best = ExpansionValue::infinity();
  for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
    if (__builtin_popcount(mask) > limit) continue;
    best = std::min(best, mask_expansion(g, mask));
  }
  return best;
}

/// phi_k by scanning all k^n labelings.
inline ExpansionValue naive_ksc(const WeightedGraph& g, int k) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  ExpansionValue best = ExpansionValue::infinity();
  while (true) {
    std::vector<std::uint32_t> parts(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) parts[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] |= 1U << v;
    bool all_nonempty = true;
    ExpansionValue worst(0);
    for (const std::uint32_t p : parts) {
      if (p == 0) {
        all_nonempty = false;
        break;
      }
      worst = std::max(worst, mask_expansion(g, p));
    }
    if (all_nonempty) best = std::min(best, worst);
    int i = 0;
    while (i < n && ++label[static_cast<std::size_t>(i)] == k) label[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return best;
}

/// Total vertex weight.
inline Rational total_vertex_weight(const WeightedGraph& g) {
  Rational w{0};
  for (Vertex v = 0; v < g.order(); ++v) w += g.vertex_weight(v);
  return w;
}

/// Decides phi_k(g) <= threshold on the quotient by edges heavier than
/// threshold * w(V). Such edges can never be cut by a part of expansion at most
/// the threshold, so the decision is exact while the quotient stays small.
inline bool ksc_yes_via_quotient(const WeightedGraph& g, int k, const Rational& threshold) {
  if (threshold.sign() < 0) return false;
  const Quotient q = quotient_by_heavy_edges(g, threshold * total_vertex_weight(g) + Rational(1));
  if (q.graph.order() < k) return false;
  return ksc_brute(q.graph, k).value <= ExpansionValue(threshold);
}

/// Same graph with every edge weight replaced by 1.
inline WeightedGraph unit_skeleton(const WeightedGraph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 1});
  return WeightedGraph(g.order(), edges);
}

}  // namespace sparsecut::testing
