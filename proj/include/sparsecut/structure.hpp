#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut {

inline int max_degree(const WeightedGraph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

struct Degeneracy {
  int degeneracy = 0;
  /// Peeling order: every vertex has at most `degeneracy` neighbours after it.
  std::vector<Vertex> order;
};

/// Repeatedly removes a vertex of minimum remaining degree (smallest index on ties).
inline Degeneracy degeneracy(const WeightedGraph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(deg[static_cast<std::size_t>(v)], v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  Degeneracy result;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    result.degeneracy = std::max(result.degeneracy, d);
    result.order.push_back(v);
    removed[static_cast<std::size_t>(v)] = 1;
    for (const Neighbor& nb : g.neighbors(v)) {
      const auto u = static_cast<std::size_t>(nb.vertex);
      if (removed[u]) continue;
      queue.erase({deg[u], nb.vertex});
      queue.emplace(--deg[u], nb.vertex);
    }
  }
  return result;
}

inline bool is_vertex_cover(const WeightedGraph& g, std::span<const Vertex> cover) {
  const auto in = membership(g, cover);
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return in[static_cast<std::size_t>(e.u)] || in[static_cast<std::size_t>(e.v)];
  });
}

/// A vertex cover with at most `budget` vertices, or nullopt if none exists.
/// Bounded search tree: take the first uncovered edge and branch on its endpoints.
inline std::optional<VertexSet> vertex_cover_exact(const WeightedGraph& g, int budget) {
  if (budget < 0) throw std::invalid_argument("negative vertex cover budget");
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);

  auto search = [&](auto&& self, int remaining) -> bool {
    const auto uncovered = std::find_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return !in[static_cast<std::size_t>(e.u)] && !in[static_cast<std::size_t>(e.v)];
    });
    if (uncovered == g.edges().end()) return true;
    if (remaining == 0) return false;
    for (const Vertex pick : {uncovered->u, uncovered->v}) {
      in[static_cast<std::size_t>(pick)] = 1;
      if (self(self, remaining - 1)) return true;
      in[static_cast<std::size_t>(pick)] = 0;
    }
    return false;
  };

  if (!search(search, budget)) return std::nullopt;
  VertexSet cover;
  for (Vertex v = 0; v < g.order(); ++v)
    if (in[static_cast<std::size_t>(v)]) cover.push_back(v);
  return cover;
}

/// Smallest vertex cover, found by raising the budget from zero.
inline VertexSet minimum_vertex_cover(const WeightedGraph& g) {
  for (int budget = 0;; ++budget) {
    if (auto c = vertex_cover_exact(g, budget)) return *c;
  }
}

/// Connected components of the subgraph induced by `active` (all vertices when empty).
inline std::vector<VertexSet> connected_components(const WeightedGraph& g, std::span<const char> active = {}) {
  const auto n = static_cast<std::size_t>(g.order());
  auto on = [&](std::size_t v) { return active.empty() || active[v] != 0; };
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || !on(s)) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        const auto u = static_cast<std::size_t>(nb.vertex);
        if (!seen[u] && on(u)) {
          seen[u] = 1;
          stack.push_back(nb.vertex);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Graph obtained by contracting every edge of weight >= threshold.
struct Quotient {
  WeightedGraph graph;            ///< vertex-weighted: a block weighs the sum of its members
  std::vector<VertexSet> blocks;  ///< members of each quotient vertex, ordered by smallest member
  std::vector<int> block_of;
};

/// Contracts heavy edges. If threshold > N * w(V), no partition whose parts all
/// have expansion <= N can cut a heavy edge, so k-partition decisions at N are
/// the same on the graph and on its quotient.
inline Quotient quotient_by_heavy_edges(const WeightedGraph& g, const Rational& threshold) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (e.weight >= threshold) {
      const auto a = find(static_cast<std::size_t>(e.u));
      const auto b = find(static_cast<std::size_t>(e.v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  Quotient q;
  q.block_of.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const auto r = find(v);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(q.blocks.size());
      q.blocks.emplace_back();
    }
    q.block_of[v] = id_of_root[r];
    q.blocks[static_cast<std::size_t>(id_of_root[r])].push_back(static_cast<Vertex>(v));
  }
  std::vector<Rational> weights(q.blocks.size(), Rational(0));
  for (std::size_t v = 0; v < n; ++v) weights[static_cast<std::size_t>(q.block_of[v])] += g.vertex_weight(static_cast<Vertex>(v));
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = q.block_of[static_cast<std::size_t>(e.u)];
    const int b = q.block_of[static_cast<std::size_t>(e.v)];
    if (a != b) edges.push_back({a, b, e.weight});
  }
  q.graph = WeightedGraph(static_cast<int>(q.blocks.size()), edges, weights);
  return q;
}

}  // namespace sparsecut
