#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparsecut/rational.hpp"

namespace sparsecut {

using Vertex = int;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// k nonempty, pairwise disjoint vertex sets covering the vertex set.
using KPartition = std::vector<VertexSet>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Rational weight{1};

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  Rational weight{1};
};

/// Undirected graph on vertices 0..n-1 with exact nonnegative edge weights and
/// optional positive vertex weights. Immutable after construction.
///
/// Construction canonicalizes: parallel edges are merged by summing their
/// weights, zero-weight edges are dropped, and the edge list is sorted by
/// (u, v) with u < v.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  explicit WeightedGraph(int n, std::span<const Edge> edges = {},
                         std::optional<std::vector<Rational>> vertex_weights = std::nullopt)
      : n_(n), adjacency_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::map<std::pair<Vertex, Vertex>, Rational> merged;
    for (const Edge& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
        throw std::out_of_range("edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
      }
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.weight.sign() < 0) throw std::invalid_argument("negative edge weight " + e.weight.str());
      merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.weight;
    }
    for (const auto& [key, w] : merged) {
      if (w.is_zero()) continue;
      edges_.push_back({key.first, key.second, w});
      adjacency_[static_cast<std::size_t>(key.first)].push_back({key.second, w});
      adjacency_[static_cast<std::size_t>(key.second)].push_back({key.first, w});
      total_edge_weight_ += w;
      if (w != Rational(1)) unit_edges_ = false;
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
    if (vertex_weights) {
      if (static_cast<int>(vertex_weights->size()) != n) throw std::invalid_argument("vertex weight list length differs from n");
      for (const Rational& w : *vertex_weights) {
        if (w.sign() <= 0) throw std::invalid_argument("vertex weights must be positive, got " + w.str());
      }
      vertex_weights_ = std::move(vertex_weights);
    }
  }

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<Neighbor>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// Weight of edge uv, zero when absent.
  [[nodiscard]] Rational weight(Vertex u, Vertex v) const {
    const auto& list = neighbors(u);
    const auto it = std::lower_bound(list.begin(), list.end(), v, [](const Neighbor& a, Vertex x) { return a.vertex < x; });
    return (it != list.end() && it->vertex == v) ? it->weight : Rational(0);
  }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return !weight(u, v).is_zero(); }

  [[nodiscard]] bool has_vertex_weights() const { return vertex_weights_.has_value(); }
  [[nodiscard]] Rational vertex_weight(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return vertex_weights_ ? (*vertex_weights_)[static_cast<std::size_t>(v)] : Rational(1);
  }
  [[nodiscard]] const std::optional<std::vector<Rational>>& vertex_weights() const { return vertex_weights_; }

  [[nodiscard]] bool has_unit_edge_weights() const { return unit_edges_; }
  [[nodiscard]] const Rational& total_edge_weight() const { return total_edge_weight_; }

  /// Same graph with every edge weight multiplied by factor (> 0).
  [[nodiscard]] WeightedGraph scaled(const Rational& factor) const {
    if (factor.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<Edge> e = edges_;
    for (Edge& x : e) x.weight *= factor;
    return WeightedGraph(n_, e, vertex_weights_);
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::optional<std::vector<Rational>> vertex_weights_;
  Rational total_edge_weight_{0};
  bool unit_edges_ = true;
};

inline bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  return a.order() == b.order() && a.edges() == b.edges() && a.vertex_weights() == b.vertex_weights();
}

/// Throws std::out_of_range unless every member of s is a vertex of g.
inline void require_vertex_set(const WeightedGraph& g, std::span<const Vertex> s) {
  for (const Vertex v : s) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex index out of range: " + std::to_string(v));
  }
}

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// Membership bitmap of s over the vertices of g.
inline std::vector<char> membership(const WeightedGraph& g, std::span<const Vertex> s) {
  require_vertex_set(g, s);
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (const Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

// ---- Standard families used by tests, the CLI and the benchmarks ----

namespace families {

inline WeightedGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  return WeightedGraph(n, e);
}

inline WeightedGraph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
  return WeightedGraph(n, e);
}

inline WeightedGraph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1});
  return WeightedGraph(n, e);
}

/// Star with centre 0 and `leaves` leaves.
inline WeightedGraph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
  return WeightedGraph(leaves + 1, e);
}

/// rows x cols grid, vertex r*cols+c.
inline WeightedGraph grid(int rows, int cols) {
  std::vector<Edge> e;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) e.push_back({v, v + 1, 1});
      if (r + 1 < rows) e.push_back({v, v + cols, 1});
    }
  }
  return WeightedGraph(rows * cols, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline WeightedGraph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5, 1});
    e.push_back({5 + i, 5 + (i + 2) % 5, 1});
    e.push_back({i, i + 5, 1});
  }
  return WeightedGraph(10, e);
}

}  // namespace families

}  // namespace sparsecut
