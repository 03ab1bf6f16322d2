#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sparsecut/expansion.hpp"
#include "sparsecut/structure.hpp"

namespace sparsecut {

/// psi_k(G) given a vertex cover C, in O(2^|C| n log n).
///
/// Every candidate S splits as S = C' + T with C' inside the cover and T in the
/// independent rest I. For fixed C' and |T| = t the cut is
///   w(C', C - C') + w(C', I) + sum over T of (w(i, C - C') - w(i, C'))
/// so the best T takes the t smallest differences.
inline SseSolution sse_vertex_cover(const WeightedGraph& g, int k, std::span<const Vertex> cover_in) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("sse_vertex_cover needs at least 2 vertices");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g.has_vertex_weights()) throw std::invalid_argument("sse_vertex_cover requires unit vertex weights");
  const VertexSet cover = normalized(VertexSet(cover_in.begin(), cover_in.end()));
  require_vertex_set(g, cover);
  if (!is_vertex_cover(g, cover)) throw std::invalid_argument("given set is not a vertex cover");
  const auto tau = static_cast<int>(cover.size());
  if (tau > 30) throw std::invalid_argument("vertex cover larger than 30 vertices is not supported");

  const int smax = std::min(k, n - 1);
  std::vector<int> cover_pos(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < tau; ++j) cover_pos[static_cast<std::size_t>(cover[static_cast<std::size_t>(j)])] = j;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) {
    if (cover_pos[static_cast<std::size_t>(v)] < 0) rest.push_back(v);
  }
  const auto r = static_cast<int>(rest.size());

  SseSolution best{ExpansionValue::infinity(), {}};
  std::vector<Rational> diff(static_cast<std::size_t>(r));
  std::vector<int> order(static_cast<std::size_t>(r));
  std::vector<Rational> prefix(static_cast<std::size_t>(r) + 1);

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tau); ++mask) {
    const int c = __builtin_popcountll(mask);
    if (c > smax) continue;
    auto in_sub = [&](Vertex v) {
      const int p = cover_pos[static_cast<std::size_t>(v)];
      return p >= 0 && ((mask >> p) & 1U) != 0;
    };

    // w(C', C - C') + w(C', I): every edge leaving C'.
    Rational base{0};
    for (int j = 0; j < tau; ++j) {
      if (!((mask >> j) & 1U)) continue;
      for (const Neighbor& nb : g.neighbors(cover[static_cast<std::size_t>(j)])) {
        if (!in_sub(nb.vertex)) base += nb.weight;
      }
    }
    for (int i = 0; i < r; ++i) {
      Rational to_sub{0};
      Rational to_rest{0};
      for (const Neighbor& nb : g.neighbors(rest[static_cast<std::size_t>(i)])) {
        (in_sub(nb.vertex) ? to_sub : to_rest) += nb.weight;
      }
      diff[static_cast<std::size_t>(i)] = to_rest - to_sub;
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return diff[static_cast<std::size_t>(a)] < diff[static_cast<std::size_t>(b)]; });
    prefix[0] = Rational(0);
    for (int i = 0; i < r; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + diff[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];

    for (int s = std::max(c, 1); s <= smax && s - c <= r; ++s) {
      const ExpansionValue value((base + prefix[static_cast<std::size_t>(s - c)]) / Rational(s));
      if (value < best.value) {
        VertexSet w;
        for (int j = 0; j < tau; ++j) {
          if ((mask >> j) & 1U) w.push_back(cover[static_cast<std::size_t>(j)]);
        }
        for (int i = 0; i < s - c; ++i) w.push_back(rest[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
        best = {value, normalized(std::move(w))};
      }
    }
  }
  return best;
}

/// Same, with a minimum vertex cover found by branching.
inline SseSolution sse_vertex_cover(const WeightedGraph& g, int k) {
  const VertexSet cover = minimum_vertex_cover(g);
  return sse_vertex_cover(g, k, cover);
}

}  // namespace sparsecut
