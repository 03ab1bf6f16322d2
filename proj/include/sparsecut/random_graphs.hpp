#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut {

/// Erdos-Renyi style graph: each pair is an edge with probability p. Weighted
/// graphs draw num/den with num in 1..10 and den in 1..4; otherwise weights are 1.
template <class Rng>
WeightedGraph random_graph(Rng& rng, int n, double p, bool weighted) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<std::int64_t> num(1, 10);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      edges.push_back({u, v, weighted ? Rational(num(rng), den(rng)) : Rational(1)});
    }
  }
  return WeightedGraph(n, edges);
}

/// random_graph with n uniform in [nmin, nmax] and p uniform in [0.2, 0.8].
template <class Rng>
WeightedGraph random_small_graph(Rng& rng, int nmin, int nmax, bool weighted) {
  std::uniform_int_distribution<int> order(nmin, nmax);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  const int n = order(rng);
  const double p = density(rng);
  return random_graph(rng, n, p, weighted);
}

}  // namespace sparsecut
