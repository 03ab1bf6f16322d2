#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparsecut/expansion.hpp"
#include "sparsecut/structure.hpp"

namespace sparsecut {

enum class Expected { Yes, No, Unknown };

inline const char* to_string(Expected e) {
  switch (e) {
    case Expected::Yes: return "yes";
    case Expected::No: return "no";
    case Expected::Unknown: return "unknown";
  }
  return "?";
}

inline Expected expected_from(bool yes) { return yes ? Expected::Yes : Expected::No; }

/// A generated decision instance: is phi_k (problem "ksc") or psi_k
/// (problem "sse") of `graph` at most `threshold`?
struct GeneratedInstance {
  std::string problem;
  WeightedGraph graph;
  int k = 0;
  Rational threshold;
  Expected expected = Expected::Unknown;
  /// Source instance and gadget constants, in insertion order.
  std::vector<std::pair<std::string, std::string>> provenance;

  void record(std::string key, std::string value) { provenance.emplace_back(std::move(key), std::move(value)); }
  [[nodiscard]] std::string lookup(const std::string& key) const {
    for (const auto& [k2, v] : provenance) {
      if (k2 == key) return v;
    }
    throw std::out_of_range("no provenance entry '" + key + "'");
  }
};

namespace detail {

template <class T>
std::string join_list(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

}  // namespace detail

/// key=value sidecar text.
inline std::string to_meta(const GeneratedInstance& g) {
  std::ostringstream out;
  out << "problem=" << g.problem << '\n';
  out << "k=" << g.k << '\n';
  out << "threshold=" << g.threshold.str() << '\n';
  out << "expected=" << to_string(g.expected) << '\n';
  out << "vertices=" << g.graph.order() << '\n';
  out << "edges=" << g.graph.size() << '\n';
  for (const auto& [k, v] : g.provenance) out << k << '=' << v << '\n';
  return out.str();
}

// ---- Brute-force answers for the source problems ----

/// Is there a subset of `weights` summing to exactly `target`?
inline bool subset_sum_exists(const std::vector<std::int64_t>& weights, std::int64_t target) {
  if (target < 0) return false;
  const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
  if (target > total) return false;
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (const std::int64_t w : weights) {
    for (std::int64_t s = target; s >= w; --s) {
      if (reach[static_cast<std::size_t>(s - w)]) reach[static_cast<std::size_t>(s)] = 1;
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

/// Can the items be packed into `bins` bins of the given capacity?
inline bool bin_packing_feasible(std::vector<std::int64_t> weights, int bins, std::int64_t capacity) {
  std::sort(weights.rbegin(), weights.rend());
  if (!weights.empty() && weights.front() > capacity) return false;
  std::vector<std::int64_t> load(static_cast<std::size_t>(bins), 0);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == weights.size()) return true;
    for (std::size_t b = 0; b < load.size(); ++b) {
      if (load[b] + weights[i] > capacity) continue;
      // bins with equal load are interchangeable
      bool repeat = false;
      for (std::size_t c = 0; c < b; ++c) repeat = repeat || load[c] == load[b];
      if (repeat) continue;
      load[b] += weights[i];
      if (self(self, i + 1)) return true;
      load[b] -= weights[i];
    }
    return false;
  };
  return place(place, 0);
}

/// Does g contain a clique on k vertices?
inline bool has_clique(const WeightedGraph& g, int k) {
  if (k <= 0) return true;
  std::vector<Vertex> chosen;
  auto extend = [&](auto&& self, Vertex from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (Vertex v = from; v < g.order(); ++v) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](Vertex u) { return g.adjacent(u, v); })) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(extend, 0);
}

/// Common degree when g is regular.
inline std::optional<int> regular_degree(const WeightedGraph& g) {
  if (g.order() == 0) return 0;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

// ---- Partition -> kSC with vertex cover 3 ----

struct PartitionInstance {
  std::vector<std::int64_t> weights;
  std::int64_t B = 0;
};

inline void require_partition_instance(const PartitionInstance& p) {
  if (p.weights.empty()) throw std::invalid_argument("partition instance needs at least one weight");
  for (const auto w : p.weights) {
    if (w <= 0) throw std::invalid_argument("partition weights must be positive");
  }
  if (p.B <= 0) throw std::invalid_argument("B must be positive");
  if (std::accumulate(p.weights.begin(), p.weights.end(), std::int64_t{0}) != 2 * p.B) {
    throw std::invalid_argument("partition weights must sum to 2B");
  }
}

/// Bipartite graph with X = {u1, u2, u3} (vertices 0..2) and Y holding
/// v_1..v_{n+1} (3..n+3), y_1..y_{k-3}, then the pendants u_l^t for t = 1..3,
/// l = 1..M-1. Weights: v_i u_t = w_i + N with w_{n+1} = B, y_j u_t = N/3, and
/// pendant edges L standing in for infinity.
/// N = 4B / (M - n - 1 - (k-3)/3). Default M = n + k + 2.
inline GeneratedInstance gen_partition_ksc(const PartitionInstance& inst, int k, std::optional<std::int64_t> M_opt = std::nullopt,
                                           std::optional<Rational> L_opt = std::nullopt) {
  require_partition_instance(inst);
  if (k < 3) throw std::invalid_argument("partition construction needs k >= 3");
  const auto n = static_cast<std::int64_t>(inst.weights.size());
  const std::int64_t M = M_opt.value_or(n + k + 2);
  const Rational denom = Rational(M - n - 1) - Rational(k - 3, 3);
  if (denom.sign() <= 0) throw std::invalid_argument("M must exceed n + 1 + (k-3)/3");
  if (M < 1) throw std::invalid_argument("M must be positive");
  const Rational N = Rational(4 * inst.B) / denom;

  const int ny = k - 3;
  const int first_v = 3;
  const int first_y = first_v + static_cast<int>(n) + 1;
  const int first_pendant = first_y + ny;
  const int order = first_pendant + 3 * static_cast<int>(M - 1);

  std::vector<Edge> edges;
  Rational finite{0};
  for (int i = 0; i <= n; ++i) {
    const Rational wi = (i < n) ? Rational(inst.weights[static_cast<std::size_t>(i)]) : Rational(inst.B);
    for (int t = 0; t < 3; ++t) {
      edges.push_back({first_v + i, t, wi + N});
      finite += wi + N;
    }
  }
  for (int j = 0; j < ny; ++j) {
    for (int t = 0; t < 3; ++t) {
      edges.push_back({first_y + j, t, N / Rational(3)});
      finite += N / Rational(3);
    }
  }
  const Rational L_min = N * Rational(order) + finite;
  const Rational L = L_opt.value_or(Rational(L_min.floor() + 1));
  if (L <= L_min) throw std::invalid_argument("L must exceed N*|V| + total finite edge weight = " + L_min.str());
  for (int t = 0; t < 3; ++t) {
    for (std::int64_t l = 0; l < M - 1; ++l) edges.push_back({t, first_pendant + t * static_cast<int>(M - 1) + static_cast<int>(l), L});
  }

  GeneratedInstance out;
  out.problem = "ksc";
  out.graph = WeightedGraph(order, edges);
  out.k = k;
  out.threshold = N;
  out.expected = expected_from(subset_sum_exists(inst.weights, inst.B));
  out.record("construction", "partition-ksc");
  out.record("source.weights", detail::join_list(inst.weights));
  out.record("source.B", std::to_string(inst.B));
  out.record("M", std::to_string(M));
  out.record("N", N.str());
  out.record("L", L.str());
  out.record("cover", "1,2,3");
  return out;
}

// ---- Max-degree-3 cycle gadget ----

struct MaxDeg3Gadget {
  WeightedGraph graph;
  int source_order = 0;  ///< n; phi_k(G) = n * phi_k(G')
  Rational M;
};

/// Vertex v_j^i of cycle C^i is i*n + j. Cycle edges weigh M; an edge v_i v_j
/// of G becomes v_j^i -- v_i^j with the same weight.
/// Default M = floor(1 + n^2 * w(E(G))).
inline MaxDeg3Gadget gen_maxdeg3(const WeightedGraph& g, std::optional<Rational> M_opt = std::nullopt) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("max-degree construction needs at least 3 vertices");
  if (g.has_vertex_weights()) throw std::invalid_argument("max-degree construction expects unit vertex weights");
  const Rational M = M_opt.value_or(Rational((Rational(static_cast<std::int64_t>(n) * n) * g.total_edge_weight()).floor() + 1));
  if (M.sign() <= 0) throw std::invalid_argument("M must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) edges.push_back({i * n + j, i * n + (j + 1) % n, M});
  }
  for (const Edge& e : g.edges()) edges.push_back({e.u * n + e.v, e.v * n + e.u, e.weight});
  return {WeightedGraph(n * n, edges), n, M};
}

/// Decision instance: phi_k(G') <= N / n.
inline GeneratedInstance maxdeg3_instance(const WeightedGraph& g, int k, const Rational& N, std::optional<Rational> M_opt = std::nullopt,
                                          Expected source_answer = Expected::Unknown) {
  MaxDeg3Gadget gadget = gen_maxdeg3(g, M_opt);
  GeneratedInstance out;
  out.problem = "ksc";
  out.graph = std::move(gadget.graph);
  out.k = k;
  out.threshold = N / Rational(gadget.source_order);
  out.expected = source_answer;
  out.record("construction", "maxdeg3");
  out.record("source.n", std::to_string(gadget.source_order));
  out.record("source.threshold", N.str());
  out.record("M", gadget.M.str());
  out.record("relation", "phi_k(G) = n * phi_k(G')");
  return out;
}

// ---- Degeneracy-2 subdivision gadget ----

struct Degen2Gadget {
  WeightedGraph graph;
  int source_order = 0;  ///< n of the original G
  Rational L;
  /// Edge t of G' (in canonical order) becomes a - c - d - b with
  /// c = |V(G')| + 2t and d = c + 1.
  int first_subdivision = 0;
};

/// Replaces every edge ab of G' by a path a - c - d - b with w(cd) = w(ab) and
/// w(ac) = w(db) = L. Default L is the cycle weight M of the gadget.
inline Degen2Gadget gen_degen2(const MaxDeg3Gadget& gp, std::optional<Rational> L_opt = std::nullopt) {
  const Rational L = L_opt.value_or(gp.M);
  if (L.sign() <= 0) throw std::invalid_argument("L must be positive");
  const int base = gp.graph.order();
  std::vector<Edge> edges;
  int next = base;
  for (const Edge& e : gp.graph.edges()) {
    const int c = next++;
    const int d = next++;
    edges.push_back({e.u, c, L});
    edges.push_back({c, d, e.weight});
    edges.push_back({d, e.v, L});
  }
  return {WeightedGraph(next, edges), gp.source_order, L, base};
}

/// Threshold map N -> N / (n + N).
inline Rational degen2_threshold(const Rational& N, int source_order) { return N / (Rational(source_order) + N); }

inline GeneratedInstance degen2_instance(const WeightedGraph& g, int k, const Rational& N, std::optional<Rational> M_opt = std::nullopt,
                                         std::optional<Rational> L_opt = std::nullopt, Expected source_answer = Expected::Unknown) {
  const MaxDeg3Gadget gp = gen_maxdeg3(g, M_opt);
  Degen2Gadget gadget = gen_degen2(gp, L_opt);
  GeneratedInstance out;
  out.problem = "ksc";
  out.graph = std::move(gadget.graph);
  out.k = k;
  out.threshold = degen2_threshold(N, gadget.source_order);
  out.expected = source_answer;
  out.record("construction", "degen2");
  out.record("source.n", std::to_string(gadget.source_order));
  out.record("source.threshold", N.str());
  out.record("M", gp.M.str());
  out.record("L", gadget.L.str());
  out.record("relation", "phi_k(G) <= N iff phi_k(G'') <= N/(n+N)");
  return out;
}

// ---- Unary bin packing -> vertex-weighted kSC ----

struct UbpInstance {
  std::vector<std::int64_t> weights;
  int bins = 0;
  std::int64_t capacity = 0;
};

/// K_{b, l+b} with unit edges: u_1..u_b are vertices 0..b-1 with weight M - eps,
/// item vertices v_1..v_l follow with weight w_i + C + 1 + B, then b dummy
/// vertices of weight 1 + B. Items are first padded with unit items up to
/// total b*C. eps = 1/(l+b), B = floor((W0 (b-2) + b eps) / 2) + 1,
/// M = (l+b)(C+1+B-eps)/(b-2), k = b, threshold X = (l+b)/M.
inline GeneratedInstance gen_ubp_ksc(const UbpInstance& inst) {
  const int b = inst.bins;
  if (b < 3) throw std::invalid_argument("bins must be >= 3 (the construction divides by b-2)");
  if (inst.capacity <= 0) throw std::invalid_argument("capacity must be positive");
  if (inst.weights.empty()) throw std::invalid_argument("bin packing instance needs at least one item");
  for (const auto w : inst.weights) {
    if (w <= 0) throw std::invalid_argument("item weights must be positive");
  }
  const std::int64_t W = std::accumulate(inst.weights.begin(), inst.weights.end(), std::int64_t{0});
  const std::int64_t C = inst.capacity;
  if (W > static_cast<std::int64_t>(b) * C) throw std::invalid_argument("total item weight exceeds bins * capacity, the instance is trivially no");

  std::vector<std::int64_t> items = inst.weights;
  items.resize(items.size() + static_cast<std::size_t>(static_cast<std::int64_t>(b) * C - W), 1);
  const auto l = static_cast<std::int64_t>(items.size());
  const std::int64_t W0 = *std::max_element(items.begin(), items.end());
  const Rational eps(1, l + b);
  const std::int64_t B = ((Rational(W0 * (b - 2)) + Rational(b) * eps) / Rational(2)).floor() + 1;
  const Rational M = Rational(l + b) * (Rational(C + 1 + B) - eps) / Rational(b - 2);
  const Rational X = Rational(l + b) / M;

  const int order = b + static_cast<int>(l) + b;
  std::vector<Rational> vw(static_cast<std::size_t>(order));
  std::vector<Edge> edges;
  for (int j = 0; j < b; ++j) vw[static_cast<std::size_t>(j)] = M - eps;
  for (std::int64_t i = 0; i < l; ++i) vw[static_cast<std::size_t>(b + i)] = Rational(items[static_cast<std::size_t>(i)] + C + 1 + B);
  for (int i = 0; i < b; ++i) vw[static_cast<std::size_t>(b + l + i)] = Rational(1 + B);
  for (int j = 0; j < b; ++j) {
    for (int v = b; v < order; ++v) edges.push_back({j, v, 1});
  }

  GeneratedInstance out;
  out.problem = "ksc";
  out.graph = WeightedGraph(order, edges, vw);
  out.k = b;
  out.threshold = X;
  out.expected = expected_from(bin_packing_feasible(inst.weights, b, C));
  out.record("construction", "ubp-ksc");
  out.record("source.weights", detail::join_list(inst.weights));
  out.record("source.bins", std::to_string(b));
  out.record("source.capacity", std::to_string(C));
  out.record("padded_items", std::to_string(l));
  out.record("epsilon", eps.str());
  out.record("B", std::to_string(B));
  out.record("M", M.str());
  out.record("X", X.str());
  return out;
}

// ---- Unitarization ----

/// Smallest chi that is a multiple of every vertex-weight denominator and makes
/// chi * w(u) >= max(1, |E|) for every vertex.
inline std::int64_t minimal_chi(const WeightedGraph& g) {
  std::int64_t step = 1;
  for (Vertex v = 0; v < g.order(); ++v) step = detail::checked_lcm(step, g.vertex_weight(v).den());
  std::int64_t chi = step;
  const Rational need(std::max(1, g.size()));
  for (Vertex v = 0; v < g.order(); ++v) {
    while (Rational(chi) * g.vertex_weight(v) < need) chi += step;
  }
  return chi;
}

/// Adds chi * w(u) - 1 pendant vertices (unit edges) to every vertex u. Pendants
/// are appended host by host. phi_k(G) = chi * phi_k(result).
inline WeightedGraph unitarize(const WeightedGraph& g, std::int64_t chi) {
  if (chi < 1) throw std::invalid_argument("chi must be a positive integer");
  if (!g.has_unit_edge_weights()) throw std::invalid_argument("unitarization expects unit edge weights");
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (Vertex u = 0; u < g.order(); ++u) {
    const Rational scaled = Rational(chi) * g.vertex_weight(u);
    if (!scaled.is_integer() || scaled < Rational(1)) {
      throw std::invalid_argument("chi * w(u) must be a positive integer, got " + scaled.str() + " at vertex " + std::to_string(u + 1));
    }
    if (scaled < Rational(g.size())) {
      throw std::invalid_argument("chi * w(u) must be at least |E| = " + std::to_string(g.size()) + ", got " + scaled.str() + " at vertex " + std::to_string(u + 1));
    }
    for (std::int64_t p = 1; p < scaled.num(); ++p) edges.push_back({u, next++, 1});
  }
  return WeightedGraph(next, edges);
}

// ---- k-clique on regular graphs -> kSSE ----

/// (G, k, d - k + 1): psi_k(G) <= d - k + 1 iff G has a k-clique.
/// Requires k <= n - 1, because psi_k never takes S = V.
inline GeneratedInstance gen_clique_sse(const WeightedGraph& g, int k) {
  const auto d = regular_degree(g);
  if (!d) throw std::invalid_argument("clique construction needs a regular graph");
  if (!g.has_unit_edge_weights() || g.has_vertex_weights()) throw std::invalid_argument("clique construction needs an unweighted graph");
  if (k < 2 || k > g.order() - 1) throw std::invalid_argument("clique construction needs 2 <= k <= n-1");
  GeneratedInstance out;
  out.problem = "sse";
  out.graph = g;
  out.k = k;
  out.threshold = Rational(*d - k + 1);
  out.expected = expected_from(has_clique(g, k));
  out.record("construction", "clique-sse");
  out.record("source.degree", std::to_string(*d));
  out.record("source.k", std::to_string(k));
  return out;
}

}  // namespace sparsecut
