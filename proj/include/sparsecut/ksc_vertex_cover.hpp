#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sparsecut/expansion.hpp"
#include "sparsecut/structure.hpp"

namespace sparsecut {

/// Items go into k bins. Item i placed in bin j adds weight[i][j] (possibly
/// negative) to that bin. Bin j starts with base[j] weight and base_count[j]
/// members. A placement costs max_j (base[j] + sum_j) / (base_count[j] + a_j)
/// and is feasible when every bin ends with at least one member.
struct AssignmentProblem {
  std::vector<std::vector<std::int64_t>> weight;
  std::vector<std::int64_t> base;
  std::vector<int> base_count;
};

struct AssignmentResult {
  ExpansionValue value = ExpansionValue::infinity();
  std::vector<int> bin_of;  ///< bin per item; empty when infeasible
  std::size_t states = 0;   ///< Pareto states kept over all layers
};

/// Exact minimum over all placements. Per count vector only the componentwise
/// minimal sum vectors are kept; the cost is increasing in every sum, so a
/// dominated vector can never beat the one dominating it.
inline AssignmentResult solve_assignment(const AssignmentProblem& p) {
  const std::size_t k = p.base.size();
  if (p.base_count.size() != k) throw std::invalid_argument("assignment problem: base vectors differ in length");
  for (const auto& row : p.weight) {
    if (row.size() != k) throw std::invalid_argument("assignment problem: item weight row has the wrong length");
  }

  struct State {
    std::vector<int> counts;
    std::vector<std::int64_t> sums;
    int parent;
    int bin;
  };
  auto dominates = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] > b[j]) return false;
    }
    return true;
  };

  std::vector<std::vector<State>> layers(1);
  layers[0].push_back({std::vector<int>(k, 0), std::vector<std::int64_t>(k, 0), -1, -1});
  AssignmentResult result;
  result.states = 1;

  for (const auto& row : p.weight) {
    const std::vector<State>& prev = layers.back();
    std::map<std::vector<int>, std::vector<State>> groups;
    for (std::size_t s = 0; s < prev.size(); ++s) {
      for (std::size_t j = 0; j < k; ++j) {
        State next{prev[s].counts, prev[s].sums, static_cast<int>(s), static_cast<int>(j)};
        next.counts[j] += 1;
        next.sums[j] += row[j];
        auto& group = groups[next.counts];
        if (std::any_of(group.begin(), group.end(), [&](const State& o) { return dominates(o.sums, next.sums); })) continue;
        std::erase_if(group, [&](const State& o) { return dominates(next.sums, o.sums); });
        group.push_back(std::move(next));
      }
    }
    std::vector<State> layer;
    for (auto& [counts, group] : groups) {
      for (State& s : group) layer.push_back(std::move(s));
    }
    result.states += layer.size();
    layers.push_back(std::move(layer));
  }

  int best = -1;
  for (std::size_t s = 0; s < layers.back().size(); ++s) {
    const State& st = layers.back()[s];
    ExpansionValue worst(0);
    bool feasible = true;
    for (std::size_t j = 0; j < k && feasible; ++j) {
      const std::int64_t members = p.base_count[j] + st.counts[j];
      if (members == 0) {
        feasible = false;
        break;
      }
      worst = std::max(worst, ExpansionValue(Rational(p.base[j] + st.sums[j], members)));
    }
    if (feasible && worst < result.value) {
      result.value = worst;
      best = static_cast<int>(s);
    }
  }
  if (best < 0) return result;

  result.bin_of.assign(p.weight.size(), -1);
  for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
    const State& st = layers[layer][static_cast<std::size_t>(best)];
    result.bin_of[layer - 1] = st.bin;
    best = st.parent;
  }
  return result;
}

struct KscVertexCoverStats {
  std::size_t cover_partitions = 0;
  std::size_t pareto_states = 0;
};

struct KscVertexCoverResult {
  KscSolution solution;
  KscVertexCoverStats stats;
};

/// phi_k(G) for unit-weight G given a vertex cover C.
///
/// For every split of C into k labelled parts C_1..C_k (some possibly empty,
/// enumerated up to relabelling of empty parts), the independent vertices are
/// items with bin-dependent weight |E(i, C)| - 2 |E(i, C_j)|: a part
/// C_j + T_j then has boundary W_j + sum over T_j, with W_j = |E(C_j, V - C_j)|.
inline KscVertexCoverResult ksc_vertex_cover(const WeightedGraph& g, int k, std::span<const Vertex> cover_in, unsigned threads = 1) {
  const int n = g.order();
  if (k < 2 || k > n) throw std::invalid_argument("ksc_vertex_cover needs 2 <= k <= n");
  if (!g.has_unit_edge_weights() || g.has_vertex_weights()) throw std::invalid_argument("ksc_vertex_cover requires unit edge weights and no vertex weights");
  const VertexSet cover = normalized(VertexSet(cover_in.begin(), cover_in.end()));
  require_vertex_set(g, cover);
  if (!is_vertex_cover(g, cover)) throw std::invalid_argument("given set is not a vertex cover");

  const auto tau = static_cast<int>(cover.size());
  const auto kk = static_cast<std::size_t>(k);
  std::vector<int> cover_pos(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < tau; ++j) cover_pos[static_cast<std::size_t>(cover[static_cast<std::size_t>(j)])] = j;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) {
    if (cover_pos[static_cast<std::size_t>(v)] < 0) rest.push_back(v);
  }

  // All restricted growth strings of length tau with at most k labels.
  std::vector<std::vector<int>> labelings;
  {
    std::vector<int> label(static_cast<std::size_t>(tau), 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
      if (i == tau) {
        labelings.push_back(label);
        return;
      }
      for (int b = 0; b < std::min(used + 1, k); ++b) {
        label[static_cast<std::size_t>(i)] = b;
        self(self, i + 1, std::max(used, b + 1));
      }
    };
    rec(rec, 0, 0);
  }

  auto evaluate = [&](const std::vector<int>& label) {
    auto part_of = [&](Vertex v) {
      const int p = cover_pos[static_cast<std::size_t>(v)];
      return p < 0 ? -1 : label[static_cast<std::size_t>(p)];
    };
    AssignmentProblem prob;
    prob.base.assign(kk, 0);
    prob.base_count.assign(kk, 0);
    for (int j = 0; j < tau; ++j) {
      const int b = label[static_cast<std::size_t>(j)];
      prob.base_count[static_cast<std::size_t>(b)] += 1;
      for (const Neighbor& nb : g.neighbors(cover[static_cast<std::size_t>(j)])) {
        if (part_of(nb.vertex) != b) prob.base[static_cast<std::size_t>(b)] += 1;
      }
    }
    for (const Vertex i : rest) {
      std::vector<std::int64_t> into(kk, 0);
      const auto deg = static_cast<std::int64_t>(g.degree(i));  // all neighbours lie in C
      for (const Neighbor& nb : g.neighbors(i)) into[static_cast<std::size_t>(part_of(nb.vertex))] += 1;
      std::vector<std::int64_t> row(kk);
      for (std::size_t j = 0; j < kk; ++j) row[j] = deg - 2 * into[j];
      prob.weight.push_back(std::move(row));
    }
    return solve_assignment(prob);
  };

  struct Best {
    ExpansionValue value = ExpansionValue::infinity();
    std::size_t labeling = 0;
    std::vector<int> bin_of;
    std::size_t states = 0;
  };
  auto run = [&](std::size_t begin, std::size_t end, Best& out) {
    for (std::size_t t = begin; t < end; ++t) {
      AssignmentResult r = evaluate(labelings[t]);
      out.states += r.states;
      if (r.value < out.value) {
        out.value = r.value;
        out.labeling = t;
        out.bin_of = std::move(r.bin_of);
      }
    }
  };

  const std::size_t total = labelings.size();
  threads = std::max(1U, static_cast<unsigned>(std::min<std::size_t>(threads, total)));
  std::vector<Best> parts(threads);
  if (threads == 1) {
    run(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t b = std::min(total, chunk * w);
      pool.emplace_back(run, b, std::min(total, b + chunk), std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
  }

  KscVertexCoverResult result;
  result.stats.cover_partitions = total;
  const Best* best = nullptr;
  for (const Best& b : parts) {
    result.stats.pareto_states += b.states;
    if (b.value.is_finite() && (best == nullptr || b.value < best->value)) best = &b;
  }
  if (best == nullptr) throw std::logic_error("no k-partition found");

  KPartition partition(kk);
  const std::vector<int>& label = labelings[best->labeling];
  for (int j = 0; j < tau; ++j) partition[static_cast<std::size_t>(label[static_cast<std::size_t>(j)])].push_back(cover[static_cast<std::size_t>(j)]);
  for (std::size_t i = 0; i < rest.size(); ++i) partition[static_cast<std::size_t>(best->bin_of[i])].push_back(rest[i]);
  for (VertexSet& part : partition) part = normalized(std::move(part));
  std::sort(partition.begin(), partition.end());
  result.solution = {best->value, std::move(partition)};
  return result;
}

inline KscVertexCoverResult ksc_vertex_cover(const WeightedGraph& g, int k) {
  const VertexSet cover = minimum_vertex_cover(g);
  return ksc_vertex_cover(g, k, cover);
}

}  // namespace sparsecut
