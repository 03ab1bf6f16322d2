#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sparsecut/expansion.hpp"
#include "sparsecut/tree_decomposition.hpp"

namespace sparsecut {

/// Cut-weight table of one decomposition node: entry (C, s) holds the minimum
/// weight of edges leaving S inside G_i over S subset of V_i with |S| = s and
/// S restricted to the bag equal to C. C is a bitmask over the sorted bag.
///
/// Entries with s < |C| are infeasible and not stored; at() reports them as
/// infinite.
class SseTable {
 public:
  SseTable() = default;
  SseTable(VertexSet bag, int max_size) : bag_(std::move(bag)), max_size_(max_size) {
    const std::uint32_t masks = 1U << bag_.size();
    offsets_.resize(static_cast<std::size_t>(masks) + 1, 0);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      const int span = std::max(0, max_size_ - __builtin_popcount(mask) + 1);
      offsets_[mask + 1] = offsets_[mask] + static_cast<std::size_t>(span);
    }
    cut_.assign(offsets_.back(), ExpansionValue::infinity());
  }

  [[nodiscard]] const VertexSet& bag() const { return bag_; }
  [[nodiscard]] int max_size() const { return max_size_; }
  [[nodiscard]] std::uint32_t masks() const { return 1U << bag_.size(); }
  [[nodiscard]] std::size_t entries() const { return cut_.size(); }

  [[nodiscard]] bool stored(std::uint32_t mask, int s) const { return s >= __builtin_popcount(mask) && s <= max_size_; }
  /// Position of a stored entry in the flat layout.
  [[nodiscard]] std::size_t index(std::uint32_t mask, int s) const {
    return offsets_[mask] + static_cast<std::size_t>(s - __builtin_popcount(mask));
  }
  [[nodiscard]] const ExpansionValue& at(std::uint32_t mask, int s) const {
    static const ExpansionValue inf = ExpansionValue::infinity();
    return stored(mask, s) ? cut_[index(mask, s)] : inf;
  }
  void set(std::uint32_t mask, int s, const ExpansionValue& v) { cut_[index(mask, s)] = v; }

 private:
  VertexSet bag_;
  int max_size_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<ExpansionValue> cut_;
};

struct SseTreewidthStats {
  int width = -1;
  std::size_t nodes = 0;
  /// Choice records kept for witness recovery (forget and join nodes), the
  /// only per-node storage that outlives the bottom-up sweep.
  std::size_t retained_entries = 0;
  /// Largest number of value entries alive at once during the sweep.
  std::size_t peak_live_entries = 0;
};

struct SseTreewidthResult {
  SseSolution solution;
  SseTreewidthStats stats;
  /// Every node's table, only when requested (inspection and tests).
  std::vector<SseTable> tables;
};

namespace detail {

inline std::uint32_t remove_bit(std::uint32_t mask, int p) {
  const std::uint32_t low = mask & ((1U << p) - 1U);
  return low | ((mask >> (p + 1)) << p);
}
inline std::uint32_t insert_bit(std::uint32_t mask, int p, std::uint32_t bit) {
  const std::uint32_t low = mask & ((1U << p) - 1U);
  return low | (bit << p) | ((mask >> p) << (p + 1));
}
inline int position_in(const VertexSet& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

}  // namespace detail

/// psi_k(G) over a nice tree decomposition, with a witness set.
///
/// Recurrences on cut weights B = s * (expansion):
///   leaf       B[0, 0] = 0
///   introduce  v outside C: B_j[C, s] + w(v, C)
///              v inside C:  B_j[C - v, s - 1] + w(v, X_i - C)
///   forget     min(B_j[C, s], B_j[C + v, s])
///   join       min over s1 + s2 = s + |C| of B_l[C, s1] + B_r[C, s2] - w(C, X_i - C)
/// and the answer is min over 1 <= s <= min(k, n-1) of B_root[0, s] / s.
inline SseTreewidthResult sse_treewidth_dp(const WeightedGraph& g, int k, const NiceTreeDecomposition& nt, bool keep_tables = false) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("sse_treewidth_dp needs at least 2 vertices");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g.has_vertex_weights()) throw std::invalid_argument("sse_treewidth_dp requires unit vertex weights");
  if (auto v = validate(g, nt); !v) throw std::invalid_argument("not a nice tree decomposition of the graph: " + v.message());
  if (nt.width() + 1 > 24) throw std::invalid_argument("bags larger than 24 vertices are not supported");

  const int smax = std::min(k, n - 1);
  const std::size_t count = nt.nodes.size();
  const ExpansionValue inf = ExpansionValue::infinity();

  std::vector<std::optional<SseTable>> live(count);
  std::vector<std::vector<std::uint8_t>> forget_choice(count);
  std::vector<std::vector<std::int16_t>> join_split(count);
  // |V_i| per node; entries with s > |V_i| are infeasible and get no storage.
  std::vector<int> cap(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const NiceNode& nd = nt.nodes[i];
    const auto child = [&](int j) { return cap[static_cast<std::size_t>(nd.children[static_cast<std::size_t>(j)])]; };
    switch (nd.kind) {
      case NiceKind::Leaf: cap[i] = 0; break;
      case NiceKind::Introduce: cap[i] = child(0) + 1; break;
      case NiceKind::Forget: cap[i] = child(0); break;
      case NiceKind::Join: cap[i] = child(0) + child(1) - static_cast<int>(nd.bag.size()); break;
    }
  }
  SseTreewidthResult result;
  result.stats.width = nt.width();
  result.stats.nodes = count;
  std::size_t live_entries = 0;

  auto weights_to_bag = [&](Vertex v, const VertexSet& bag) {
    std::vector<Rational> w(bag.size());
    for (std::size_t i = 0; i < bag.size(); ++i) w[i] = (bag[i] == v) ? Rational(0) : g.weight(v, bag[i]);
    return w;
  };
  auto masked_sum = [](const std::vector<Rational>& w, std::uint32_t mask) {
    Rational total{0};
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U) {
      if (mask & 1U) total += w[i];
    }
    return total;
  };

  for (std::size_t i = 0; i < count; ++i) {
    const NiceNode& nd = nt.nodes[i];
    const std::uint32_t masks = 1U << nd.bag.size();
    SseTable table(nd.bag, std::min(smax, cap[i]));
    const int top = table.max_size();

    switch (nd.kind) {
      case NiceKind::Leaf:
        table.set(0, 0, ExpansionValue(0));
        break;

      case NiceKind::Introduce: {
        const SseTable& child = *live[static_cast<std::size_t>(nd.children[0])];
        const int p = detail::position_in(nd.bag, nd.vertex);
        const auto wv = weights_to_bag(nd.vertex, nd.bag);
        const std::uint32_t full = masks - 1U;
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
          const int c = __builtin_popcount(mask);
          const std::uint32_t cmask = detail::remove_bit(mask, p);
          const bool in = ((mask >> p) & 1U) != 0;
          const ExpansionValue add(masked_sum(wv, in ? full & ~mask : mask));
          for (int s = c; s <= top; ++s) table.set(mask, s, child.at(cmask, in ? s - 1 : s) + add);
        }
        break;
      }

      case NiceKind::Forget: {
        const SseTable& child = *live[static_cast<std::size_t>(nd.children[0])];
        const int p = detail::position_in(child.bag(), nd.vertex);
        auto& choice = forget_choice[i];
        choice.assign(table.entries(), 0);
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
          const std::uint32_t out_mask = detail::insert_bit(mask, p, 0);
          const std::uint32_t in_mask = detail::insert_bit(mask, p, 1);
          for (int s = __builtin_popcount(mask); s <= top; ++s) {
            const ExpansionValue& a = child.at(out_mask, s);
            const ExpansionValue& b = child.at(in_mask, s);
            if (b < a) {
              table.set(mask, s, b);
              choice[table.index(mask, s)] = 1;
            } else {
              table.set(mask, s, a);
            }
          }
        }
        result.stats.retained_entries += choice.size();
        break;
      }

      case NiceKind::Join: {
        const SseTable& left = *live[static_cast<std::size_t>(nd.children[0])];
#ifdef SPARSECUT_MUTATE_JOIN
        const SseTable& second = left;  // deliberately wrong: reuses one child
#else
        const SseTable& second = *live[static_cast<std::size_t>(nd.children[1])];
#endif
        std::vector<Rational> cross(masks, Rational(0));
        for (std::uint32_t mask = 1; mask < masks; ++mask) {
          const int low = __builtin_ctz(mask);
          const std::uint32_t rest = mask & (mask - 1U);
          const auto wv = weights_to_bag(nd.bag[static_cast<std::size_t>(low)], nd.bag);
          cross[mask] = cross[rest] - masked_sum(wv, rest) + masked_sum(wv, (masks - 1U) & ~mask);
        }
        auto& split = join_split[i];
        split.assign(table.entries(), -1);
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
          const int c = __builtin_popcount(mask);
          for (int s = c; s <= top; ++s) {
            ExpansionValue best = inf;
            int best_s1 = -1;
            for (int s1 = c; s1 <= s; ++s1) {
              const ExpansionValue cand = left.at(mask, s1) + second.at(mask, s + c - s1);
              if (cand.is_infinite()) continue;
              const ExpansionValue total = cand - cross[mask];
              if (total < best) {
                best = total;
                best_s1 = s1;
              }
            }
            table.set(mask, s, best);
            split[table.index(mask, s)] = static_cast<std::int16_t>(best_s1);
          }
        }
        result.stats.retained_entries += split.size();
        break;
      }
    }

    live_entries += table.entries();
    result.stats.peak_live_entries = std::max(result.stats.peak_live_entries, live_entries);
    if (!keep_tables) {
      for (const int c : nd.children) {
        if (c < 0) continue;
        auto& slot = live[static_cast<std::size_t>(c)];
        live_entries -= slot->entries();
        slot.reset();
      }
    }
    live[i] = std::move(table);
  }

  const SseTable& root = *live.back();
  ExpansionValue best = inf;
  int best_s = -1;
  for (int s = 1; s <= smax; ++s) {
    const ExpansionValue v = root.at(0, s) / Rational(s);
    if (v < best) {
      best = v;
      best_s = s;
    }
  }

  // Top-down walk over the choice records. Record positions follow the
  // compact layout, which depends only on the bag size and the node's cap.
  std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> layouts;
  auto record_index = [&](int node, std::uint32_t mask, int s) {
    const std::size_t bag_size = nt.nodes[static_cast<std::size_t>(node)].bag.size();
    const int top = std::min(smax, cap[static_cast<std::size_t>(node)]);
    auto& off = layouts[{bag_size, top}];
    if (off.empty()) {
      const std::uint32_t masks = 1U << bag_size;
      off.assign(static_cast<std::size_t>(masks) + 1, 0);
      for (std::uint32_t m = 0; m < masks; ++m) {
        off[m + 1] = off[m] + static_cast<std::size_t>(std::max(0, top - __builtin_popcount(m) + 1));
      }
    }
    return off[mask] + static_cast<std::size_t>(s - __builtin_popcount(mask));
  };

  VertexSet witness;
  struct Frame {
    int node;
    std::uint32_t mask;
    int s;
  };
  std::vector<Frame> stack{{nt.root(), 0, best_s}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const NiceNode& nd = nt.nodes[static_cast<std::size_t>(f.node)];
    switch (nd.kind) {
      case NiceKind::Leaf:
        break;
      case NiceKind::Introduce: {
        const int p = detail::position_in(nd.bag, nd.vertex);
        const bool in = ((f.mask >> p) & 1U) != 0;
        stack.push_back({nd.children[0], detail::remove_bit(f.mask, p), in ? f.s - 1 : f.s});
        break;
      }
      case NiceKind::Forget: {
        const VertexSet& child_bag = nt.nodes[static_cast<std::size_t>(nd.children[0])].bag;
        const std::uint32_t bit = forget_choice[static_cast<std::size_t>(f.node)][record_index(f.node, f.mask, f.s)];
        if (bit) witness.push_back(nd.vertex);
        stack.push_back({nd.children[0], detail::insert_bit(f.mask, detail::position_in(child_bag, nd.vertex), bit), f.s});
        break;
      }
      case NiceKind::Join: {
        const int s1 = join_split[static_cast<std::size_t>(f.node)][record_index(f.node, f.mask, f.s)];
        const int c = __builtin_popcount(f.mask);
        stack.push_back({nd.children[0], f.mask, s1});
        stack.push_back({nd.children[1], f.mask, f.s + c - s1});
        break;
      }
    }
  }
  std::sort(witness.begin(), witness.end());
  result.solution = {best, std::move(witness)};

  if (keep_tables) {
    result.tables.reserve(count);
    for (auto& t : live) result.tables.push_back(std::move(*t));
  }
  return result;
}

/// Convenience overload: heuristic decomposition made nice.
inline SseTreewidthResult sse_treewidth_dp(const WeightedGraph& g, int k) {
  return sse_treewidth_dp(g, k, make_nice(heuristic_decompose(g)));
}

}  // namespace sparsecut
