#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sparsecut/expansion.hpp"
#include "sparsecut/tree_decomposition.hpp"

namespace sparsecut {

/// One realizable state of G_i: part labels of the bag vertices (0-based),
/// part sizes nu and exact boundary counts mu inside G_i.
struct KscEntry {
  std::vector<std::uint8_t> c;
  std::vector<int> nu;
  std::vector<int> mu;

  friend bool operator==(const KscEntry&, const KscEntry&) = default;
};

struct KscEntrySet {
  VertexSet bag;
  std::vector<KscEntry> entries;
  /// Child entry indices the entry was built from (second is -1 unless join).
  std::vector<std::pair<int, int>> back;
};

struct KscTreewidthStats {
  int width = -1;
  std::size_t total_entries = 0;
  std::size_t max_node_entries = 0;
  /// Every node's entry count was within k^|bag| (n+1)^k (m+1)^k.
  bool within_bound = true;
};

struct KscTreewidthResult {
  KscSolution solution;
  KscTreewidthStats stats;
  std::vector<KscEntrySet> tables;
};

/// k^bag * (n+1)^k * (m+1)^k, saturated at the largest uint64.
inline std::uint64_t ksc_entry_bound(int bag_size, int n, int m, int k) {
  constexpr auto cap = static_cast<unsigned __int128>(std::numeric_limits<std::uint64_t>::max());
  unsigned __int128 v = 1;
  auto mul = [&](std::uint64_t f, int times) {
    for (int i = 0; i < times && v <= cap; ++i) v *= f;
  };
  mul(static_cast<std::uint64_t>(k), bag_size);
  mul(static_cast<std::uint64_t>(n) + 1, k);
  mul(static_cast<std::uint64_t>(m) + 1, k);
  return v > cap ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(v);
}

namespace detail {

inline std::string entry_key(const KscEntry& e) {
  std::string key(e.c.size() + 4 * (e.nu.size() + e.mu.size()), '\0');
  std::memcpy(key.data(), e.c.data(), e.c.size());
  std::memcpy(key.data() + e.c.size(), e.nu.data(), 4 * e.nu.size());
  std::memcpy(key.data() + e.c.size() + 4 * e.nu.size(), e.mu.data(), 4 * e.mu.size());
  return key;
}

/// Appends e unless an identical entry is already present.
class EntryBuilder {
 public:
  explicit EntryBuilder(KscEntrySet& set) : set_(set) {}
  void add(KscEntry e, int a, int b) {
    auto [it, fresh] = index_.try_emplace(entry_key(e), static_cast<int>(set_.entries.size()));
    if (!fresh) return;
    set_.entries.push_back(std::move(e));
    set_.back.emplace_back(a, b);
  }

 private:
  KscEntrySet& set_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace detail

/// phi_k(G) for unit-weight G over a nice tree decomposition.
///
/// Forward transitions on entry sets:
///   leaf       one entry with zero vectors
///   introduce  v into part j0: nu[j0] += 1, mu[j0] += edges from v to bag
///              vertices outside j0, mu[j] += edges from v into part j
///   forget     drop v from c
///   join       equal c: nu = nu1 + nu2 - |c^-1(j)|,
///              mu = mu1 + mu2 - |E(c^-1(j), X - c^-1(j))|
/// The root value is the min over entries with all parts nonempty of max mu/nu.
inline KscTreewidthResult ksc_treewidth_dp(const WeightedGraph& g, int k, const NiceTreeDecomposition& nt) {
  const int n = g.order();
  if (k < 2 || k > n) throw std::invalid_argument("ksc_treewidth_dp needs 2 <= k <= n");
  if (k > 255) throw std::invalid_argument("k larger than 255 is not supported");
  if (!g.has_unit_edge_weights() || g.has_vertex_weights()) throw std::invalid_argument("ksc_treewidth_dp requires unit edge weights and no vertex weights");
  if (auto v = validate(g, nt); !v) throw std::invalid_argument("not a nice tree decomposition of the graph: " + v.message());

  const auto kk = static_cast<std::size_t>(k);
  KscTreewidthResult result;
  result.stats.width = nt.width();
  result.tables.resize(nt.nodes.size());

  for (std::size_t i = 0; i < nt.nodes.size(); ++i) {
    const NiceNode& nd = nt.nodes[i];
    KscEntrySet& out = result.tables[i];
    out.bag = nd.bag;
    detail::EntryBuilder builder(out);

    switch (nd.kind) {
      case NiceKind::Leaf:
        builder.add({{}, std::vector<int>(kk, 0), std::vector<int>(kk, 0)}, -1, -1);
        break;

      case NiceKind::Introduce: {
        const KscEntrySet& child = result.tables[static_cast<std::size_t>(nd.children[0])];
        const auto p = static_cast<std::size_t>(std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.vertex) - nd.bag.begin());
        std::vector<char> adj(child.bag.size());
        for (std::size_t t = 0; t < child.bag.size(); ++t) adj[t] = g.adjacent(nd.vertex, child.bag[t]) ? 1 : 0;
        for (std::size_t e = 0; e < child.entries.size(); ++e) {
          const KscEntry& src = child.entries[e];
          std::vector<int> into(kk, 0);  // neighbours of v in each part
          int bag_neighbours = 0;
          for (std::size_t t = 0; t < src.c.size(); ++t) {
            if (adj[t]) {
              ++into[src.c[t]];
              ++bag_neighbours;
            }
          }
          for (std::size_t j0 = 0; j0 < kk; ++j0) {
            KscEntry next = src;
            next.c.insert(next.c.begin() + static_cast<std::ptrdiff_t>(p), static_cast<std::uint8_t>(j0));
            next.nu[j0] += 1;
            for (std::size_t j = 0; j < kk; ++j) next.mu[j] += (j == j0) ? bag_neighbours - into[j0] : into[j];
            builder.add(std::move(next), static_cast<int>(e), -1);
          }
        }
        break;
      }

      case NiceKind::Forget: {
        const KscEntrySet& child = result.tables[static_cast<std::size_t>(nd.children[0])];
        const auto p = static_cast<std::size_t>(std::lower_bound(child.bag.begin(), child.bag.end(), nd.vertex) - child.bag.begin());
        for (std::size_t e = 0; e < child.entries.size(); ++e) {
          KscEntry next = child.entries[e];
          next.c.erase(next.c.begin() + static_cast<std::ptrdiff_t>(p));
          builder.add(std::move(next), static_cast<int>(e), -1);
        }
        break;
      }

      case NiceKind::Join: {
        const KscEntrySet& left = result.tables[static_cast<std::size_t>(nd.children[0])];
        const KscEntrySet& right = result.tables[static_cast<std::size_t>(nd.children[1])];
        std::unordered_map<std::string, std::vector<int>> by_config;
        for (std::size_t e = 0; e < right.entries.size(); ++e) {
          const auto& c = right.entries[e].c;
          by_config[std::string(c.begin(), c.end())].push_back(static_cast<int>(e));
        }
        for (std::size_t a = 0; a < left.entries.size(); ++a) {
          const KscEntry& l = left.entries[a];
          const auto it = by_config.find(std::string(l.c.begin(), l.c.end()));
          if (it == by_config.end()) continue;
          std::vector<int> members(kk, 0);
          std::vector<int> inner_cut(kk, 0);
          for (std::size_t t = 0; t < l.c.size(); ++t) {
            ++members[l.c[t]];
            for (std::size_t u = 0; u < l.c.size(); ++u) {
              if (l.c[u] != l.c[t] && g.adjacent(nd.bag[t], nd.bag[u])) ++inner_cut[l.c[t]];
            }
          }
          for (const int b : it->second) {
            const KscEntry& r = right.entries[static_cast<std::size_t>(b)];
            KscEntry next{l.c, std::vector<int>(kk), std::vector<int>(kk)};
            for (std::size_t j = 0; j < kk; ++j) {
              next.nu[j] = l.nu[j] + r.nu[j] - members[j];
              next.mu[j] = l.mu[j] + r.mu[j] - inner_cut[j];
            }
            builder.add(std::move(next), static_cast<int>(a), b);
          }
        }
        break;
      }
    }

    result.stats.total_entries += out.entries.size();
    result.stats.max_node_entries = std::max(result.stats.max_node_entries, out.entries.size());
    if (out.entries.size() > ksc_entry_bound(static_cast<int>(nd.bag.size()), n, g.size(), k)) result.stats.within_bound = false;
  }

  // Root extraction.
  const KscEntrySet& root = result.tables.back();
  ExpansionValue best = ExpansionValue::infinity();
  int best_entry = -1;
  for (std::size_t e = 0; e < root.entries.size(); ++e) {
    const KscEntry& en = root.entries[e];
    if (std::any_of(en.nu.begin(), en.nu.end(), [](int x) { return x == 0; })) continue;
    ExpansionValue worst(0);
    for (std::size_t j = 0; j < kk; ++j) worst = std::max(worst, ExpansionValue(Rational(en.mu[j], en.nu[j])));
    if (worst < best) {
      best = worst;
      best_entry = static_cast<int>(e);
    }
  }
  if (best_entry < 0) throw std::logic_error("no k-partition found at the root");

  // Walk backpointers; introduce nodes fix each vertex's part.
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> stack{{nt.root(), best_entry}};
  while (!stack.empty()) {
    const auto [node, e] = stack.back();
    stack.pop_back();
    const NiceNode& nd = nt.nodes[static_cast<std::size_t>(node)];
    const KscEntrySet& set = result.tables[static_cast<std::size_t>(node)];
    const auto [a, b] = set.back[static_cast<std::size_t>(e)];
    if (nd.kind == NiceKind::Introduce) {
      const auto p = static_cast<std::size_t>(std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.vertex) - nd.bag.begin());
      part[static_cast<std::size_t>(nd.vertex)] = set.entries[static_cast<std::size_t>(e)].c[p];
    }
    if (nd.children[0] >= 0) stack.emplace_back(nd.children[0], a);
    if (nd.children[1] >= 0) stack.emplace_back(nd.children[1], b);
  }
  KPartition parts(kk);
  for (Vertex v = 0; v < n; ++v) parts[static_cast<std::size_t>(part[static_cast<std::size_t>(v)])].push_back(v);
  std::sort(parts.begin(), parts.end());
  result.solution = {best, std::move(parts)};
  return result;
}

inline KscTreewidthResult ksc_treewidth_dp(const WeightedGraph& g, int k) {
  return ksc_treewidth_dp(g, k, make_nice(heuristic_decompose(g)));
}

}  // namespace sparsecut
