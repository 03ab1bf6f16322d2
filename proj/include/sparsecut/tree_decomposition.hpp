#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut {

/// Unrooted tree decomposition: one bag per tree node, tree given as an edge list.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;

  /// Largest bag size minus one; -1 when every bag is empty.
  [[nodiscard]] int width() const {
    std::size_t largest = 0;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    return static_cast<int>(largest) - 1;
  }
};

/// Outcome of a validity check. `condition` names the first violated rule.
struct Validation {
  bool ok = true;
  std::string condition;
  std::string witness;

  static Validation failure(std::string condition, std::string witness) { return {false, std::move(condition), std::move(witness)}; }
  explicit operator bool() const { return ok; }
  [[nodiscard]] std::string message() const { return ok ? std::string("ok") : condition + ": " + witness; }
};

namespace detail {

/// Checks that `edges` form a single tree on `nodes` vertices (a lone node is a tree).
inline Validation check_tree_shape(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes == 0) {
    return edges.empty() ? Validation{} : Validation::failure("tree", "edges without nodes");
  }
  if (static_cast<int>(edges.size()) != nodes - 1) {
    return Validation::failure("tree", std::to_string(edges.size()) + " edges for " + std::to_string(nodes) + " nodes");
  }
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= nodes || b < 0 || b >= nodes) {
      return Validation::failure("tree", "edge " + std::to_string(a) + "-" + std::to_string(b) + " out of range");
    }
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return Validation::failure("tree", "cycle through edge " + std::to_string(a) + "-" + std::to_string(b));
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return {};
}

}  // namespace detail

/// Checks the three decomposition conditions in order: vertex coverage,
/// edge coverage, connected occurrence subtrees (after the tree shape itself).
inline Validation validate(const WeightedGraph& g, const TreeDecomposition& td) {
  const int nodes = static_cast<int>(td.bags.size());
  if (auto shape = detail::check_tree_shape(nodes, td.tree_edges); !shape) return shape;
  const int n = g.order();
  std::vector<std::vector<int>> occurs(static_cast<std::size_t>(n));
  for (int t = 0; t < nodes; ++t) {
    for (const Vertex v : td.bags[static_cast<std::size_t>(t)]) {
      if (v < 0 || v >= n) return Validation::failure("bag", "bag " + std::to_string(t) + " holds unknown vertex " + std::to_string(v));
      occurs[static_cast<std::size_t>(v)].push_back(t);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occurs[static_cast<std::size_t>(v)].empty()) return Validation::failure("vertex-coverage", "vertex " + std::to_string(v) + " is in no bag");
  }
  std::vector<std::set<Vertex>> bag_sets;
  bag_sets.reserve(td.bags.size());
  for (const auto& b : td.bags) bag_sets.emplace_back(b.begin(), b.end());
  for (const Edge& e : g.edges()) {
    const bool covered = std::any_of(occurs[static_cast<std::size_t>(e.u)].begin(), occurs[static_cast<std::size_t>(e.u)].end(),
                                     [&](int t) { return bag_sets[static_cast<std::size_t>(t)].count(e.v) > 0; });
    if (!covered) return Validation::failure("edge-coverage", "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag");
  }
  // Occurrence set of v is connected iff the tree edges inside it number |occ| - 1.
  std::vector<int> inside(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : td.tree_edges) {
    for (const Vertex v : td.bags[static_cast<std::size_t>(a)]) {
      if (bag_sets[static_cast<std::size_t>(b)].count(v) > 0) ++inside[static_cast<std::size_t>(v)];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (inside[static_cast<std::size_t>(v)] + 1 != static_cast<int>(occurs[static_cast<std::size_t>(v)].size())) {
      return Validation::failure("connectivity", "bags containing vertex " + std::to_string(v) + " are not connected");
    }
  }
  return {};
}

/// Min-fill elimination ordering (smallest index on ties), turned into a
/// decomposition whose bags are {v} plus v's later neighbours in the filled
/// graph; bags contained in a neighbouring bag are then merged away.
inline TreeDecomposition heuristic_decompose(const WeightedGraph& g) {
  const int n = g.order();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  auto fill_in = [&](Vertex v) {
    const auto& nb = adj[static_cast<std::size_t>(v)];
    long missing = 0;
    for (auto a = nb.begin(); a != nb.end(); ++a) {
      for (auto b = std::next(a); b != nb.end(); ++b) {
        if (adj[static_cast<std::size_t>(*a)].count(*b) == 0) ++missing;
      }
    }
    return missing;
  };

  std::vector<char> eliminated(static_cast<std::size_t>(n), 0);
  std::vector<int> position(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  std::vector<VertexSet> bag_of(static_cast<std::size_t>(n));
  std::vector<long> fill(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) fill[static_cast<std::size_t>(v)] = fill_in(v);

  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || fill[static_cast<std::size_t>(v)] < fill[static_cast<std::size_t>(best)]) best = v;
    }
    const auto nb = adj[static_cast<std::size_t>(best)];
    VertexSet bag(nb.begin(), nb.end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    bag_of[static_cast<std::size_t>(best)] = bag;
    position[static_cast<std::size_t>(best)] = step;
    order.push_back(best);
    eliminated[static_cast<std::size_t>(best)] = 1;
    std::set<Vertex> touched(nb.begin(), nb.end());
    for (const Vertex a : nb) {
      adj[static_cast<std::size_t>(a)].erase(best);
      for (const Vertex b : nb) {
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
      }
      for (const Vertex c : adj[static_cast<std::size_t>(a)]) touched.insert(c);
    }
    adj[static_cast<std::size_t>(best)].clear();
    for (const Vertex t : touched) {
      if (!eliminated[static_cast<std::size_t>(t)]) fill[static_cast<std::size_t>(t)] = fill_in(t);
    }
  }

  // Parent of bag(v): bag of the earliest-eliminated later neighbour.
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (const Vertex v : order) {
    int best = -1;
    for (const Vertex u : bag_of[static_cast<std::size_t>(v)]) {
      if (u == v) continue;
      if (best < 0 || position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(best)]) best = u;
    }
    parent[static_cast<std::size_t>(v)] = best;
  }
  // Independent roots (one per component) are chained together.
  Vertex previous_root = -1;
  for (const Vertex v : order) {
    if (parent[static_cast<std::size_t>(v)] >= 0) continue;
    if (previous_root >= 0) parent[static_cast<std::size_t>(previous_root)] = v;
    previous_root = v;
  }

  // Merge a bag into its parent when contained in it.
  std::vector<int> rep(static_cast<std::size_t>(n), -1);
  auto find_rep = [&](int v) {
    while (rep[static_cast<std::size_t>(v)] >= 0) v = rep[static_cast<std::size_t>(v)];
    return v;
  };
  for (const Vertex v : order) {
    const int p = parent[static_cast<std::size_t>(v)];
    if (p < 0) continue;
    const auto& child_bag = bag_of[static_cast<std::size_t>(v)];
    const auto& parent_bag = bag_of[static_cast<std::size_t>(p)];
    if (std::includes(parent_bag.begin(), parent_bag.end(), child_bag.begin(), child_bag.end())) rep[static_cast<std::size_t>(v)] = p;
  }
  std::vector<int> node_of(static_cast<std::size_t>(n), -1);
  for (const Vertex v : order) {
    if (rep[static_cast<std::size_t>(v)] >= 0) continue;
    node_of[static_cast<std::size_t>(v)] = static_cast<int>(td.bags.size());
    td.bags.push_back(bag_of[static_cast<std::size_t>(v)]);
  }
  for (const Vertex v : order) {
    if (rep[static_cast<std::size_t>(v)] >= 0 || parent[static_cast<std::size_t>(v)] < 0) continue;
    const int target = find_rep(parent[static_cast<std::size_t>(v)]);
    td.tree_edges.emplace_back(node_of[static_cast<std::size_t>(v)], node_of[static_cast<std::size_t>(target)]);
  }
  return td;
}

// ---- Nice tree decompositions ----

enum class NiceKind { Leaf, Introduce, Forget, Join };

inline const char* to_string(NiceKind k) {
  switch (k) {
    case NiceKind::Leaf: return "leaf";
    case NiceKind::Introduce: return "introduce";
    case NiceKind::Forget: return "forget";
    case NiceKind::Join: return "join";
  }
  return "?";
}

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  Vertex vertex = -1;  ///< introduced / forgotten vertex
  VertexSet bag;
  std::array<int, 2> children{-1, -1};
};

/// Rooted binary decomposition. Nodes are stored children-first, so a forward
/// sweep is a bottom-up traversal and the root is the last node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  [[nodiscard]] int root() const { return static_cast<int>(nodes.size()) - 1; }
  [[nodiscard]] int width() const {
    std::size_t largest = 0;
    for (const auto& nd : nodes) largest = std::max(largest, nd.bag.size());
    return static_cast<int>(largest) - 1;
  }
  [[nodiscard]] TreeDecomposition as_tree_decomposition() const {
    TreeDecomposition td;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      td.bags.push_back(nodes[static_cast<std::size_t>(i)].bag);
      for (const int c : nodes[static_cast<std::size_t>(i)].children) {
        if (c >= 0) td.tree_edges.emplace_back(c, i);
      }
    }
    return td;
  }
};

/// Structural rules of a nice decomposition (node typing, empty leaves and root,
/// children stored before parents, every non-root node has exactly one parent).
inline Validation check_nice(const NiceTreeDecomposition& nt) {
  const int count = static_cast<int>(nt.nodes.size());
  if (count == 0) return Validation::failure("nice", "no nodes");
  std::vector<int> parents(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i) {
    const NiceNode& nd = nt.nodes[static_cast<std::size_t>(i)];
    const std::string where = "node " + std::to_string(i) + " (" + to_string(nd.kind) + ")";
    if (!std::is_sorted(nd.bag.begin(), nd.bag.end()) || std::adjacent_find(nd.bag.begin(), nd.bag.end()) != nd.bag.end()) {
      return Validation::failure("nice", where + " bag not sorted/unique");
    }
    for (const int c : nd.children) {
      if (c >= i) return Validation::failure("nice", where + " child not stored before parent");
      if (c >= 0) ++parents[static_cast<std::size_t>(c)];
    }
    const int arity = (nd.children[0] >= 0) + (nd.children[1] >= 0);
    auto child_bag = [&](int slot) -> const VertexSet& { return nt.nodes[static_cast<std::size_t>(nd.children[static_cast<std::size_t>(slot)])].bag; };
    switch (nd.kind) {
      case NiceKind::Leaf:
        if (arity != 0 || !nd.bag.empty()) return Validation::failure("nice", where + " must be childless with an empty bag");
        break;
      case NiceKind::Introduce: {
        if (arity != 1 || nd.children[0] < 0) return Validation::failure("nice", where + " needs exactly one child in slot 0");
        VertexSet expect = child_bag(0);
        if (std::binary_search(expect.begin(), expect.end(), nd.vertex)) return Validation::failure("nice", where + " vertex already in child bag");
        expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
        if (expect != nd.bag) return Validation::failure("nice", where + " bag is not child bag plus vertex");
        break;
      }
      case NiceKind::Forget: {
        if (arity != 1 || nd.children[0] < 0) return Validation::failure("nice", where + " needs exactly one child in slot 0");
        VertexSet expect = child_bag(0);
        const auto it = std::lower_bound(expect.begin(), expect.end(), nd.vertex);
        if (it == expect.end() || *it != nd.vertex) return Validation::failure("nice", where + " vertex not in child bag");
        expect.erase(it);
        if (expect != nd.bag) return Validation::failure("nice", where + " bag is not child bag minus vertex");
        break;
      }
      case NiceKind::Join:
        if (arity != 2) return Validation::failure("nice", where + " needs two children");
        if (child_bag(0) != nd.bag || child_bag(1) != nd.bag) return Validation::failure("nice", where + " bags differ from children");
        break;
    }
  }
  for (int i = 0; i + 1 < count; ++i) {
    if (parents[static_cast<std::size_t>(i)] != 1) return Validation::failure("nice", "node " + std::to_string(i) + " has " + std::to_string(parents[static_cast<std::size_t>(i)]) + " parents");
  }
  if (!nt.nodes.back().bag.empty()) return Validation::failure("nice", "root bag not empty");
  return {};
}

/// Nice structure plus the decomposition conditions with respect to g.
inline Validation validate(const WeightedGraph& g, const NiceTreeDecomposition& nt) {
  if (auto nice = check_nice(nt); !nice) return nice;
  return validate(g, nt.as_tree_decomposition());
}

/// Standard conversion: root at bag 0; each child branch forgets what its
/// parent lacks and then introduces what the parent adds; sibling branches are
/// combined by joins; leaves grow from empty bags and the root is emptied by
/// forgets. Width is preserved.
inline NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  const int count = static_cast<int>(td.bags.size());
  if (auto shape = detail::check_tree_shape(count, td.tree_edges); !shape) {
    throw std::invalid_argument("make_nice: invalid tree decomposition: " + shape.message());
  }
  NiceTreeDecomposition nt;
  auto add = [&](NiceKind kind, Vertex v, VertexSet bag, int c0 = -1, int c1 = -1) {
    nt.nodes.push_back({kind, v, std::move(bag), {c0, c1}});
    return static_cast<int>(nt.nodes.size()) - 1;
  };
  auto introduce = [&](int node, Vertex v) {
    VertexSet bag = nt.nodes[static_cast<std::size_t>(node)].bag;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    return add(NiceKind::Introduce, v, std::move(bag), node);
  };
  auto forget = [&](int node, Vertex v) {
    VertexSet bag = nt.nodes[static_cast<std::size_t>(node)].bag;
    bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
    return add(NiceKind::Forget, v, std::move(bag), node);
  };

  if (count == 0) {
    add(NiceKind::Leaf, -1, {});
    return nt;
  }

  std::vector<VertexSet> bags;
  bags.reserve(td.bags.size());
  for (const auto& b : td.bags) bags.push_back(normalized(b));

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
  for (const auto& [a, b] : td.tree_edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> bfs{0};
  std::vector<int> parent(static_cast<std::size_t>(count), -1);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(count));
  parent[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const int t = bfs[i];
    for (const int u : adj[static_cast<std::size_t>(t)]) {
      if (parent[static_cast<std::size_t>(u)] >= 0) continue;
      parent[static_cast<std::size_t>(u)] = t;
      children[static_cast<std::size_t>(t)].push_back(u);
      bfs.push_back(u);
    }
  }

  std::vector<int> top(static_cast<std::size_t>(count), -1);
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    const int t = *it;
    const VertexSet& bag = bags[static_cast<std::size_t>(t)];
    std::vector<int> branches;
    for (const int c : children[static_cast<std::size_t>(t)]) {
      int cur = top[static_cast<std::size_t>(c)];
      for (const Vertex v : bags[static_cast<std::size_t>(c)]) {
        if (!std::binary_search(bag.begin(), bag.end(), v)) cur = forget(cur, v);
      }
      for (const Vertex v : bag) {
        if (!std::binary_search(bags[static_cast<std::size_t>(c)].begin(), bags[static_cast<std::size_t>(c)].end(), v)) cur = introduce(cur, v);
      }
      branches.push_back(cur);
    }
    if (branches.empty()) {
      int cur = add(NiceKind::Leaf, -1, {});
      for (const Vertex v : bag) cur = introduce(cur, v);
      branches.push_back(cur);
    }
    int cur = branches[0];
    for (std::size_t b = 1; b < branches.size(); ++b) cur = add(NiceKind::Join, -1, bag, cur, branches[b]);
    top[static_cast<std::size_t>(t)] = cur;
  }
  int cur = top[0];
  for (const Vertex v : bags[0]) cur = forget(cur, v);
  return nt;
}

}  // namespace sparsecut
