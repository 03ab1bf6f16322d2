#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sparsecut/random_separation.hpp"
#include "sparsecut/sse_treewidth.hpp"
#include "sparsecut/sse_vertex_cover.hpp"

namespace sparsecut {

enum class Algorithm { Brute, Treewidth, VertexCover, RandomSeparation };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Brute: return "brute";
    case Algorithm::Treewidth: return "tw";
    case Algorithm::VertexCover: return "vc";
    case Algorithm::RandomSeparation: return "randsep";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "brute") return Algorithm::Brute;
  if (s == "tw") return Algorithm::Treewidth;
  if (s == "vc") return Algorithm::VertexCover;
  if (s == "randsep") return Algorithm::RandomSeparation;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "' (expected brute, tw, vc or randsep)");
}

/// Inputs an algorithm may need beyond (G, k). Missing decompositions and
/// covers are computed on demand; a missing family means exhaustive.
struct SseOptions {
  std::optional<NiceTreeDecomposition> decomposition;
  std::optional<VertexSet> cover;
  const ColoringFamily* family = nullptr;
  unsigned threads = 1;
};

/// psi_k(G) by the chosen algorithm. Random separation with a randomized family
/// may return infinity when no trial produced a candidate.
inline SseSolution solve_sse(const WeightedGraph& g, int k, Algorithm algo, const SseOptions& opt = {}) {
  switch (algo) {
    case Algorithm::Brute:
      return sse_brute(g, k);
    case Algorithm::Treewidth:
      return opt.decomposition ? sse_treewidth_dp(g, k, *opt.decomposition).solution : sse_treewidth_dp(g, k).solution;
    case Algorithm::VertexCover:
      return opt.cover ? sse_vertex_cover(g, k, *opt.cover) : sse_vertex_cover(g, k);
    case Algorithm::RandomSeparation: {
      const int kk = std::min(k, g.order() - 1);
      std::optional<ExhaustiveFamily> exhaustive;
      const ColoringFamily* family = opt.family;
      if (family == nullptr) family = &exhaustive.emplace(g.order());
      auto r = sse_random_separation(g, kk, *family, opt.threads);
      if (!r.best) return {ExpansionValue::infinity(), {}};
      return *r.best;
    }
  }
  throw std::logic_error("unreachable");
}

/// phi_2(G) = psi_{floor(n/2)}(G): the best small side S and its complement.
inline KscSolution solve_2sc(const WeightedGraph& g, Algorithm algo, const SseOptions& opt = {}) {
  if (g.order() < 2) throw std::invalid_argument("2-sparsest cut needs at least 2 vertices");
  if (g.has_vertex_weights()) throw std::invalid_argument("solve_2sc requires unit vertex weights");
  SseSolution s = solve_sse(g, g.order() / 2, algo, opt);
  if (s.value.is_infinite()) return {s.value, {}};
  const auto in = membership(g, s.witness);
  VertexSet rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in[static_cast<std::size_t>(v)]) rest.push_back(v);
  }
  return {s.value, {std::move(s.witness), std::move(rest)}};
}

}  // namespace sparsecut
