#pragma once

#include <optional>
#include <stdexcept>

#include "sparsecut/ksc_treewidth.hpp"
#include "sparsecut/ksc_vertex_cover.hpp"
#include "sparsecut/sse.hpp"

namespace sparsecut {

struct KscOptions {
  std::optional<NiceTreeDecomposition> decomposition;
  std::optional<VertexSet> cover;
  unsigned threads = 1;
};

inline KscSolution solve_ksc(const WeightedGraph& g, int k, Algorithm algo, const KscOptions& opt = {}) {
  switch (algo) {
    case Algorithm::Brute:
      return ksc_brute(g, k);
    case Algorithm::Treewidth:
      return opt.decomposition ? ksc_treewidth_dp(g, k, *opt.decomposition).solution : ksc_treewidth_dp(g, k).solution;
    case Algorithm::VertexCover:
      return opt.cover ? ksc_vertex_cover(g, k, *opt.cover, opt.threads).solution : ksc_vertex_cover(g, k).solution;
    case Algorithm::RandomSeparation:
      throw std::invalid_argument("random separation solves small-set expansion only");
  }
  throw std::logic_error("unreachable");
}

struct KscDecision {
  bool yes = false;
  ExpansionValue value;
  std::optional<KPartition> witness;  ///< set on yes
};

/// Is there a k-partition whose parts all have expansion <= threshold?
inline KscDecision ksc_decision(const WeightedGraph& g, int k, const Rational& threshold, Algorithm algo, const KscOptions& opt = {}) {
  KscSolution s = solve_ksc(g, k, algo, opt);
  KscDecision d;
  d.value = s.value;
  d.yes = threshold.sign() >= 0 && s.value <= ExpansionValue(threshold);
  if (d.yes) d.witness = std::move(s.partition);
  return d;
}

}  // namespace sparsecut
