#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sparsecut/random_graphs.hpp"
#include "sparsecut/sparsecut.hpp"

namespace sc = sparsecut;
using sc::ExpansionValue;
using sc::Rational;
using sc::VertexSet;
namespace fam = sc::families;

// ---- Rational ----

TEST(Rational, LowestTermsAndSign) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, 7).str(), "0/1");
  EXPECT_EQ(Rational(5).str(), "5/1");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
}

TEST(Rational, Errors) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(INT64_MAX) + Rational(1), std::overflow_error);
  EXPECT_THROW(Rational(INT64_MAX / 2) * Rational(4), std::overflow_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("0.01"), Rational(1, 100));
  EXPECT_EQ(Rational::parse("-2.5"), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(ExpansionValue, InfinityAbsorbsAndDominates) {
  const auto inf = ExpansionValue::infinity();
  EXPECT_TRUE((inf + ExpansionValue(3)).is_infinite());
  EXPECT_LT(ExpansionValue(1000000), inf);
  EXPECT_EQ(inf, ExpansionValue::infinity());
  EXPECT_EQ(inf.str(), "inf");
  EXPECT_THROW(ExpansionValue(Rational(-1)), std::domain_error);
}

// ---- WeightedGraph ----

TEST(WeightedGraph, MergesParallelEdges) {
  const std::vector<sc::Edge> e{{0, 1, Rational(1, 2)}, {1, 0, Rational(1, 3)}, {1, 2, 1}};
  const sc::WeightedGraph g(3, e);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.weight(0, 1), Rational(5, 6));
  EXPECT_FALSE(g.has_unit_edge_weights());
}

TEST(WeightedGraph, RejectsBadInput) {
  const std::vector<sc::Edge> loop{{1, 1, 1}};
  EXPECT_THROW(sc::WeightedGraph(2, loop), std::invalid_argument);
  const std::vector<sc::Edge> out{{0, 2, 1}};
  EXPECT_THROW(sc::WeightedGraph(2, out), std::out_of_range);
  const std::vector<sc::Edge> neg{{0, 1, -1}};
  EXPECT_THROW(sc::WeightedGraph(2, neg), std::invalid_argument);
  EXPECT_THROW(sc::WeightedGraph(2, {}, std::vector<Rational>{1, 0}), std::invalid_argument);
}

// ---- cut_weight / edge_expansion ----

TEST(CutWeight, Examples) {
  EXPECT_EQ(sc::cut_weight(fam::cycle(4), VertexSet{0, 1}), Rational(2));
  EXPECT_EQ(sc::cut_weight(fam::petersen(), VertexSet{}), Rational(0));
  EXPECT_EQ(sc::cut_weight(fam::petersen(), VertexSet{4}), Rational(3));
}

TEST(EdgeExpansion, Examples) {
  EXPECT_EQ(sc::edge_expansion(fam::complete(4), VertexSet{2}), ExpansionValue(3));
  EXPECT_EQ(sc::edge_expansion(fam::path(3), VertexSet{0, 2}), ExpansionValue(1));
  EXPECT_EQ(sc::edge_expansion(fam::cycle(4), VertexSet{0, 1, 2, 3}), ExpansionValue(0));
  EXPECT_THROW(sc::edge_expansion(fam::cycle(4), VertexSet{}), std::invalid_argument);
}

TEST(EdgeExpansion, UsesVertexWeights) {
  const std::vector<sc::Edge> e{{0, 1, 3}};
  const sc::WeightedGraph g(2, e, std::vector<Rational>{Rational(3, 2), 2});
  EXPECT_EQ(sc::edge_expansion(g, VertexSet{0}), ExpansionValue(2));
  EXPECT_EQ(sc::edge_expansion(g, VertexSet{0, 1}), ExpansionValue(0));
}

// ---- brute forces ----

TEST(SseBrute, Examples) {
  EXPECT_EQ(sc::sse_brute(fam::petersen(), 2).value, ExpansionValue(2));
  EXPECT_EQ(sc::sse_brute(fam::cycle(6), 3).value, ExpansionValue(Rational(2, 3)));
  EXPECT_EQ(sc::sse_brute(fam::complete(4), 2).value, ExpansionValue(2));
}

TEST(SseBrute, WitnessIsConsistent) {
  const auto s = sc::sse_brute(fam::cycle(6), 3);
  EXPECT_EQ(s.witness.size(), 3U);
  EXPECT_EQ(sc::edge_expansion(fam::cycle(6), s.witness), s.value);
}

TEST(KscBrute, Examples) {
  EXPECT_EQ(sc::ksc_brute(fam::cycle(6), 2).value, ExpansionValue(Rational(2, 3)));
  EXPECT_EQ(sc::ksc_brute(fam::cycle(6), 3).value, ExpansionValue(1));
  EXPECT_EQ(sc::ksc_brute(fam::cycle(4), 2).value, ExpansionValue(1));
  EXPECT_EQ(sc::ksc_brute(fam::cycle(4), 2).value, sc::sse_brute(fam::cycle(4), 2).value);
}

TEST(KscBrute, PartitionIsValid) {
  const auto g = fam::cycle(6);
  const auto s = sc::ksc_brute(g, 3);
  ASSERT_EQ(s.partition.size(), 3U);
  EXPECT_NO_THROW(sc::require_partition(g, s.partition));
  EXPECT_EQ(sc::partition_expansion(g, s.partition), s.value);
}

TEST(KscBrute, RejectsBadK) {
  EXPECT_THROW(sc::ksc_brute(fam::path(3), 4), std::invalid_argument);
  EXPECT_THROW(sc::ksc_brute(fam::path(3), 1), std::invalid_argument);
}

TEST(RequirePartition, NamesTheProblem) {
  const auto g = fam::path(3);
  EXPECT_THROW(sc::require_partition(g, {{0}, {1}}), std::invalid_argument);
  EXPECT_THROW(sc::require_partition(g, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(sc::require_partition(g, {{0, 1, 2}, {}}), std::invalid_argument);
}

TEST(BruteForce, AgreesWithIndependentEnumeration) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 150; ++i) {
    const auto g = sc::random_small_graph(rng, 2, 7, i % 2 == 0);
    const int n = g.order();
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(sc::sse_brute(g, k).value, sc::testing::naive_sse(g, k)) << sc::to_ssc(g);
    for (int k = 2; k <= std::min(n, 3); ++k) EXPECT_EQ(sc::ksc_brute(g, k).value, sc::testing::naive_ksc(g, k)) << sc::to_ssc(g);
  }
}

TEST(BruteForce, VertexWeightedAgreesWithIndependentEnumeration) {
  std::mt19937_64 rng(102);
  std::uniform_int_distribution<int> wt(1, 5);
  for (int i = 0; i < 60; ++i) {
    const auto base = sc::random_small_graph(rng, 2, 6, true);
    std::vector<Rational> vw;
    for (int v = 0; v < base.order(); ++v) vw.emplace_back(wt(rng), wt(rng));
    const sc::WeightedGraph g(base.order(), base.edges(), vw);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(sc::sse_brute(g, k).value, sc::testing::naive_sse(g, k));
    for (int k = 2; k <= std::min(g.order(), 3); ++k) EXPECT_EQ(sc::ksc_brute(g, k).value, sc::testing::naive_ksc(g, k));
  }
}

// ---- structure ----

TEST(Structure, DegreeAndDegeneracy) {
  EXPECT_EQ(sc::max_degree(fam::petersen()), 3);
  EXPECT_EQ(sc::degeneracy(fam::petersen()).degeneracy, 3);
  EXPECT_EQ(sc::degeneracy(fam::path(5)).degeneracy, 1);
  EXPECT_EQ(sc::degeneracy(fam::star(4)).degeneracy, 1);
  EXPECT_EQ(sc::degeneracy(fam::cycle(5)).degeneracy, 2);
  EXPECT_EQ(sc::degeneracy(fam::complete(5)).degeneracy, 4);
}

TEST(Structure, DegeneracyOrderWitnessesTheValue) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto g = sc::random_small_graph(rng, 1, 12, false);
    const auto d = sc::degeneracy(g);
    std::vector<int> pos(static_cast<std::size_t>(g.order()));
    for (std::size_t p = 0; p < d.order.size(); ++p) pos[static_cast<std::size_t>(d.order[p])] = static_cast<int>(p);
    int worst = 0;
    for (sc::Vertex v = 0; v < g.order(); ++v) {
      int later = 0;
      for (const auto& nb : g.neighbors(v)) later += pos[static_cast<std::size_t>(nb.vertex)] > pos[static_cast<std::size_t>(v)];
      worst = std::max(worst, later);
    }
    EXPECT_EQ(worst, d.degeneracy);
  }
}

TEST(Structure, VertexCoverExact) {
  const auto star_cover = sc::vertex_cover_exact(fam::star(4), 1);
  ASSERT_TRUE(star_cover.has_value());
  EXPECT_EQ(*star_cover, VertexSet{0});
  EXPECT_FALSE(sc::vertex_cover_exact(fam::cycle(5), 2).has_value());
  const auto k4 = sc::vertex_cover_exact(fam::complete(4), 3);
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->size(), 3U);
  EXPECT_TRUE(sc::is_vertex_cover(fam::complete(4), *k4));
}

TEST(Structure, MinimumVertexCoverIsMinimum) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const auto g = sc::random_small_graph(rng, 1, 10, false);
    const auto c = sc::minimum_vertex_cover(g);
    EXPECT_TRUE(sc::is_vertex_cover(g, c));
    int best = g.order();
    for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask) {
      VertexSet s;
      for (int v = 0; v < g.order(); ++v) {
        if ((mask >> v) & 1U) s.push_back(v);
      }
      if (sc::is_vertex_cover(g, s)) best = std::min(best, static_cast<int>(s.size()));
    }
    EXPECT_EQ(static_cast<int>(c.size()), best);
  }
}

TEST(Structure, ComponentsRespectActiveMask) {
  const auto g = fam::path(5);
  const std::vector<char> active{1, 1, 0, 1, 1};
  const auto comps = sc::connected_components(g, active);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (VertexSet{0, 1}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4}));
}

TEST(Structure, HeavyEdgeQuotient) {
  const std::vector<sc::Edge> e{{0, 1, 10}, {1, 2, 1}, {2, 3, 10}, {3, 0, 2}};
  const sc::WeightedGraph g(4, e);
  const auto q = sc::quotient_by_heavy_edges(g, 10);
  ASSERT_EQ(q.graph.order(), 2);
  EXPECT_EQ(q.blocks[0], (VertexSet{0, 1}));
  EXPECT_EQ(q.graph.weight(0, 1), Rational(3));
  EXPECT_EQ(q.graph.vertex_weight(1), Rational(2));
}

// ---- .ssc format ----

TEST(SscFormat, ParsesCommentsWeightsAndDefaults) {
  const auto g = sc::parse_ssc("c demo\np ssc 3 2\ne 1 2 3/4\ne 2 3\nv 3 5/2\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.weight(0, 1), Rational(3, 4));
  EXPECT_EQ(g.weight(1, 2), Rational(1));
  EXPECT_EQ(g.vertex_weight(2), Rational(5, 2));
  EXPECT_EQ(g.vertex_weight(0), Rational(1));
}

TEST(SscFormat, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const auto g = sc::random_small_graph(rng, 1, 9, true);
    EXPECT_EQ(sc::parse_ssc(sc::to_ssc(g)), g);
  }
  const sc::WeightedGraph vw(2, std::vector<sc::Edge>{{0, 1, 1}}, std::vector<Rational>{Rational(1, 3), 2});
  EXPECT_EQ(sc::parse_ssc(sc::to_ssc(vw)), vw);
}

TEST(SscFormat, ErrorsCarryLineNumbers) {
  try {
    sc::parse_ssc("p ssc 2 1\ne 1 3\n");
    FAIL() << "expected a format error";
  } catch (const sc::FormatError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(sc::parse_ssc("p ssc 2 2\ne 1 2\n"), sc::FormatError);
  EXPECT_THROW(sc::parse_ssc("e 1 2\n"), sc::FormatError);
  EXPECT_THROW(sc::parse_ssc("p ssc 2 1\ne 1 1\n"), sc::FormatError);
  EXPECT_THROW(sc::parse_ssc("p ssc 2 1\nx 1 2\n"), sc::FormatError);
  EXPECT_THROW(sc::parse_ssc("p ssc 2 0\nv 1 0\n"), sc::FormatError);
}
