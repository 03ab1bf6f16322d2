#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "sparsecut/random_graphs.hpp"
#include "sparsecut/sparsecut.hpp"

namespace sc = sparsecut;
using sc::ExpansionValue;
using sc::Rational;
using sc::VertexSet;
namespace fam = sc::families;

namespace {

void expect_valid_partition(const sc::WeightedGraph& g, int k, const sc::KscSolution& s) {
  ASSERT_EQ(static_cast<int>(s.partition.size()), k);
  EXPECT_NO_THROW(sc::require_partition(g, s.partition));
  EXPECT_EQ(sc::partition_expansion(g, s.partition), s.value);
}

}  // namespace

// ---- treewidth DP ----

TEST(KscTreewidth, Examples) {
  EXPECT_EQ(sc::ksc_treewidth_dp(fam::cycle(6), 3).solution.value, ExpansionValue(1));
  EXPECT_EQ(sc::ksc_treewidth_dp(fam::cycle(6), 2).solution.value, ExpansionValue(Rational(2, 3)));
  const auto k3 = sc::ksc_treewidth_dp(fam::complete(3), 3).solution;
  EXPECT_EQ(k3.value, ExpansionValue(2));
  expect_valid_partition(fam::complete(3), 3, k3);
}

TEST(KscTreewidth, RejectsBadInput) {
  EXPECT_THROW(sc::ksc_treewidth_dp(fam::path(3), 1), std::invalid_argument);
  EXPECT_THROW(sc::ksc_treewidth_dp(fam::path(3), 4), std::invalid_argument);
  const sc::WeightedGraph weighted(2, std::vector<sc::Edge>{{0, 1, 2}});
  EXPECT_THROW(sc::ksc_treewidth_dp(weighted, 2), std::invalid_argument);
}

TEST(KscTreewidth, EntrySetsAreExactlyTheRealizableStates) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 30; ++t) {
    const auto g = sc::random_small_graph(rng, 2, 6, false);
    const int n = g.order();
    const int k = std::min(n, 2 + t % 2);
    const auto nt = sc::make_nice(sc::heuristic_decompose(g));
    const auto r = sc::ksc_treewidth_dp(g, k, nt);

    std::vector<std::uint32_t> below(nt.nodes.size(), 0);
    for (std::size_t i = 0; i < nt.nodes.size(); ++i) {
      for (const int c : nt.nodes[i].children) {
        if (c >= 0) below[i] |= below[static_cast<std::size_t>(c)];
      }
      for (const sc::Vertex v : nt.nodes[i].bag) below[i] |= 1U << v;
    }

    using State = std::tuple<std::vector<std::uint8_t>, std::vector<int>, std::vector<int>>;
    for (std::size_t i = 0; i < nt.nodes.size(); ++i) {
      std::vector<sc::Vertex> members;
      for (int v = 0; v < n; ++v) {
        if ((below[i] >> v) & 1U) members.push_back(v);
      }
      std::set<State> expect;
      std::vector<int> label(static_cast<std::size_t>(n), -1);
      std::vector<int> digits(members.size(), 0);
      while (true) {
        for (std::size_t m = 0; m < members.size(); ++m) label[static_cast<std::size_t>(members[m])] = digits[m];
        std::vector<std::uint8_t> c;
        for (const sc::Vertex v : nt.nodes[i].bag) c.push_back(static_cast<std::uint8_t>(label[static_cast<std::size_t>(v)]));
        std::vector<int> nu(static_cast<std::size_t>(k), 0);
        std::vector<int> mu(static_cast<std::size_t>(k), 0);
        for (const sc::Vertex v : members) ++nu[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
        for (const auto& e : g.edges()) {
          if (!((below[i] >> e.u) & 1U) || !((below[i] >> e.v) & 1U)) continue;
          const int a = label[static_cast<std::size_t>(e.u)];
          const int b = label[static_cast<std::size_t>(e.v)];
          if (a != b) {
            ++mu[static_cast<std::size_t>(a)];
            ++mu[static_cast<std::size_t>(b)];
          }
        }
        expect.emplace(c, nu, mu);
        std::size_t d = 0;
        while (d < digits.size() && ++digits[d] == k) digits[d++] = 0;
        if (d == digits.size()) break;
      }
      std::set<State> got;
      for (const auto& e : r.tables[i].entries) got.emplace(e.c, e.nu, e.mu);
      EXPECT_EQ(got.size(), r.tables[i].entries.size()) << "duplicate entries at node " << i;
      EXPECT_EQ(got, expect) << "node " << i << '\n' << sc::to_ssc(g);
    }
  }
}

TEST(KscTreewidth, EntryCountsWithinBound) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 60; ++t) {
    const auto g = sc::random_small_graph(rng, 3, 10, false);
    for (int k = 2; k <= 3; ++k) {
      const auto r = sc::ksc_treewidth_dp(g, k);
      EXPECT_TRUE(r.stats.within_bound);
      for (const auto& set : r.tables) {
        EXPECT_LE(set.entries.size(), sc::ksc_entry_bound(static_cast<int>(set.bag.size()), g.order(), g.size(), k));
      }
    }
  }
}

TEST(KscTreewidth, EntryBoundSaturates) {
  EXPECT_EQ(sc::ksc_entry_bound(2, 3, 2, 2), 4U * 16U * 9U);
  EXPECT_EQ(sc::ksc_entry_bound(60, 1000, 5000, 200), std::numeric_limits<std::uint64_t>::max());
}

// ---- Pareto assignment DP ----

TEST(Assignment, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::int64_t> w(-4, 6);
  int checked = 0;
  for (int t = 0; t < 600; ++t) {
    const int items = std::uniform_int_distribution<int>(0, 6)(rng);
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    sc::AssignmentProblem p;
    p.base.assign(static_cast<std::size_t>(k), 0);
    p.base_count.assign(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < k; ++j) {
      p.base_count[static_cast<std::size_t>(j)] = std::uniform_int_distribution<int>(0, 2)(rng);
      p.base[static_cast<std::size_t>(j)] = p.base_count[static_cast<std::size_t>(j)] * 5 + std::uniform_int_distribution<std::int64_t>(0, 4)(rng);
    }
    for (int i = 0; i < items; ++i) {
      std::vector<std::int64_t> row;
      for (int j = 0; j < k; ++j) row.push_back(w(rng));
      p.weight.push_back(row);
    }

    // Negative final sums cannot occur for cut problems; skip instances that reach them.
    bool reachable_negative = false;
    for (std::size_t j = 0; j < p.base.size(); ++j) {
      std::int64_t low = p.base[j];
      for (const auto& row : p.weight) low += std::min<std::int64_t>(0, row[j]);
      reachable_negative |= low < 0;
    }
    if (reachable_negative) continue;
    ++checked;

    ExpansionValue best = ExpansionValue::infinity();
    std::vector<int> bin(static_cast<std::size_t>(items), 0);
    while (true) {
      std::vector<std::int64_t> sum = p.base;
      std::vector<std::int64_t> cnt(p.base_count.begin(), p.base_count.end());
      for (int i = 0; i < items; ++i) {
        sum[static_cast<std::size_t>(bin[static_cast<std::size_t>(i)])] += p.weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(bin[static_cast<std::size_t>(i)])];
        ++cnt[static_cast<std::size_t>(bin[static_cast<std::size_t>(i)])];
      }
      bool ok = true;
      ExpansionValue worst(0);
      for (int j = 0; j < k && ok; ++j) {
        if (cnt[static_cast<std::size_t>(j)] == 0) {
          ok = false;
          break;
        }
        worst = std::max(worst, ExpansionValue(Rational(sum[static_cast<std::size_t>(j)], cnt[static_cast<std::size_t>(j)])));
      }
      if (ok) best = std::min(best, worst);
      int d = 0;
      while (d < items && ++bin[static_cast<std::size_t>(d)] == k) bin[static_cast<std::size_t>(d++)] = 0;
      if (d == items) break;
    }

    const auto r = sc::solve_assignment(p);
    EXPECT_EQ(r.value, best) << "trial " << t;
    if (r.value.is_finite()) {
      ASSERT_EQ(r.bin_of.size(), static_cast<std::size_t>(items));
      std::vector<std::int64_t> sum = p.base;
      std::vector<std::int64_t> cnt(p.base_count.begin(), p.base_count.end());
      for (int i = 0; i < items; ++i) {
        const auto b = static_cast<std::size_t>(r.bin_of[static_cast<std::size_t>(i)]);
        sum[b] += p.weight[static_cast<std::size_t>(i)][b];
        ++cnt[b];
      }
      ExpansionValue worst(0);
      for (int j = 0; j < k; ++j) worst = std::max(worst, ExpansionValue(Rational(sum[static_cast<std::size_t>(j)], cnt[static_cast<std::size_t>(j)])));
      EXPECT_EQ(worst, r.value);
    }
  }
  EXPECT_GE(checked, 200);
}

TEST(Assignment, InfeasibleWhenBinsStayEmpty) {
  sc::AssignmentProblem p;
  p.base = {0, 0, 0};
  p.base_count = {0, 0, 0};
  p.weight = {{1, 1, 1}, {1, 1, 1}};
  const auto r = sc::solve_assignment(p);
  EXPECT_TRUE(r.value.is_infinite());
  EXPECT_TRUE(r.bin_of.empty());
}

// ---- vertex cover algorithm ----

TEST(KscVertexCover, Examples) {
  EXPECT_EQ(sc::ksc_vertex_cover(fam::star(4), 2, VertexSet{0}).solution.value, ExpansionValue(1));
  EXPECT_EQ(sc::ksc_brute(fam::star(4), 2).value, ExpansionValue(1));
  EXPECT_EQ(sc::ksc_vertex_cover(fam::cycle(6), 2, VertexSet{0, 2, 4}).solution.value, ExpansionValue(Rational(2, 3)));
  EXPECT_EQ(sc::ksc_vertex_cover(fam::complete(4), 2).solution.value, ExpansionValue(2));
}

TEST(KscVertexCover, RejectsNonCover) {
  EXPECT_THROW(sc::ksc_vertex_cover(fam::cycle(4), 2, VertexSet{0, 1}), std::invalid_argument);
}

TEST(KscVertexCover, ThreadsDoNotChangeTheResult) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 20; ++t) {
    const auto g = sc::random_small_graph(rng, 4, 9, false);
    const auto cover = sc::minimum_vertex_cover(g);
    const auto one = sc::ksc_vertex_cover(g, 3, cover, 1);
    const auto three = sc::ksc_vertex_cover(g, 3, cover, 3);
    EXPECT_EQ(one.solution.value, three.solution.value);
    EXPECT_EQ(one.solution.partition, three.solution.partition);
  }
}

// ---- all algorithms against brute force ----

TEST(KscSolvers, AgreeWithBruteForce) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 200; ++t) {
    const auto g = sc::random_small_graph(rng, 2, 8, false);
    for (int k = 2; k <= std::min(3, g.order()); ++k) {
      const auto expected = sc::ksc_brute(g, k).value;
      for (const auto algo : {sc::Algorithm::Treewidth, sc::Algorithm::VertexCover}) {
        const auto s = sc::solve_ksc(g, k, algo);
        EXPECT_EQ(s.value, expected) << sc::to_string(algo) << " k " << k << '\n' << sc::to_ssc(g);
        expect_valid_partition(g, k, s);
      }
    }
  }
}

TEST(KscSolvers, AgreeWithBruteForceForLargerK) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 40; ++t) {
    const auto g = sc::random_small_graph(rng, 4, 6, false);
    for (int k = 4; k <= std::min(5, g.order()); ++k) {
      const auto expected = sc::ksc_brute(g, k).value;
      EXPECT_EQ(sc::ksc_treewidth_dp(g, k).solution.value, expected);
      EXPECT_EQ(sc::ksc_vertex_cover(g, k).solution.value, expected);
    }
  }
}

TEST(KscSolvers, RandomSeparationIsNotOffered) {
  EXPECT_THROW(sc::solve_ksc(fam::cycle(4), 2, sc::Algorithm::RandomSeparation), std::invalid_argument);
}

// ---- decision ----

TEST(KscDecision, Examples) {
  const auto c6 = fam::cycle(6);
  for (const auto algo : {sc::Algorithm::Brute, sc::Algorithm::Treewidth, sc::Algorithm::VertexCover}) {
    const auto yes = sc::ksc_decision(c6, 3, Rational(1), algo);
    EXPECT_TRUE(yes.yes);
    ASSERT_TRUE(yes.witness.has_value());
    EXPECT_LE(sc::partition_expansion(c6, *yes.witness), ExpansionValue(1));
    const auto no = sc::ksc_decision(c6, 3, Rational(99, 100), algo);
    EXPECT_FALSE(no.yes);
    EXPECT_FALSE(no.witness.has_value());
  }
}

TEST(KscDecision, SingletonsAtMaxDegree) {
  std::mt19937_64 rng(57);
  for (int t = 0; t < 20; ++t) {
    const auto g = sc::random_small_graph(rng, 2, 6, false);
    EXPECT_TRUE(sc::ksc_decision(g, g.order(), Rational(sc::max_degree(g)), sc::Algorithm::Treewidth).yes);
    EXPECT_TRUE(sc::ksc_decision(g, g.order(), Rational(sc::max_degree(g)), sc::Algorithm::VertexCover).yes);
  }
}

TEST(KscDecision, NegativeThresholdIsNo) {
  EXPECT_FALSE(sc::ksc_decision(sc::WeightedGraph(3), 2, Rational(-1), sc::Algorithm::Brute).yes);
  EXPECT_TRUE(sc::ksc_decision(sc::WeightedGraph(3), 2, Rational(0), sc::Algorithm::Brute).yes);
}

// ---- the phi/psi identities ----

TEST(PhiPsi, SmallSetBoundAndTwoWayEquality) {
  std::mt19937_64 rng(58);
  for (int t = 0; t < 150; ++t) {
    const auto g = sc::random_small_graph(rng, 2, 8, t % 2 == 1);
    EXPECT_EQ(sc::ksc_brute(g, 2).value, sc::sse_brute(g, g.order() / 2).value);
    for (int k = 2; k <= std::min(3, g.order()); ++k) EXPECT_LE(sc::sse_brute(g, g.order() / k).value, sc::ksc_brute(g, k).value);
  }
}
