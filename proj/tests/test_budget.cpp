#include <gtest/gtest.h>

#include "mstint/bench.hpp"
#include "mstint/budget.hpp"
#include "mstint/oracle.hpp"
#include "test_util.hpp"

using namespace mstint;
using testutil::q;

TEST(Greedy, TriangleReachesDelta) {
  const Graph g = testutil::t3();
  const GreedyResult r = greedy(g, q("1"), q("2"), g.distinct_weights());
  EXPECT_EQ(r.edges, EdgeSet{0});
  ASSERT_EQ(r.trace.rounds.size(), 1u);
  EXPECT_EQ(r.trace.rounds[0].defining_edge, 0u);
  EXPECT_EQ(r.trace.rounds[0].cut.threshold, Extended(q("3")));
  EXPECT_EQ(r.trace.rounds[0].gain, q("2"));
  EXPECT_EQ(r.trace.outcome, GreedyOutcome::reached_delta);
}

TEST(Greedy, TriangleSecondRoundIsolatesVertex) {
  // after {e0}, cut {e1} still fits the guess; removing both isolates vertex 1
  const Graph g = testutil::t3();
  const GreedyResult r = greedy(g, q("1"), q("10"), g.distinct_weights());
  EXPECT_EQ(r.edges, (EdgeSet{0, 1}));
  ASSERT_EQ(r.trace.rounds.size(), 2u);
  EXPECT_TRUE(r.trace.rounds[1].cumulative_profit.is_infinite());
  EXPECT_EQ(r.trace.outcome, GreedyOutcome::reached_delta);
}

TEST(Greedy, ReturnsEmptyWhenGuessTooSmall) {
  // every cut costs at least 3
  const Graph g = testutil::graph("3 3\n0 1 1 3\n1 2 2 3\n0 2 3 3\n");
  const GreedyResult r = greedy(g, q("2"), q("1"), g.distinct_weights());
  EXPECT_TRUE(r.edges.empty());
  EXPECT_EQ(r.trace.outcome, GreedyOutcome::no_progress);
  EXPECT_TRUE(r.trace.rounds.empty());
}

TEST(BudgetApproximate, Triangle) {
  const Graph g = testutil::t3();
  for (bool fast : {false, true}) {
    const InterdictionSolution s = budget_approximate(g, q("2"), BudgetOptions{fast, false});
    EXPECT_EQ(s.edges, EdgeSet{0});
    EXPECT_EQ(s.cost, q("1"));
    EXPECT_EQ(s.profit, Extended(q("2")));
  }
}

TEST(BudgetApproximate, SingleEdgeFallsBackToGlobalCut) {
  const InterdictionSolution s = budget_approximate(testutil::p2(), q("1"));
  EXPECT_EQ(s.edges, EdgeSet{0});
  EXPECT_EQ(s.cost, q("3"));
  EXPECT_TRUE(s.profit.is_infinite());
}

TEST(BudgetApproximate, Errors) {
  EXPECT_THROW(budget_approximate(testutil::t3(), Quantity::zero()), std::invalid_argument);
  EXPECT_THROW(budget_approximate(testutil::graph("3 1\n0 1 1 1\n"), q("1")), graph_error);
  EXPECT_THROW(budget_approximate(testutil::graph("2 1\n0 1 1 inf\n"), q("1")), infeasible_error);
}

TEST(ReduceBudgetRange, Examples) {
  const Graph g = testutil::t3();
  EXPECT_EQ(reduce_budget_range(g, q("2")), std::make_pair(q("1"), q("3")));
  EXPECT_EQ(reduce_budget_range(g, q("1000000")), std::make_pair(q("1"), q("3")));
  const Graph u = testutil::graph("4 5\n0 1 1 2\n1 2 2 2\n2 3 3 2\n3 0 4 2\n0 2 5 2\n");
  EXPECT_EQ(reduce_budget_range(u, q("1")).first, q("2"));
  const Graph mixed = testutil::graph("3 3\n0 1 1 1\n1 2 1 4\n0 2 1 9\n");
  // removing cost<=1 leaves a path of weight 2, no gain; cost<=4 isolates vertex 1
  EXPECT_EQ(reduce_budget_range(mixed, q("1")), std::make_pair(q("4"), q("12")));
  EXPECT_THROW(reduce_budget_range(testutil::graph("2 1\n0 1 1 inf\n"), q("1")), infeasible_error);
}

TEST(BudgetApproximate, FastVariantCallCount) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 8, 14);
    Rng rng(seed);
    const auto delta = bench::sample_delta(g, rng);
    if (!delta) continue;
    const InterdictionSolution s = budget_approximate_fast(g, *delta);
    EXPECT_EQ(s.min_cut_calls, g.distinct_weights().size() * g.n_edges()) << "seed " << seed;
  }
}

TEST(BudgetApproximate, SlowVariantCallsPerRound) {
  // one greedy call: every round scans d * |E'| pairs
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 7, 12);
    const auto weights = g.distinct_weights();
    MinCutCounter k;
    const GreedyResult r = greedy(g, q("3"), q("1000"), weights);
    std::uint64_t expect = 0;
    EdgeMask alive = full_mask(g);
    for (const GreedyRound& round : r.trace.rounds) {
      for (char a : alive) expect += a ? weights.size() : 0;
      for (EdgeId x : round.cut.edges) alive[x] = 0;
    }
    if (r.trace.outcome == GreedyOutcome::no_progress) {
      for (char a : alive) expect += a ? weights.size() : 0;  // the final empty scan
    }
    EXPECT_EQ(k.count(), expect) << "seed " << seed;
  }
}

// each round's pick beats every admissible cut of an exhaustive re-scan
TEST(Greedy, EachRoundPicksTheBestRatio) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 7, 12);
    const auto weights = g.distinct_weights();
    const Quantity budget = q("4");
    const GreedyResult r = greedy(g, budget, q("1000"), weights);
    EdgeMask alive = full_mask(g);
    for (const GreedyRound& round : r.trace.rounds) {
      const Edge& de = g.edge(round.defining_edge);
      ASSERT_TRUE(round.cut.threshold.is_finite());
      EXPECT_EQ(round.gain, round.cut.threshold.value() - de.weight);
      EXPECT_EQ(Extended(round.cut_cost), cost_of(g, round.cut.edges));
      for (EdgeId id = 0; id < g.n_edges(); ++id) {
        if (!alive[id]) continue;
        for (Quantity w : weights) {
          const CutResult c =
              min_st_cut(g, g.edge(id).u, g.edge(id).v, [&](EdgeId x) { return alive[x] && g.edge(x).weight < w; });
          if (!(w > g.edge(id).weight) || c.cost.is_infinite()) continue;
          if (c.cost == Extended(Quantity::zero()) || c.cost > Extended(budget)) continue;
          const std::int64_t gain = (w - g.edge(id).weight).units();
          EXPECT_TRUE(compare_ratio(gain, c.cost.value().units(), round.gain.units(), round.cut_cost.units()) <= 0)
              << "seed " << seed;
        }
      }
      for (EdgeId x : round.cut.edges) alive[x] = 0;
    }
    for (std::size_t i = 1; i < r.trace.rounds.size(); ++i) {
      EXPECT_LT(r.trace.rounds[i - 1].cumulative_cost, r.trace.rounds[i].cumulative_cost);
    }
  }
}

TEST(BudgetApproximate, WithinFactorOfOracle) {
  Rng rng(77);
  bench::Family fam;
  int checked = 0;
  while (checked < 60) {
    const Graph g = bench::sample_graph(rng, fam);
    const auto delta = bench::sample_delta(g, rng);
    if (!delta) continue;
    const Quantity opt = oracle::oracle_budget(g, *delta).cost;
    for (bool fast : {false, true}) {
      for (bool reduce : {false, true}) {
        const InterdictionSolution s = budget_approximate(g, *delta, BudgetOptions{fast, reduce});
        EXPECT_GE(s.profit, Extended(*delta));
        EXPECT_EQ(Extended(s.cost), cost_of(g, s.edges));
        EXPECT_TRUE(bench::within_budget_factor(s.cost, opt, g.n_vertices()))
            << format_instance(g) << "delta " << to_string(*delta) << " fast " << fast;
      }
    }
    ++checked;
  }
}

TEST(BudgetFactor, ExactCheck) {
  // n = 4: factor exactly 10
  EXPECT_TRUE(bench::within_budget_factor(q("10"), q("1"), 4));
  EXPECT_FALSE(bench::within_budget_factor(q("10.000001"), q("1"), 4));
  // n = 5: log2 5 ~ 2.3219, factor ~ 11.2877
  EXPECT_TRUE(bench::within_budget_factor(q("11.28"), q("1"), 5));
  EXPECT_FALSE(bench::within_budget_factor(q("11.29"), q("1"), 5));
}
