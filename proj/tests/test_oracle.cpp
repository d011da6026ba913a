#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mstint/bench.hpp"
#include "mstint/eps_increase.hpp"
#include "mstint/flow.hpp"
#include "mstint/oracle.hpp"
#include "test_util.hpp"

using namespace mstint;
using testutil::q;

TEST(Oracle, TriangleExamples) {
  const Graph g = testutil::t3();
  EXPECT_EQ(oracle::oracle_budget(g, q("2")).edges, EdgeSet{0});
  EXPECT_EQ(oracle::oracle_budget(g, q("2")).cost, q("1"));
  EXPECT_EQ(oracle::oracle_budget(g, q("0.000001")).cost, q("1"));
  EXPECT_EQ(oracle::oracle_profit(g, q("1")).profit, Extended(q("2")));
  EXPECT_TRUE(oracle::oracle_profit(g, q("2")).profit.is_infinite());
  EXPECT_EQ(oracle::oracle_profit(g, q("2"), true).profit, Extended(q("2")));
  const InterdictionSolution none = oracle::oracle_profit(g, Quantity::zero());
  EXPECT_TRUE(none.edges.empty());
  EXPECT_EQ(none.profit, Extended(Quantity::zero()));
  EXPECT_EQ(oracle::oracle_eps(g).cost, q("1"));
}

TEST(Oracle, SingleEdge) {
  const Graph g = testutil::p2();
  EXPECT_EQ(oracle::oracle_budget(g, q("1")).edges, EdgeSet{0});
  EXPECT_EQ(oracle::oracle_budget(g, q("1")).cost, q("3"));
  EXPECT_EQ(oracle::oracle_eps(g).cost, q("3"));
}

TEST(Oracle, SizeGuard) {
  const Graph big = gen_random(1, 10, oracle::kMaxEdges + 1, 5, 5);
  EXPECT_THROW(oracle::oracle_eps(big), std::length_error);
  const Graph ok = gen_random(1, 10, oracle::kMaxEdges, 5, 5);
  EXPECT_NO_THROW(oracle::prim_mst_weight(ok, full_mask(ok)));
}

TEST(Oracle, Infeasible) {
  const Graph g = testutil::graph("2 1\n0 1 1 inf\n");
  EXPECT_THROW(oracle::oracle_eps(g), infeasible_error);
  EXPECT_THROW(oracle::oracle_budget(g, q("1")), infeasible_error);
}

TEST(Oracle, Monotone) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 7, 11);
    Extended last_profit = Quantity::zero();
    for (int b = 0; b <= 12; ++b) {
      const Extended p = oracle::oracle_profit(g, Quantity::from_integer(b)).profit;
      EXPECT_GE(p, last_profit);
      last_profit = p;
    }
    Quantity last_cost;
    for (int d = 1; d <= 8; ++d) {
      const Quantity c = oracle::oracle_budget(g, Quantity::from_integer(d)).cost;
      EXPECT_GE(c, last_cost);
      last_cost = c;
    }
  }
}

TEST(Oracle, SolutionsAreConsistent) {
  Rng rng(4);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 7, 11);
    const Quantity budget = bench::sample_budget(g, rng);
    const InterdictionSolution s = oracle::oracle_profit(g, budget);
    EXPECT_LE(s.cost, budget);
    EXPECT_EQ(s.profit, profit(g, s.edges));
    EXPECT_EQ(Extended(s.cost), cost_of(g, s.edges));
  }
}

// values frozen from tests/derive_goldens.py (networkx + exact fractions)
TEST(Goldens, InstancesMatchIndependentOracle) {
  std::ifstream in(std::string(MSTINT_SOURCE_DIR) + "/tests/goldens.txt");
  ASSERT_TRUE(in);
  std::string line;
  std::optional<Graph> g;
  std::string name;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != ' ') {
      name = line;
      std::ifstream f(std::string(MSTINT_SOURCE_DIR) + "/" + line);
      ASSERT_TRUE(f) << line;
      g = parse_instance(f).graph;
      continue;
    }
    std::istringstream ls(line);
    std::string key;
    std::string arg;
    std::string want;
    ls >> key;
    if (key == "mst" || key == "global_min_cut" || key == "eps_opt") {
      ls >> want;
    } else {
      ls >> arg >> want;
      arg = arg.substr(arg.find('=') + 1);
    }
    SCOPED_TRACE(name + ": " + line);
    if (key == "mst") {
      EXPECT_EQ(to_string(mst(*g).weight), want);
      EXPECT_EQ(to_string(oracle::prim_mst_weight(*g, full_mask(*g))), want);
    } else if (key == "global_min_cut") {
      EXPECT_EQ(to_string(global_min_cut(*g).cost), want);
    } else if (key == "eps_opt") {
      EXPECT_EQ(to_string(oracle::oracle_eps(*g).cost), want);
      EXPECT_EQ(to_string(eps_increase(*g).cost), want);
    } else if (key == "budget_opt") {
      EXPECT_EQ(to_string(oracle::oracle_budget(*g, q(arg)).cost), want);
    } else if (key == "profit_opt") {
      EXPECT_EQ(to_string(oracle::oracle_profit(*g, q(arg)).profit), want);
    } else {
      ADD_FAILURE() << "unknown key " << key;
    }
    ++checked;
  }
  EXPECT_EQ(checked, 70);
}
