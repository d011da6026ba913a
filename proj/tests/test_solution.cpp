#include <gtest/gtest.h>

#include "mstint/budget.hpp"
#include "mstint/solution.hpp"
#include "test_util.hpp"

using namespace mstint;
using testutil::q;

TEST(Solution, RecomputesCostAndProfit) {
  const Graph g = testutil::t3();
  const InterdictionSolution s = make_solution(g, {1, 0, 1});
  EXPECT_EQ(s.edges, (EdgeSet{0, 1}));
  EXPECT_EQ(s.cost, q("2"));
  EXPECT_TRUE(s.profit.is_infinite());
  EXPECT_THROW(make_solution(testutil::graph("2 2\n0 1 1 inf\n0 1 2 1\n"), {0}), std::invalid_argument);
}

TEST(Solution, JsonRecord) {
  const Graph g = testutil::t3();
  const InterdictionSolution s = budget_approximate(g, q("2"));
  const nlohmann::json j = solution_to_json(s);
  EXPECT_EQ(j["edges"], nlohmann::json::array({0}));
  EXPECT_EQ(j["cost"], "1.0");
  EXPECT_EQ(j["profit"], "2.0");
  ASSERT_EQ(j["cuts"].size(), 1u);
  EXPECT_EQ(j["cuts"][0]["threshold"], "3.0");
  EXPECT_EQ(j["cuts"][0]["side_vertices"], nlohmann::json::array({0}));
  ASSERT_TRUE(j.contains("trace"));
  EXPECT_EQ(j["trace"]["outcome"], "reached_delta");
  EXPECT_EQ(j["trace"]["rounds"][0]["gain"], "2.0");
  EXPECT_EQ(nlohmann::json::parse(serialize_solution(s)), j);
}

TEST(Solution, InfiniteProfitSerializes) {
  const InterdictionSolution s = make_solution(testutil::p2(), {0});
  EXPECT_EQ(solution_to_json(s)["profit"], "inf");
  EXPECT_FALSE(solution_to_json(s).contains("trace"));
}
