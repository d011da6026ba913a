#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "mstint/generators.hpp"
#include "mstint/mst.hpp"
#include "mstint/oracle.hpp"
#include "mstint/union_find.hpp"
#include "test_util.hpp"

using namespace mstint;
using testutil::q;

namespace {

EdgeSet random_subset(Rng& rng, const Graph& g, std::uint64_t num, std::uint64_t den) {
  EdgeSet s;
  for (EdgeId id = 0; id < g.n_edges(); ++id) {
    if (rng.coin(num, den)) s.push_back(id);
  }
  return s;
}

// MST of g minus f, forced to contain `keep` (contract first, then Kruskal)
Extended constrained_mst(const Graph& g, const EdgeSet& f, const EdgeSet& keep) {
  UnionFind uf(g.n_vertices());
  Quantity total;
  for (EdgeId id : keep) {
    uf.unite(g.edge(id).u, g.edge(id).v);
    total += g.edge(id).weight;
  }
  std::vector<EdgeId> rest;
  for (EdgeId id = 0; id < g.n_edges(); ++id) {
    if (!contains(f, id) && !contains(keep, id)) rest.push_back(id);
  }
  std::sort(rest.begin(), rest.end(), [&](EdgeId a, EdgeId b) { return g.edge(a).weight < g.edge(b).weight; });
  std::size_t joined = keep.size();
  for (EdgeId id : rest) {
    if (uf.unite(g.edge(id).u, g.edge(id).v)) {
      total += g.edge(id).weight;
      ++joined;
    }
  }
  if (joined + 1 < g.n_vertices()) return Extended::infinity();
  return total;
}

}  // namespace

TEST(Mst, Triangle) {
  const SpanningForest t = mst(testutil::t3());
  EXPECT_EQ(t.edges, (EdgeSet{0, 1}));
  EXPECT_EQ(t.weight, Extended(q("3")));
}

TEST(Mst, DisconnectedAndSingleton) {
  EXPECT_EQ(oracle::prim_mst_weight(Graph(1, {}), EdgeMask{}), Extended(Quantity::zero()));
  const Graph p = testutil::p2();
  EXPECT_TRUE(mst(p, mask_without(p, {0})).weight.is_infinite());
  const Graph one(1, {});
  EXPECT_TRUE(mst(one).edges.empty());
  EXPECT_EQ(mst(one).weight, Extended(Quantity::zero()));
  const Graph two(2, {});
  EXPECT_THROW(profit(two, {}), graph_error);
}

TEST(Mst, TieBreakByIndex) {
  const Graph g = testutil::graph("3 3\n0 1 1 1\n1 2 1 1\n0 2 1 1\n");
  EXPECT_EQ(mst(g).edges, (EdgeSet{0, 1}));
}

TEST(Profit, TriangleExamples) {
  const Graph g = testutil::t3();
  EXPECT_EQ(profit(g, {0}), Extended(q("2")));
  EXPECT_EQ(profit(g, {}), Extended(Quantity::zero()));
  EXPECT_TRUE(profit(g, {0, 1}).is_infinite());
  EXPECT_EQ(profit(g, {2}), Extended(Quantity::zero()));
}

TEST(PartialCut, TriangleExamples) {
  const Graph g = testutil::t3();
  EXPECT_EQ(partial_cut(g, {0}, q("3")).edges, (EdgeSet{0}));
  EXPECT_EQ(partial_cut(g, {0}, Extended::infinity()).edges, (EdgeSet{0, 2}));
  EXPECT_TRUE(partial_cut(g, {1}, q("1")).edges.empty());
  EXPECT_THROW(partial_cut(g, {}, q("1")), std::invalid_argument);
  EXPECT_THROW(partial_cut(g, {0, 1, 2}, q("1")), std::invalid_argument);
}

TEST(TreeCut, Examples) {
  const Graph g = testutil::t3();
  const SpanningForest t = mst(g);
  EXPECT_EQ(tree_cut(g, t, 0), (VertexSet{0}));
  EXPECT_EQ(tree_cut(g, t, 1), (VertexSet{0, 1}));
  EXPECT_THROW(tree_cut(g, t, 2), std::invalid_argument);
  const Graph path = testutil::graph("3 2\n0 1 1 1\n1 2 1 1\n");
  EXPECT_EQ(tree_cut(path, mst(path), 1), (VertexSet{0, 1}));
}

TEST(TreeCut, MeetsTreeOnlyInE) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 9, 16);
    const SpanningForest t = mst(g);
    for (EdgeId e : t.edges) {
      const PartialCutSpec c = partial_cut(g, tree_cut(g, t, e), Extended::infinity());
      EdgeSet meet;
      std::set_intersection(c.edges.begin(), c.edges.end(), t.edges.begin(), t.edges.end(), std::back_inserter(meet));
      EXPECT_EQ(meet, EdgeSet{e});
    }
  }
}

TEST(CutProfitLowerBound, Examples) {
  const Graph g = testutil::t3();
  const PartialCutSpec c3 = partial_cut(g, {0}, q("3"));
  EXPECT_EQ(cut_profit_lower_bound(g, c3, 2), Extended(Quantity::zero()));
  EXPECT_EQ(cut_profit_lower_bound(g, c3, 0), Extended(q("2")));
  EXPECT_EQ(profit(g, c3.edges), Extended(q("2")));
  const PartialCutSpec c2 = partial_cut(g, {0}, q("2"));
  EXPECT_EQ(cut_profit_lower_bound(g, c2, 0), Extended(q("1")));
  EXPECT_THROW(cut_profit_lower_bound(g, c2, 1), std::invalid_argument);
}

// every partial cut, every crossing edge
TEST(CutProfitLowerBound, NeverExceedsProfit) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 6, 10);
    const std::size_t n = g.n_vertices();
    std::vector<Extended> thresholds{Extended::infinity()};
    for (Quantity w : g.distinct_weights()) thresholds.push_back(w);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      VertexSet side;
      for (Vertex v = 0; v < n; ++v) {
        if ((mask >> v) & 1) side.push_back(v);
      }
      const auto in = vertex_flags(n, side);
      for (Extended w : thresholds) {
        const PartialCutSpec c = partial_cut(g, side, w);
        const Extended p = profit(g, c.edges);
        for (EdgeId e = 0; e < g.n_edges(); ++e) {
          if (crosses(g.edge(e), in)) ASSERT_LE(cut_profit_lower_bound(g, c, e), p);
        }
      }
    }
  }
}

TEST(Mst, BlueRuleKeepsSurvivingTreeEdges) {
  Rng rng(17);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 9, 16);
    const EdgeSet f = random_subset(rng, g, 1, 3);
    if (!is_connected(g, mask_without(g, f))) continue;
    EdgeSet keep;
    for (EdgeId id : mst(g).edges) {
      if (!contains(f, id)) keep.push_back(id);
    }
    EXPECT_EQ(mst(g, mask_without(g, f)).weight, constrained_mst(g, f, keep)) << "seed " << seed;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Mst, AgreesWithPrim) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Graph g = testutil::random_graph(seed, 2, 12, 30, 9, 5);
    EXPECT_EQ(mst(g).weight, oracle::prim_mst_weight(g, full_mask(g)));
  }
}

TEST(Profit, SupermodularSingleEdge) {
  Rng rng(5);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 8, 14);
    const EdgeSet b = random_subset(rng, g, 1, 4);
    const EdgeMask alive = mask_without(g, b);
    if (!is_connected(g, alive)) continue;
    for (EdgeId e = 0; e < g.n_edges(); ++e) {
      if (contains(b, e)) continue;
      EXPECT_GE(profit_in(g, alive, {e}), profit(g, {e})) << "seed " << seed << " e " << e;
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Profit, SupermodularSets) {
  Rng rng(6);
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 8, 14);
    EdgeSet a;
    EdgeSet b;
    for (EdgeId id = 0; id < g.n_edges(); ++id) {
      const auto r = rng.between(0, 3);
      if (r == 0) a.push_back(id);
      if (r == 1) b.push_back(id);
    }
    const EdgeMask alive = mask_without(g, b);
    if (!is_connected(g, alive)) continue;
    EXPECT_GE(profit_in(g, alive, a), profit(g, a)) << "seed " << seed;
  }
}

TEST(Profit, Monotone) {
  Rng rng(8);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 8, 14);
    const EdgeSet f = random_subset(rng, g, 1, 4);
    const EdgeSet more = set_union(f, random_subset(rng, g, 1, 4));
    EXPECT_LE(profit(g, f), profit(g, more));
    EXPECT_GE(profit(g, f), Extended(Quantity::zero()));
  }
}
