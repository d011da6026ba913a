#include <gtest/gtest.h>

#include "mstint/bench.hpp"
#include "mstint/relaxation.hpp"
#include "test_util.hpp"

using namespace mstint;
using testutil::q;

namespace {

void expect_all_pass(const CertificationReport& rep, const std::string& what) {
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << what << ": " << c.name << " " << c.detail;
}

// 8 singleton components b1..b8 (vertices 0..7); a zero-weight path joins them
// and is removed entirely, leaving the seven weighted edges as T'_cc
Graph nested_example() {
  return testutil::graph(
      "8 14\n"
      "0 1 0 1\n1 2 0 1\n2 3 0 1\n3 4 0 1\n4 5 0 1\n5 6 0 1\n6 7 0 1\n"
      "0 2 10 1\n0 1 7 1\n2 4 12 1\n2 5 3 1\n5 6 5 1\n4 3 15 1\n6 7 2 1\n");
}

}  // namespace

TEST(CcGraph, Examples) {
  const Graph g = testutil::t3();
  const CcGraph cc = build_cc_graph(g, {0});
  ASSERT_EQ(cc.t(), 2u);
  EXPECT_EQ(cc.components[0], VertexSet{0});
  EXPECT_EQ(cc.components[1], (VertexSet{1, 2}));
  EXPECT_EQ(cc.edges, EdgeSet{2});
  EXPECT_EQ(build_cc_graph(g, {}).t(), 1u);

  // path 0-1-2-3 closed by a heavy edge so removing the middle keeps it connected
  const Graph path = testutil::graph("4 4\n0 1 1 1\n1 2 1 1\n2 3 1 1\n3 0 9 1\n");
  const CcGraph pc = build_cc_graph(path, {1});
  ASSERT_EQ(pc.t(), 2u);
  EXPECT_EQ(pc.components[0], (VertexSet{0, 1}));
  EXPECT_EQ(pc.components[1], (VertexSet{2, 3}));
  EXPECT_THROW(build_cc_graph(g, {0, 1}), graph_error);
}

TEST(Relaxation, TriangleCertificate) {
  const Graph g = testutil::t3();
  const RelaxationCertificate cert = build_cut_sequence(g, {0});
  ASSERT_EQ(cert.cuts.size(), 1u);
  EXPECT_EQ(cert.tree_prime_edges, std::vector<EdgeId>{2});
  EXPECT_EQ(cert.cuts[0].side, VertexSet{0});
  EXPECT_EQ(cert.cuts[0].threshold, Extended(q("3")));
  EXPECT_EQ(cert.cuts[0].edges, EdgeSet{0});
  EXPECT_EQ(cert.matching, std::vector<EdgeId>{0});
  EXPECT_EQ(cert.cost_sum, Extended(q("1")));
  EXPECT_DOUBLE_EQ(cert.cost_bound, 2.0);
  EXPECT_EQ(cert.matched_gain, q("2").units());
  EXPECT_EQ(cert.profit, Extended(q("2")));
  const CertificationReport rep = certify(g, {0}, cert);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.checks.size(), 8u);
}

TEST(Relaxation, TrivialCertificate) {
  const Graph g = testutil::t3();
  const RelaxationCertificate cert = build_cut_sequence(g, {});
  EXPECT_TRUE(cert.cuts.empty());
  EXPECT_TRUE(certify(g, {}, cert).all_passed());
  // non-tree edge only: still one component
  EXPECT_TRUE(build_cut_sequence(g, {2}).cuts.empty());
}

TEST(Relaxation, NestedSidesStructure) {
  const Graph g = nested_example();
  const EdgeSet f{0, 1, 2, 3, 4, 5, 6};
  const RelaxationCertificate cert = build_cut_sequence(g, f);
  ASSERT_EQ(cert.cc.t(), 8u);
  ASSERT_EQ(cert.cuts.size(), 7u);
  std::vector<Quantity> ws;
  for (EdgeId id : cert.tree_prime_edges) ws.push_back(g.edge(id).weight);
  EXPECT_EQ(ws, (std::vector<Quantity>{q("2"), q("3"), q("5"), q("7"), q("10"), q("12"), q("15")}));
  // the last cut splits the whole graph in two
  const auto& last = cert.small_sides.back();
  EXPECT_TRUE(last.size() == 1 || last.size() == 7);
  // small sides form a laminar family
  for (std::size_t i = 0; i < cert.small_sides.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = cert.small_sides[i];
      const auto& b = cert.small_sides[j];
      EdgeSet meet;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
      EXPECT_TRUE(meet.empty() || meet.size() == b.size()) << i << " vs " << j;
    }
  }
  EXPECT_EQ(cert.profit, Extended(q("54")));
  EXPECT_EQ(cert.matched_gain, q("54").units());
  for (std::size_t k : cert.small_side_counts) EXPECT_LE(k, 3u);  // log2 8
  expect_all_pass(certify(g, f, cert), "nested");
}

TEST(Relaxation, Deterministic) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = testutil::random_graph(seed, 4, 9, 16);
    Rng rng(seed);
    const EdgeSet f = bench::sample_connected_removal(g, rng);
    const auto a = report_to_json(build_cut_sequence(g, f), certify(g, f, build_cut_sequence(g, f)));
    const auto b = report_to_json(build_cut_sequence(g, f), certify(g, f, build_cut_sequence(g, f)));
    EXPECT_EQ(a, b);
  }
}

TEST(Relaxation, RandomCertificatesPass) {
  Rng rng(2024);
  int nontrivial = 0;
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    const Graph g = testutil::random_graph(seed, 3, 9, 18);
    const EdgeSet f = bench::sample_connected_removal(g, rng);
    const RelaxationCertificate cert = build_cut_sequence(g, f);
    if (cert.cc.t() > 2) ++nontrivial;
    const CertificationReport rep = certify(g, f, cert);
    expect_all_pass(rep, "seed " + std::to_string(seed));
    if (cert.profit.is_finite()) EXPECT_EQ(Quantity::from_units(cert.matched_gain), cert.profit.value());
  }
  EXPECT_GT(nontrivial, 150);
}

TEST(Relaxation, TamperedCertificateFails) {
  const Graph g = nested_example();
  const EdgeSet f{0, 1, 2, 3, 4, 5, 6};
  RelaxationCertificate cert = build_cut_sequence(g, f);
  cert.matching[0] = 7;  // not a removed tree edge
  const CertificationReport rep = certify(g, f, cert);
  EXPECT_FALSE(rep.all_passed());
  ASSERT_NE(rep.failed(), nullptr);
}

TEST(Relaxation, DisconnectingRemovalRejected) {
  EXPECT_THROW(build_cut_sequence(testutil::p2(), {0}), graph_error);
}
