#ifndef MSTINT_EPS_INCREASE_HPP
#define MSTINT_EPS_INCREASE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "mstint/flow.hpp"
#include "mstint/graph.hpp"
#include "mstint/mst.hpp"
#include "mstint/solution.hpp"
#include "mstint/union_find.hpp"

namespace mstint {

/// Auxiliary network for one tree edge e = {u, v}: edges lighter than w(e)
/// are contracted, heavier ones dropped, so only weight-w(e) edges between
/// distinct contracted nodes remain.
struct TreeEdgeNetwork {
  EdgeId tree_edge = 0;
  std::vector<std::size_t> node_of;  // vertex -> contracted node
  std::size_t n_nodes = 0;
  std::vector<detail::Link> links;
  std::size_t source = 0;            // image of the lower-indexed endpoint
  std::size_t sink = 0;
  Extended threshold;                // next distinct weight above w(e)
};

inline TreeEdgeNetwork tree_edge_network(const Graph& g, EdgeId e) {
  const Edge& te = g.edge(e);
  UnionFind uf(g.n_vertices());
  for (const Edge& x : g.edges()) {
    if (x.weight < te.weight) uf.unite(x.u, x.v);
  }
  TreeEdgeNetwork net;
  net.tree_edge = e;
  net.node_of = uf.labels();
  net.n_nodes = uf.set_count();
  for (EdgeId id = 0; id < g.n_edges(); ++id) {
    const Edge& x = g.edge(id);
    if (x.weight != te.weight) continue;
    const std::size_t a = net.node_of[x.u];
    const std::size_t b = net.node_of[x.v];
    if (a != b) net.links.push_back({a, b, id, x.cost});
  }
  net.source = net.node_of[std::min(te.u, te.v)];
  net.sink = net.node_of[std::max(te.u, te.v)];
  net.threshold = g.next_weight_above(te.weight);
  return net;
}

/// Maps a node-level source side back to a partial cut of g.
inline PartialCutSpec lift_cut(const Graph& g, const TreeEdgeNetwork& net, const std::vector<char>& in_source) {
  VertexSet side;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    if (in_source[net.node_of[v]]) side.push_back(v);
  }
  return partial_cut(g, std::move(side), net.threshold);
}

/// Cheapest removal set that makes the MST strictly heavier. For each edge of
/// the fixed MST, the minimum cut between its endpoints in the auxiliary
/// network is a candidate; the cheapest candidate wins, lowest tree edge index
/// on ties. Exactly n-1 min-cut computations are made.
inline InterdictionSolution eps_increase(const Graph& g) {
  if (g.n_vertices() < 2) throw std::invalid_argument("eps_increase: need at least 2 vertices");
  const SpanningForest t = mst(g);
  if (t.weight.is_infinite()) throw graph_error("eps_increase: graph is disconnected");

  MinCutCounter counter;
  std::optional<PartialCutSpec> best;
  Extended best_cost = Extended::infinity();
  for (EdgeId e : t.edges) {
    const TreeEdgeNetwork net = tree_edge_network(g, e);
    detail::NodeCut cut = detail::min_cut_links(net.n_nodes, net.links, net.source, net.sink);
    if (cut.cost.is_infinite() || (best && !(cut.cost < best_cost))) continue;
    PartialCutSpec spec = lift_cut(g, net, cut.in_source);
    if (spec.edges != cut.edges) throw std::logic_error("eps_increase: lifted cut differs from network cut");
    best = std::move(spec);
    best_cost = cut.cost;
  }
  if (!best) throw infeasible_error("eps_increase: every candidate cut contains an unremovable edge");

  EdgeSet edges = best->edges;
  InterdictionSolution sol = make_solution(g, std::move(edges), {*best});
  sol.min_cut_calls = counter.count();
  return sol;
}

}  // namespace mstint

#endif  // MSTINT_EPS_INCREASE_HPP
