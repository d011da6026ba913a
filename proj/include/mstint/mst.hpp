#ifndef MSTINT_MST_HPP
#define MSTINT_MST_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mstint/graph.hpp"
#include "mstint/union_find.hpp"

namespace mstint {

/// Minimum spanning forest. `weight` is infinite iff the graph is disconnected.
struct SpanningForest {
  EdgeSet edges;
  Extended weight;
};

/// Partial cut C(S, W): edges with exactly one endpoint in `side` and weight
/// strictly below `threshold`. An infinite threshold is the complete cut.
struct PartialCutSpec {
  VertexSet side;
  Extended threshold;
  EdgeSet edges;

  friend bool operator==(const PartialCutSpec&, const PartialCutSpec&) = default;
};

/// Edge indices ordered by (weight, index); the order every Kruskal pass uses.
inline std::vector<EdgeId> kruskal_order(const Graph& g) {
  std::vector<EdgeId> order(g.n_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).weight < g.edge(b).weight; });
  return order;
}

/// Kruskal over the edges present in `alive`, ties broken by edge index.
inline SpanningForest mst(const Graph& g, const EdgeMask& alive) {
  SpanningForest f;
  UnionFind uf(g.n_vertices());
  Quantity total;
  for (EdgeId id : kruskal_order(g)) {
    if (!alive[id]) continue;
    const Edge& e = g.edge(id);
    if (uf.unite(e.u, e.v)) {
      f.edges.push_back(id);
      total += e.weight;
    }
  }
  std::sort(f.edges.begin(), f.edges.end());
  if (g.n_vertices() > 1 && uf.set_count() != 1) {
    f.weight = Extended::infinity();
  } else {
    f.weight = total;
  }
  return f;
}

inline SpanningForest mst(const Graph& g) { return mst(g, full_mask(g)); }

/// p_G(F) = MST(G \ F) - MST(G). Infinite iff F disconnects G.
inline Extended profit(const Graph& g, const EdgeSet& removed) {
  const SpanningForest before = mst(g);
  if (before.weight.is_infinite()) throw graph_error("profit: graph is disconnected");
  if (removed.empty()) return Quantity::zero();
  return increase(mst(g, mask_without(g, removed)).weight, before.weight.value());
}

/// Profit of removing `removed` from the subgraph `alive` (which must be connected).
inline Extended profit_in(const Graph& g, const EdgeMask& alive, const EdgeSet& removed) {
  const SpanningForest before = mst(g, alive);
  if (before.weight.is_infinite()) throw graph_error("profit: graph is disconnected");
  EdgeMask after = alive;
  for (EdgeId id : removed) after.at(id) = 0;
  return increase(mst(g, after).weight, before.weight.value());
}

inline void check_side(const Graph& g, const VertexSet& side) {
  if (side.empty() || side.size() >= g.n_vertices()) {
    throw std::invalid_argument("cut side must be a nonempty proper vertex subset");
  }
  for (Vertex v : side) {
    if (v >= g.n_vertices()) throw std::out_of_range("cut side vertex out of range");
  }
}

/// Realizes C_G(side, threshold) over the edges present in `alive`.
inline PartialCutSpec partial_cut(const Graph& g, const EdgeMask& alive, VertexSet side, Extended threshold) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  check_side(g, side);
  const auto in = vertex_flags(g.n_vertices(), side);
  PartialCutSpec c{std::move(side), threshold, {}};
  for (EdgeId id = 0; id < g.n_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (alive[id] && crosses(e, in) && Extended(e.weight) < threshold) c.edges.push_back(id);
  }
  return c;
}

inline PartialCutSpec partial_cut(const Graph& g, VertexSet side, Extended threshold) {
  return partial_cut(g, full_mask(g), std::move(side), threshold);
}

/// Vertex set of the component of T \ {e} holding e's lower-indexed endpoint;
/// the complete cut of that set meets T exactly in e.
inline VertexSet tree_cut(const Graph& g, const SpanningForest& t, EdgeId e) {
  if (!contains(t.edges, e)) throw std::invalid_argument("tree_cut: edge is not in the tree");
  if (t.weight.is_infinite()) throw graph_error("tree_cut: graph is disconnected");
  UnionFind uf(g.n_vertices());
  for (EdgeId id : t.edges) {
    if (id != e) uf.unite(g.edge(id).u, g.edge(id).v);
  }
  const Vertex anchor = std::min(g.edge(e).u, g.edge(e).v);
  VertexSet side;
  for (Vertex v = 0; v < g.n_vertices(); ++v) {
    if (uf.same(v, anchor)) side.push_back(v);
  }
  return side;
}

/// max(0, W - w(e)) for an edge e crossing the complete cut of c.side; never
/// exceeds the profit of removing c.edges.
inline Extended cut_profit_lower_bound(const Graph& g, const PartialCutSpec& c, EdgeId e) {
  const auto in = vertex_flags(g.n_vertices(), c.side);
  const Edge& edge = g.edge(e);
  if (!crosses(edge, in)) throw std::invalid_argument("cut_profit_lower_bound: edge does not cross the cut");
  if (c.threshold.is_infinite()) return Extended::infinity();
  if (c.threshold.value() <= edge.weight) return Quantity::zero();
  return c.threshold.value() - edge.weight;
}

}  // namespace mstint

#endif  // MSTINT_MST_HPP
