#ifndef MSTINT_GRAPH_HPP
#define MSTINT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mstint/quantity.hpp"
#include "mstint/union_find.hpp"

namespace mstint {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sorted, duplicate-free list of edge indices.
using EdgeSet = std::vector<EdgeId>;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
/// One flag per edge; nonzero means the edge is present.
using EdgeMask = std::vector<char>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Quantity weight;
  Extended cost;  // removal cost; infinity means "cannot be removed"

  bool touches(Vertex x) const { return u == x || v == x; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class graph_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected multigraph with per-edge weight and removal cost. Edge identity
/// is the index into `edges()` and never changes; subgraphs are expressed as
/// masks over that index space.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u >= n_ || e.v >= n_) {
        throw graph_error("edge " + std::to_string(i) + ": endpoint out of range");
      }
      if (e.u == e.v) throw graph_error("edge " + std::to_string(i) + ": self-loop");
      if (e.cost.is_finite() && e.cost.value().is_zero()) {
        throw graph_error("edge " + std::to_string(i) + ": cost must be positive");
      }
    }
  }

  std::size_t n_vertices() const { return n_; }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  /// Copy with extra edges appended (existing indices unchanged).
  Graph with_edges(const std::vector<Edge>& extra) const {
    std::vector<Edge> all = edges_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(n_, std::move(all));
  }

  /// Distinct edge weights, ascending.
  std::vector<Quantity> distinct_weights() const {
    std::vector<Quantity> ws;
    ws.reserve(edges_.size());
    for (const Edge& e : edges_) ws.push_back(e.weight);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
  }

  /// Smallest distinct weight strictly above `w`, or infinity.
  Extended next_weight_above(Quantity w) const {
    Extended best = Extended::infinity();
    for (const Edge& e : edges_) {
      if (e.weight > w && Extended(e.weight) < best) best = e.weight;
    }
    return best;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

inline EdgeMask full_mask(const Graph& g) { return EdgeMask(g.n_edges(), 1); }

inline EdgeMask mask_without(const Graph& g, const EdgeSet& removed) {
  EdgeMask m = full_mask(g);
  for (EdgeId id : removed) m.at(id) = 0;
  return m;
}

inline EdgeSet normalize(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains(const EdgeSet& s, EdgeId id) { return std::binary_search(s.begin(), s.end(), id); }

/// Sum of removal costs; infinity if any member is unremovable.
inline Extended cost_of(const Graph& g, const EdgeSet& s) {
  Extended total = Quantity::zero();
  for (EdgeId id : s) total += g.edge(id).cost;
  return total;
}

/// Sum of the finite removal costs of all edges.
inline Quantity total_finite_cost(const Graph& g) {
  Quantity total;
  for (const Edge& e : g.edges()) {
    if (e.cost.is_finite()) total += e.cost.value();
  }
  return total;
}

/// Membership flags for a vertex set.
inline std::vector<char> vertex_flags(std::size_t n, const VertexSet& side) {
  std::vector<char> in(n, 0);
  for (Vertex v : side) in.at(v) = 1;
  return in;
}

inline bool crosses(const Edge& e, const std::vector<char>& in_side) { return in_side[e.u] != in_side[e.v]; }

/// Whether every vertex is reachable using only edges present in `alive`.
inline bool is_connected(const Graph& g, const EdgeMask& alive) {
  if (g.n_vertices() <= 1) return true;
  UnionFind uf(g.n_vertices());
  for (EdgeId i = 0; i < g.n_edges(); ++i) {
    if (alive[i]) uf.unite(g.edge(i).u, g.edge(i).v);
  }
  return uf.set_count() == 1;
}

}  // namespace mstint

#endif  // MSTINT_GRAPH_HPP
