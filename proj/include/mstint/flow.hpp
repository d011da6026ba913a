#ifndef MSTINT_FLOW_HPP
#define MSTINT_FLOW_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "mstint/graph.hpp"

namespace mstint {

/// A complete cut with respect to edge removal costs.
struct CutResult {
  VertexSet side;      // contains the source
  EdgeSet edges;       // participating edges with exactly one endpoint in `side`
  Extended cost;       // sum of their costs
  Extended flow_value; // max-flow value the cut was derived from
};

namespace stats {
/// Number of s-t minimum cut computations made by this thread.
inline thread_local std::uint64_t min_cut_calls = 0;
}  // namespace stats

/// Counts min-cut computations made on this thread during its lifetime.
class MinCutCounter {
 public:
  MinCutCounter() : start_(stats::min_cut_calls) {}
  std::uint64_t count() const { return stats::min_cut_calls - start_; }

 private:
  std::uint64_t start_;
};

/// Dinic max-flow over an undirected capacitated network. Each undirected link
/// becomes a pair of opposite arcs sharing one residual budget.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adj_(n) {}

  std::size_t size() const { return adj_.size(); }

  void add_undirected(std::size_t a, std::size_t b, std::int64_t capacity) {
    adj_[a].push_back(arcs_.size());
    arcs_.push_back({b, capacity});
    adj_[b].push_back(arcs_.size());
    arcs_.push_back({a, capacity});
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (build_levels(s, t)) {
      next_.assign(adj_.size(), 0);
      while (std::int64_t pushed = augment(s, t, std::numeric_limits<std::int64_t>::max())) {
        if (__builtin_add_overflow(total, pushed, &total)) throw std::overflow_error("flow overflow");
      }
    }
    return total;
  }

  /// Residual capacity of arc `index` (arcs 2k and 2k+1 belong to link k).
  std::int64_t residual(std::size_t index) const { return arcs_[index].cap; }

  /// Vertices reachable from `s` through arcs with positive residual capacity.
  std::vector<char> residual_reachable(std::size_t s) const { return closure(s, true); }

  /// Vertices that reach `t` through arcs with positive residual capacity.
  std::vector<char> residual_coreachable(std::size_t t) const { return closure(t, false); }

  /// Forward (or backward) residual closure from `start`, restricted to
  /// vertices whose `state` equals `open`; marks visited vertices with `mark`.
  void propagate(std::size_t start, bool forward, std::vector<char>& state, char open, char mark) const {
    std::vector<std::size_t> stack{start};
    state[start] = mark;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t a : adj_[x]) {
        const std::size_t y = arcs_[a].to;
        // forward: x -> y has residual; backward: y -> x (arc a^1) has residual.
        const std::int64_t r = forward ? arcs_[a].cap : arcs_[a ^ 1].cap;
        if (r > 0 && state[y] == open) {
          state[y] = mark;
          stack.push_back(y);
        }
      }
    }
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool build_levels(std::size_t s, std::size_t t) {
    level_.assign(adj_.size(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t a : adj_[x]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t augment(std::size_t x, std::size_t t, std::int64_t limit) {
    if (x == t) return limit;
    for (std::size_t& i = next_[x]; i < adj_[x].size(); ++i) {
      const std::size_t a = adj_[x][i];
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[x] + 1) continue;
      const std::int64_t got = augment(arc.to, t, std::min(limit, arc.cap));
      if (got > 0) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<char> closure(std::size_t start, bool forward) const {
    std::vector<char> state(adj_.size(), 0);
    propagate(start, forward, state, 0, 1);
    return state;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

namespace detail {

/// An undirected link between two nodes of a (possibly contracted) network,
/// carrying the identity and cost of the graph edge it stands for.
struct Link {
  std::size_t a;
  std::size_t b;
  EdgeId id;
  Extended cost;
};

struct NodeCut {
  std::vector<char> in_source;  // per node
  EdgeSet edges;
  Extended cost;
  Extended flow_value;
};

/// Capacity used for unremovable links: strictly more than any finite cut.
inline std::int64_t infinite_capacity(const std::vector<Link>& links) {
  Quantity finite;
  for (const Link& l : links) {
    if (l.cost.is_finite()) finite += l.cost.value();
  }
  const std::int64_t big = (finite + Quantity::from_units(1)).units();
  // every cut must stay representable even if all links are unremovable
  std::int64_t probe = 0;
  if (__builtin_mul_overflow(big, static_cast<std::int64_t>(links.size() + 1), &probe)) {
    throw std::overflow_error("cut capacities overflow");
  }
  return big;
}

inline FlowNetwork build_network(std::size_t n_nodes, const std::vector<Link>& links, std::int64_t big) {
  FlowNetwork net(n_nodes);
  for (const Link& l : links) net.add_undirected(l.a, l.b, l.cost.is_infinite() ? big : l.cost.value().units());
  return net;
}

inline NodeCut realize(const std::vector<Link>& links, std::vector<char> in_source) {
  NodeCut cut;
  cut.cost = Quantity::zero();
  for (const Link& l : links) {
    if (in_source[l.a] != in_source[l.b]) {
      cut.edges.push_back(l.id);
      cut.cost += l.cost;
    }
  }
  cut.edges = normalize(std::move(cut.edges));
  cut.in_source = std::move(in_source);
  return cut;
}

inline Extended as_extended(std::int64_t flow, std::int64_t big) {
  if (flow >= big) return Extended::infinity();
  return Quantity::from_units(flow);
}

/// Source-side-minimal minimum s-t cut on a link network.
inline NodeCut min_cut_links(std::size_t n_nodes, const std::vector<Link>& links, std::size_t s, std::size_t t) {
  if (s == t) throw std::invalid_argument("min cut: source equals sink");
  ++stats::min_cut_calls;
  const std::int64_t big = infinite_capacity(links);
  FlowNetwork net = build_network(n_nodes, links, big);
  const std::int64_t flow = net.max_flow(s, t);
  NodeCut cut = realize(links, net.residual_reachable(s));

  // strong duality: the residual cut's capacity equals the flow value
  std::int64_t capacity = 0;
  for (const Link& l : links) {
    if (cut.in_source[l.a] != cut.in_source[l.b]) {
      capacity += l.cost.is_infinite() ? big : l.cost.value().units();
    }
  }
  if (capacity != flow) throw std::logic_error("min cut: flow value differs from cut capacity");
  cut.flow_value = as_extended(flow, big);
  if (cut.flow_value != cut.cost) throw std::logic_error("min cut: flow value differs from cut cost");
  return cut;
}

/// All minimum s-t cuts, as closed sets of the residual network, up to `cap`.
/// Nodes outside the source's connected component stay on the sink side so
/// that distinct results have distinct edge sets.
inline std::pair<std::vector<NodeCut>, bool> enumerate_min_cuts_links(std::size_t n_nodes,
                                                                      const std::vector<Link>& links,
                                                                      std::size_t s, std::size_t t,
                                                                      std::size_t cap) {
  if (s == t) throw std::invalid_argument("min cut: source equals sink");
  if (cap == 0) throw std::invalid_argument("enumeration cap must be at least 1");
  ++stats::min_cut_calls;
  const std::int64_t big = infinite_capacity(links);
  FlowNetwork net = build_network(n_nodes, links, big);
  const std::int64_t flow = net.max_flow(s, t);

  // connected component of s in the undirected link graph
  UnionFind uf(n_nodes);
  for (const Link& l : links) uf.unite(l.a, l.b);

  std::vector<NodeCut> out;
  if (!uf.same(s, t)) {
    std::vector<char> side(n_nodes, 0);
    for (std::size_t x = 0; x < n_nodes; ++x) side[x] = uf.same(x, s) ? 1 : 0;
    NodeCut only = realize(links, std::move(side));
    only.flow_value = as_extended(flow, big);
    out.push_back(std::move(only));
    return {std::move(out), false};
  }

  // state: 0 undecided, 1 source side, 2 sink side, 3 outside the component
  constexpr char kOpen = 0;
  constexpr char kIn = 1;
  constexpr char kOut = 2;
  constexpr char kOutside = 3;
  std::vector<char> state(n_nodes, kOpen);
  for (std::size_t x = 0; x < n_nodes; ++x) {
    if (!uf.same(x, s)) state[x] = kOutside;
  }
  net.propagate(s, true, state, kOpen, kIn);
  net.propagate(t, false, state, kOpen, kOut);

  bool truncated = false;
  const Extended flow_value = as_extended(flow, big);
  // Depth-first branching: every leaf is a distinct closed set, and no branch
  // dead-ends because closures of undecided nodes never meet a decided node
  // of the opposite side.
  auto recurse = [&](auto&& self, std::vector<char> st) -> void {
    if (truncated) return;
    const auto it = std::find(st.begin(), st.end(), kOpen);
    if (it == st.end()) {
      if (out.size() == cap) {
        truncated = true;
        return;
      }
      std::vector<char> side(n_nodes, 0);
      for (std::size_t x = 0; x < n_nodes; ++x) side[x] = st[x] == kIn ? 1 : 0;
      NodeCut c = realize(links, std::move(side));
      c.flow_value = flow_value;
      out.push_back(std::move(c));
      return;
    }
    const std::size_t pivot = static_cast<std::size_t>(it - st.begin());
    std::vector<char> with = st;
    net.propagate(pivot, true, with, kOpen, kIn);
    self(self, std::move(with));
    net.propagate(pivot, false, st, kOpen, kOut);
    self(self, std::move(st));
  };
  recurse(recurse, std::move(state));
  return {std::move(out), truncated};
}

template <class Filter>
std::vector<Link> graph_links(const Graph& g, Filter&& keep) {
  std::vector<Link> links;
  for (EdgeId i = 0; i < g.n_edges(); ++i) {
    if (keep(i)) {
      const Edge& e = g.edge(i);
      links.push_back({e.u, e.v, i, e.cost});
    }
  }
  return links;
}

inline CutResult to_cut_result(NodeCut&& nc) {
  CutResult r;
  for (std::size_t v = 0; v < nc.in_source.size(); ++v) {
    if (nc.in_source[v]) r.side.push_back(static_cast<Vertex>(v));
  }
  r.edges = std::move(nc.edges);
  r.cost = nc.cost;
  r.flow_value = nc.flow_value;
  return r;
}

}  // namespace detail

/// Predicate selecting which edges participate in a cut computation.
template <class F>
concept EdgeFilter = std::predicate<F, EdgeId>;

inline auto all_edges() {
  return [](EdgeId) { return true; };
}

/// Minimum-cost s-t cut over the edges selected by `filter`. The returned side
/// is the residual reachability set of a maximum flow, i.e. the unique
/// source-side-minimal minimum cut. If s and t are disconnected in the filtered
/// graph the cut is empty with cost 0.
template <EdgeFilter Filter>
CutResult min_st_cut(const Graph& g, Vertex s, Vertex t, Filter&& filter) {
  if (s >= g.n_vertices() || t >= g.n_vertices()) throw std::out_of_range("min_st_cut: vertex out of range");
  const auto links = detail::graph_links(g, filter);
  return detail::to_cut_result(detail::min_cut_links(g.n_vertices(), links, s, t));
}

/// Minimum-cost complete cut over all nonempty proper vertex subsets, taken as
/// the best of min_st_cut(0, t) over t = 1..n-1 (first minimum wins).
inline CutResult global_min_cut(const Graph& g) {
  if (g.n_vertices() < 2) throw std::invalid_argument("global_min_cut: need at least 2 vertices");
  CutResult best;
  bool have = false;
  for (Vertex t = 1; t < g.n_vertices(); ++t) {
    CutResult c = min_st_cut(g, 0, t, all_edges());
    if (!have || c.cost < best.cost) {
      best = std::move(c);
      have = true;
    }
  }
  return best;
}

struct CutEnumeration {
  std::vector<CutResult> cuts;
  bool truncated = false;
};

/// Every minimum-cost s-t cut (distinct edge sets), at most `cap` of them.
template <EdgeFilter Filter>
CutEnumeration enumerate_min_st_cuts(const Graph& g, Vertex s, Vertex t, Filter&& filter, std::size_t cap) {
  if (s >= g.n_vertices() || t >= g.n_vertices()) {
    throw std::out_of_range("enumerate_min_st_cuts: vertex out of range");
  }
  const auto links = detail::graph_links(g, filter);
  auto [cuts, truncated] = detail::enumerate_min_cuts_links(g.n_vertices(), links, s, t, cap);
  CutEnumeration out;
  out.truncated = truncated;
  for (auto& c : cuts) out.cuts.push_back(detail::to_cut_result(std::move(c)));
  return out;
}

}  // namespace mstint

#endif  // MSTINT_FLOW_HPP
