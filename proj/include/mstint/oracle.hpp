#ifndef MSTINT_ORACLE_HPP
#define MSTINT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "mstint/graph.hpp"
#include "mstint/solution.hpp"

// Exhaustive solvers used as ground truth. Deliberately naive: they share no
// code with the algorithms they check beyond the Graph type.

namespace mstint::oracle {

inline constexpr std::size_t kMaxEdges = 22;

/// MST weight by growing a tree from vertex 0 with a binary heap.
inline Extended prim_mst_weight(const Graph& g, const EdgeMask& alive) {
  const std::size_t n = g.n_vertices();
  if (n <= 1) return Quantity::zero();
  std::vector<std::vector<EdgeId>> incident(n);
  for (EdgeId id = 0; id < g.n_edges(); ++id) {
    if (!alive[id]) continue;
    incident[g.edge(id).u].push_back(id);
    incident[g.edge(id).v].push_back(id);
  }
  using Item = std::pair<std::int64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<char> done(n, 0);
  std::size_t reached = 0;
  Quantity total;
  heap.push({0, 0});
  while (!heap.empty()) {
    const auto [w, x] = heap.top();
    heap.pop();
    if (done[x]) continue;
    done[x] = 1;
    ++reached;
    total += Quantity::from_units(w);
    for (EdgeId id : incident[x]) {
      const Edge& e = g.edge(id);
      const Vertex y = e.u == x ? e.v : e.u;
      if (!done[y]) heap.push({e.weight.units(), y});
    }
  }
  if (reached != n) return Extended::infinity();
  return total;
}

namespace detail {

struct Subset {
  EdgeSet edges;
  Quantity cost;
  Extended profit;
};

inline void guard(const Graph& g) {
  if (g.n_edges() > kMaxEdges) {
    throw std::length_error("oracle: instance has more than 22 edges");
  }
}

/// Calls `visit` for every subset of removable edges whose cost passes
/// `affordable`, with its exact profit. Subsets come in increasing bitmask
/// order over the removable edges.
template <class Affordable, class Visit>
void for_each_subset(const Graph& g, Affordable&& affordable, Visit&& visit) {
  guard(g);
  const EdgeMask all = full_mask(g);
  const Extended base = prim_mst_weight(g, all);
  if (base.is_infinite()) throw graph_error("oracle: graph is disconnected");
  std::vector<EdgeId> removable;
  for (EdgeId id = 0; id < g.n_edges(); ++id) {
    if (g.edge(id).cost.is_finite()) removable.push_back(id);
  }
  const std::uint64_t count = std::uint64_t{1} << removable.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Quantity cost;
    for (std::size_t k = 0; k < removable.size(); ++k) {
      if (bits >> k & 1U) cost += g.edge(removable[k]).cost.value();
    }
    if (!affordable(cost)) continue;
    EdgeMask alive = all;
    EdgeSet edges;
    for (std::size_t k = 0; k < removable.size(); ++k) {
      if (bits >> k & 1U) {
        alive[removable[k]] = 0;
        edges.push_back(removable[k]);
      }
    }
    visit(Subset{std::move(edges), cost, increase(prim_mst_weight(g, alive), base.value())});
  }
}

inline bool better_min_cost(const Subset& cand, const std::optional<Subset>& best) {
  if (!best) return true;
  if (cand.cost != best->cost) return cand.cost < best->cost;
  return cand.edges < best->edges;
}

inline InterdictionSolution finish(const Subset& s) {
  InterdictionSolution sol;
  sol.edges = s.edges;
  sol.cost = s.cost;
  sol.profit = s.profit;
  return sol;
}

}  // namespace detail

/// Cheapest F with profit >= delta (lexicographically smallest on ties).
inline InterdictionSolution oracle_budget(const Graph& g, Quantity delta) {
  std::optional<detail::Subset> best;
  detail::for_each_subset(
      g, [&](Quantity c) { return !best || c <= best->cost; },
      [&](detail::Subset s) {
        if (s.profit >= Extended(delta) && detail::better_min_cost(s, best)) best = std::move(s);
      });
  if (!best) throw infeasible_error("oracle_budget: no removable set reaches the target");
  return detail::finish(*best);
}

/// Most profitable F with cost <= budget; infinite profit dominates. Ties go to
/// the cheaper, then lexicographically smaller set. With `finite_only`, sets
/// that disconnect the graph are ignored.
inline InterdictionSolution oracle_profit(const Graph& g, Quantity budget, bool finite_only = false) {
  std::optional<detail::Subset> best;
  detail::for_each_subset(
      g, [&](Quantity c) { return c <= budget; },
      [&](detail::Subset s) {
        if (finite_only && s.profit.is_infinite()) return;
        if (!best || s.profit > best->profit ||
            (s.profit == best->profit && detail::better_min_cost(s, best))) {
          best = std::move(s);
        }
      });
  return detail::finish(*best);  // the empty set is always affordable
}

/// Cheapest F with positive profit.
inline InterdictionSolution oracle_eps(const Graph& g) {
  std::optional<detail::Subset> best;
  detail::for_each_subset(
      g, [&](Quantity c) { return !best || c <= best->cost; },
      [&](detail::Subset s) {
        if (s.profit > Extended(Quantity::zero()) && detail::better_min_cost(s, best)) best = std::move(s);
      });
  if (!best) throw infeasible_error("oracle_eps: no removable set increases the MST");
  return detail::finish(*best);
}

}  // namespace mstint::oracle

#endif  // MSTINT_ORACLE_HPP
