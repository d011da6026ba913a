#ifndef MSTINT_BUDGET_HPP
#define MSTINT_BUDGET_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "mstint/flow.hpp"
#include "mstint/graph.hpp"
#include "mstint/greedy_scan.hpp"
#include "mstint/mst.hpp"
#include "mstint/solution.hpp"

namespace mstint {

/// Output of one greedy run at a fixed budget guess. `edges` is empty when
/// the target was not reached.
struct GreedyResult {
  EdgeSet edges;
  std::vector<PartialCutSpec> cuts;
  GreedyTrace trace;
};

namespace detail {

template <class Scan>
GreedyResult greedy_with(const Graph& g, Quantity budget, Quantity delta, const Scan& scan) {
  const std::size_t n = g.n_vertices();
  GreedyRun run = run_greedy(
      g, scan, [&](Quantity, Quantity c) { return c > Quantity::zero() && c <= budget; },
      [&](Quantity b, Extended p) { return !(below_relaxed_budget(b, budget, n) && p < Extended(delta)); });

  GreedyResult out;
  out.trace.budget_guess = budget;
  out.trace.rounds = std::move(run.rounds);
  if (run.profit >= Extended(delta)) {
    out.trace.outcome = GreedyOutcome::reached_delta;
    out.edges = std::move(run.edges);
    out.cuts = std::move(run.cuts);
  } else if (run.stalled) {
    out.trace.outcome = GreedyOutcome::no_progress;
  } else {
    out.trace.outcome = GreedyOutcome::budget_exhausted;
  }
  return out;
}

inline void check_budget_input(const Graph& g, Quantity delta) {
  if (delta.is_zero()) throw std::invalid_argument("delta must be positive");
  if (g.n_vertices() < 2) throw std::invalid_argument("need at least 2 vertices");
  if (!is_connected(g, full_mask(g))) throw graph_error("graph is disconnected");
}

}  // namespace detail

/// One run of the ratio greedy with budget guess `budget`: each round removes
/// the partial cut of best (W - w(e)) / c(C) with 0 < c(C) <= budget, until
/// the profit reaches delta, the spend reaches (1 + 2 log2 n) * budget, or no
/// cut has positive ratio.
inline GreedyResult greedy(const Graph& g, Quantity budget, Quantity delta, const std::vector<Quantity>& weights) {
  return detail::greedy_with(g, budget, delta, detail::FreshScan{g, weights});
}

/// Range [b*, m * b*] for the budget search, where b* is the smallest edge
/// cost b such that dropping every edge of cost <= b gains at least delta.
inline std::pair<Quantity, Quantity> reduce_budget_range(const Graph& g, Quantity delta) {
  detail::check_budget_input(g, delta);
  std::vector<Quantity> costs;
  for (const Edge& e : g.edges()) {
    if (e.cost.is_finite()) costs.push_back(e.cost.value());
  }
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
  for (Quantity b : costs) {
    EdgeSet cheap;
    for (EdgeId id = 0; id < g.n_edges(); ++id) {
      if (g.edge(id).cost <= Extended(b)) cheap.push_back(id);
    }
    if (profit(g, cheap) >= Extended(delta)) {
      return {b, b * static_cast<std::int64_t>(g.n_edges())};
    }
  }
  throw infeasible_error("reduce_budget_range: delta is unreachable even removing every removable edge");
}

struct BudgetOptions {
  bool fast = false;          // compute the (edge, W) cuts once, re-score afterwards
  bool reduce_range = false;  // search [b*, m b*] instead of [min c(e), c(E)]
};

/// Doubling search over budget guesses, compared with removing a global min
/// cut. Returns the cheaper of the two (higher profit on equal cost).
inline InterdictionSolution budget_approximate(const Graph& g, Quantity delta, BudgetOptions opt = {}) {
  detail::check_budget_input(g, delta);
  const std::vector<Quantity> weights = g.distinct_weights();

  Quantity lower;
  Quantity upper;
  bool have_range = false;
  if (opt.reduce_range) {
    try {
      std::tie(lower, upper) = reduce_budget_range(g, delta);
      have_range = true;
    } catch (const infeasible_error&) {
    }
  } else {
    bool first = true;
    for (const Edge& e : g.edges()) {
      if (e.cost.is_infinite()) continue;
      if (first || e.cost.value() < lower) lower = e.cost.value();
      first = false;
    }
    upper = total_finite_cost(g);
    have_range = !first;
  }

  MinCutCounter counter;
  std::optional<GreedyResult> found;
  if (have_range) {
    std::optional<detail::CachedScan> cached;
    if (opt.fast) cached.emplace(g, weights);
    for (Quantity budget = lower;; budget = budget * 2) {
      GreedyResult r = opt.fast ? detail::greedy_with(g, budget, delta, *cached)
                                : greedy(g, budget, delta, weights);
      const bool ok = !r.edges.empty();
      if (ok || budget >= upper) {
        found = std::move(r);
        break;
      }
    }
  }
  const std::uint64_t calls = counter.count();

  std::optional<InterdictionSolution> best;
  if (found && !found->edges.empty()) {
    best = make_solution(g, found->edges, found->cuts);
    best->trace = found->trace;
  }
  CutResult gmc = global_min_cut(g);
  const bool gmc_wins = gmc.cost.is_finite() &&
                        (!best || gmc.cost < Extended(best->cost) ||
                         (gmc.cost == Extended(best->cost) && best->profit.is_finite()));
  if (gmc_wins) {
    std::vector<PartialCutSpec> cuts{PartialCutSpec{gmc.side, Extended::infinity(), gmc.edges}};
    InterdictionSolution s = make_solution(g, gmc.edges, std::move(cuts));
    if (found) s.trace = found->trace;
    best = std::move(s);
  }
  if (!best) throw infeasible_error("budget_approximate: no removable set reaches delta");
  best->min_cut_calls = calls;
  return *best;
}

/// Same contract with the cut table computed once (d * m min-cut calls).
inline InterdictionSolution budget_approximate_fast(const Graph& g, Quantity delta, bool reduce_range = false) {
  return budget_approximate(g, delta, BudgetOptions{true, reduce_range});
}

}  // namespace mstint

#endif  // MSTINT_BUDGET_HPP
