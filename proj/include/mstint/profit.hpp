#ifndef MSTINT_PROFIT_HPP
#define MSTINT_PROFIT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mstint/flow.hpp"
#include "mstint/graph.hpp"
#include "mstint/greedy_scan.hpp"
#include "mstint/mst.hpp"
#include "mstint/solution.hpp"

namespace mstint {

/// The most profitable single (edge, W) cut of g that fits the budget.
struct SingleCut {
  std::optional<PartialCutSpec> cut;  // empty when nothing qualifies
  Extended profit = Quantity::zero();
};

/// Scans every (edge, W) min cut of g and keeps the one with the largest true
/// profit among those of cost <= budget; the first one found wins ties.
inline SingleCut best_single_cut(const Graph& g, Quantity budget) {
  const std::vector<Quantity> weights = g.distinct_weights();
  const EdgeMask all = full_mask(g);
  std::map<EdgeSet, Extended> seen;
  SingleCut best;
  for (EdgeId id = 0; id < g.n_edges(); ++id) {
    for (Quantity w : weights) {
      detail::ScanCut c = detail::scan_entry(g, all, id, w);
      if (!(c.cost <= Extended(budget)) || c.edges.empty()) continue;
      auto it = seen.find(c.edges);
      if (it == seen.end()) it = seen.emplace(c.edges, profit(g, c.edges)).first;
      if (it->second > best.profit) {
        best.profit = it->second;
        best.cut = PartialCutSpec{std::move(c.side), w, std::move(c.edges)};
      }
    }
  }
  return best;
}

/// Hard-budget greedy: take best-ratio cuts while they still fit in the
/// budget, then return the better of that set and the best single cut.
inline InterdictionSolution profit_approximate(const Graph& g, Quantity budget) {
  if (budget.is_zero()) throw std::invalid_argument("budget must be positive");
  if (g.n_vertices() < 2) throw std::invalid_argument("need at least 2 vertices");
  if (!is_connected(g, full_mask(g))) throw graph_error("graph is disconnected");

  MinCutCounter counter;
  const SingleCut single = best_single_cut(g, budget);

  const std::vector<Quantity> weights = g.distinct_weights();
  detail::GreedyRun run = detail::run_greedy(
      g, detail::FreshScan{g, weights},
      [&](Quantity b, Quantity c) { return c > Quantity::zero() && b + c <= budget; },
      [](Quantity, Extended) { return false; });

  GreedyTrace trace;
  trace.budget_guess = budget;
  trace.rounds = std::move(run.rounds);
  trace.outcome = GreedyOutcome::no_progress;

  InterdictionSolution sol;
  if (single.profit >= run.profit) {
    if (single.cut) {
      sol = make_solution(g, single.cut->edges, {*single.cut});
    } else {
      sol = make_solution(g, {});
    }
  } else {
    sol = make_solution(g, run.edges, run.cuts);
  }
  sol.trace = std::move(trace);
  sol.min_cut_calls = counter.count();
  return sol;
}

}  // namespace mstint

#endif  // MSTINT_PROFIT_HPP
