#ifndef MSTINT_GREEDY_SCAN_HPP
#define MSTINT_GREEDY_SCAN_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "mstint/flow.hpp"
#include "mstint/graph.hpp"
#include "mstint/mst.hpp"
#include "mstint/solution.hpp"

// Ratio-greedy machinery shared by the budget and profit approximations.

namespace mstint::detail {

/// One (edge, W) entry of a scan: the min cut between the endpoints of `edge`
/// among surviving edges lighter than `threshold`.
struct ScanCut {
  EdgeId edge = 0;
  Quantity threshold;
  VertexSet side;
  EdgeSet edges;
  Extended cost;
  std::int64_t gain = 0;  // W - w(edge) in units, may be negative
};

/// Higher (W - w(e)) / c(C) first; then cheaper cut; then lower edge index,
/// then lower W.
inline bool better_scan(const ScanCut& a, const ScanCut& b) {
  const auto ord = compare_ratio(a.gain, a.cost.value().units(), b.gain, b.cost.value().units());
  if (ord != 0) return ord > 0;
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.edge != b.edge) return a.edge < b.edge;
  return a.threshold < b.threshold;
}

inline ScanCut scan_entry(const Graph& g, const EdgeMask& alive, EdgeId id, Quantity w) {
  const Edge& e = g.edge(id);
  CutResult c = min_st_cut(g, e.u, e.v, [&](EdgeId x) { return alive[x] && g.edge(x).weight < w; });
  ScanCut s;
  s.edge = id;
  s.threshold = w;
  s.side = std::move(c.side);
  s.edges = std::move(c.edges);
  s.cost = c.cost;
  s.gain = w.units() - e.weight.units();
  return s;
}

/// Recomputes every (edge, W) cut in the current graph: d * |E'| min-cut calls.
struct FreshScan {
  const Graph& g;
  const std::vector<Quantity>& weights;

  template <class Visit>
  void operator()(const EdgeMask& alive, Visit&& visit) const {
    for (EdgeId id = 0; id < g.n_edges(); ++id) {
      if (!alive[id]) continue;
      for (Quantity w : weights) visit(scan_entry(g, alive, id, w));
    }
  }
};

/// Cuts computed once on the original graph and re-scored as C ∩ E'. Entries
/// whose defining edge is gone are skipped.
struct CachedScan {
  const Graph& g;
  std::vector<ScanCut> table;

  CachedScan(const Graph& graph, const std::vector<Quantity>& weights) : g(graph) {
    const EdgeMask all = full_mask(g);
    table.reserve(g.n_edges() * weights.size());
    for (EdgeId id = 0; id < g.n_edges(); ++id) {
      for (Quantity w : weights) table.push_back(scan_entry(g, all, id, w));
    }
  }

  template <class Visit>
  void operator()(const EdgeMask& alive, Visit&& visit) const {
    for (const ScanCut& c : table) {
      if (!alive[c.edge]) continue;
      ScanCut r;
      r.edge = c.edge;
      r.threshold = c.threshold;
      r.side = c.side;
      r.gain = c.gain;
      r.cost = Quantity::zero();
      for (EdgeId x : c.edges) {
        if (!alive[x]) continue;
        r.edges.push_back(x);
        r.cost += g.edge(x).cost;
      }
      visit(std::move(r));
    }
  }
};

struct GreedyRun {
  EdgeSet edges;
  Quantity cost;
  Extended profit = Quantity::zero();
  std::vector<PartialCutSpec> cuts;
  std::vector<GreedyRound> rounds;
  bool stalled = false;  // last round found no admissible cut with positive ratio
};

/// Repeatedly removes the best-ratio admissible cut. `admit(b, c)` filters by
/// running cost b and cut cost c; `done(b, profit)` ends the loop after a round.
template <class Scan, class Admit, class Done>
GreedyRun run_greedy(const Graph& g, const Scan& scan, Admit&& admit, Done&& done) {
  GreedyRun run;
  EdgeMask alive = full_mask(g);
  for (;;) {
    std::optional<ScanCut> best;
    scan(alive, [&](ScanCut&& c) {
      if (c.gain <= 0 || c.cost.is_infinite()) return;
      if (!admit(run.cost, c.cost.value())) return;
      if (!best || better_scan(c, *best)) best = std::move(c);
    });
    if (!best) {
      run.stalled = true;
      break;
    }
    for (EdgeId x : best->edges) alive[x] = 0;
    run.edges = set_union(run.edges, best->edges);
    run.cost += best->cost.value();
    run.profit = profit(g, run.edges);

    GreedyRound round;
    round.cut = PartialCutSpec{best->side, best->threshold, best->edges};
    round.defining_edge = best->edge;
    round.gain = Quantity::from_units(best->gain);
    round.cut_cost = best->cost.value();
    round.cumulative_cost = run.cost;
    round.cumulative_profit = run.profit;
    run.cuts.push_back(round.cut);
    run.rounds.push_back(std::move(round));
    if (done(run.cost, run.profit)) break;
  }
  return run;
}

/// log2(n) * 2^20 rounded up to an integer.
inline std::int64_t log2_upper_fixed(std::size_t n) {
  constexpr std::int64_t one = std::int64_t{1} << 20;
  if (n <= 1) return 0;
  if ((n & (n - 1)) == 0) {
    std::int64_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k * one;
  }
  return static_cast<std::int64_t>(std::floor(std::log2(static_cast<long double>(n)) * one)) + 1;
}

/// b < (1 + 2 log2 n) * budget, with log2 n replaced by its 2^-20 upper bound.
inline bool below_relaxed_budget(Quantity b, Quantity budget, std::size_t n) {
  constexpr __int128 one = __int128{1} << 20;
  const __int128 lhs = static_cast<__int128>(b.units()) * one;
  const __int128 rhs = (one + 2 * static_cast<__int128>(log2_upper_fixed(n))) * budget.units();
  return lhs < rhs;
}

}  // namespace mstint::detail

#endif  // MSTINT_GREEDY_SCAN_HPP
