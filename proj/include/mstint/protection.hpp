#ifndef MSTINT_PROTECTION_HPP
#define MSTINT_PROTECTION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstint/eps_increase.hpp"
#include "mstint/flow.hpp"
#include "mstint/graph.hpp"
#include "mstint/instance_io.hpp"
#include "mstint/mst.hpp"
#include "mstint/solution.hpp"

namespace mstint {

/// Base graph plus buildable edges. Construction checks that no single
/// candidate lowers the MST weight.
struct ProtectionInstance {
  Graph base;
  std::vector<Candidate> candidates;

  ProtectionInstance(Graph g, std::vector<Candidate> cands) : base(std::move(g)), candidates(std::move(cands)) {
    const Extended before = mst(base).weight;
    if (before.is_infinite()) throw graph_error("protection: base graph is disconnected");
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Graph plus = base.with_edges({candidates[i].as_edge()});
      if (mst(plus).weight != before) {
        throw std::invalid_argument("protection: candidate " + std::to_string(i) + " lowers the MST weight");
      }
    }
  }

  explicit ProtectionInstance(const Instance& inst) : ProtectionInstance(inst.graph, inst.candidates) {}

  Graph augmented(const std::vector<std::size_t>& chosen) const {
    std::vector<Edge> extra;
    for (std::size_t i : chosen) extra.push_back(candidates.at(i).as_edge());
    return base.with_edges(extra);
  }
};

struct OptimalCuts {
  std::vector<PartialCutSpec> cuts;
  Quantity cost;          // optimal eps-increase cost
  bool complete = true;   // false if some enumeration hit its cap
};

/// Every minimum-cost cut the eps-increase search sees, over all tree edges,
/// that matches the optimal cost. Deduplicated by edge set, in discovery order.
/// Thresholds are the next weight above w(e) among g's edges and
/// `extra_weights`; g has no edge strictly between, so edge sets are unchanged.
inline OptimalCuts list_optimal_cuts(const Graph& g, const std::vector<Quantity>& extra_weights = {}) {
  OptimalCuts out;
  out.cost = eps_increase(g).cost;
  const std::size_t n = g.n_vertices();
  const std::size_t cap = 4 * n * n;
  std::map<EdgeSet, bool> seen;
  for (EdgeId e : mst(g).edges) {
    TreeEdgeNetwork net = tree_edge_network(g, e);
    for (Quantity w : extra_weights) {
      if (w > g.edge(e).weight && Extended(w) < net.threshold) net.threshold = w;
    }
    auto [cuts, truncated] = detail::enumerate_min_cuts_links(net.n_nodes, net.links, net.source, net.sink, cap);
    if (truncated) out.complete = false;
    for (const detail::NodeCut& c : cuts) {
      if (c.cost != Extended(out.cost)) continue;
      if (!seen.emplace(c.edges, true).second) continue;
      out.cuts.push_back(lift_cut(g, net, c.in_source));
    }
  }
  return out;
}

/// Candidate e' raises the cost of C(S, W) iff it crosses S and w(e') < W.
inline bool covers(const Candidate& cand, const PartialCutSpec& cut, std::size_t n) {
  const auto in = vertex_flags(n, cut.side);
  return in[cand.u] != in[cand.v] && Extended(cand.weight) < cut.threshold;
}

/// coverage[i] = indices of cuts candidate i covers.
inline std::vector<std::vector<std::size_t>> coverage_sets(const ProtectionInstance& inst,
                                                           const std::vector<PartialCutSpec>& cuts) {
  std::vector<std::vector<std::size_t>> cov(inst.candidates.size());
  for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      if (covers(inst.candidates[i], cuts[k], inst.base.n_vertices())) cov[i].push_back(k);
    }
  }
  return cov;
}

struct ProtectionResult {
  std::vector<std::size_t> chosen;   // candidate indices, in pick order
  Quantity build_cost;
  std::vector<PartialCutSpec> cuts;  // the universe that was covered
  bool complete = true;
  Quantity cost_before;
  Extended cost_after;               // infinite if no finite increase remains
};

/// Greedy weighted set cover of the optimal cuts by candidate edges.
inline ProtectionResult protect(const ProtectionInstance& inst) {
  ProtectionResult res;
  std::vector<Quantity> extra;
  for (const Candidate& c : inst.candidates) extra.push_back(c.weight);
  OptimalCuts listed = list_optimal_cuts(inst.base, extra);
  res.cost_before = listed.cost;
  res.complete = listed.complete;
  res.cuts = std::move(listed.cuts);

  const auto cov = coverage_sets(inst, res.cuts);
  std::vector<char> covered(res.cuts.size(), 0);
  for (std::size_t k = 0; k < res.cuts.size(); ++k) {
    bool any = false;
    for (const auto& c : cov) any = any || std::find(c.begin(), c.end(), k) != c.end();
    if (!any) {
      std::string edges;
      for (EdgeId id : res.cuts[k].edges) edges += (edges.empty() ? "" : ",") + std::to_string(id);
      throw infeasible_error("protect: no candidate covers the cut with edges {" + edges + "}");
    }
  }

  std::size_t left = res.cuts.size();
  std::vector<char> used(inst.candidates.size(), 0);
  while (left > 0) {
    std::optional<std::size_t> pick;
    std::int64_t pick_new = 0;
    for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
      if (used[i]) continue;
      std::int64_t fresh = 0;
      for (std::size_t k : cov[i]) fresh += covered[k] ? 0 : 1;
      if (fresh == 0) continue;
      // b_i / fresh < b_pick / pick_new
      if (!pick || compare_ratio(inst.candidates[i].build_cost.units(), fresh,
                                 inst.candidates[*pick].build_cost.units(), pick_new) < 0) {
        pick = i;
        pick_new = fresh;
      }
    }
    used[*pick] = 1;
    res.chosen.push_back(*pick);
    res.build_cost += inst.candidates[*pick].build_cost;
    for (std::size_t k : cov[*pick]) {
      if (!covered[k]) {
        covered[k] = 1;
        --left;
      }
    }
  }

  try {
    res.cost_after = eps_increase(inst.augmented(res.chosen)).cost;
  } catch (const infeasible_error&) {
    res.cost_after = Extended::infinity();
  }
  return res;
}

}  // namespace mstint

#endif  // MSTINT_PROTECTION_HPP
