#ifndef MSTINT_SOLUTION_HPP
#define MSTINT_SOLUTION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mstint/graph.hpp"
#include "mstint/mst.hpp"

namespace mstint {

/// No removal set satisfies the request (e.g. every useful cut is unremovable).
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GreedyOutcome { reached_delta, budget_exhausted, no_progress };

inline const char* to_string(GreedyOutcome o) {
  switch (o) {
    case GreedyOutcome::reached_delta: return "reached_delta";
    case GreedyOutcome::budget_exhausted: return "budget_exhausted";
    case GreedyOutcome::no_progress: return "no_progress";
  }
  return "?";
}

/// One greedy pick: the cut, the edge/threshold pair that scored it, its
/// claimed ratio (W - w(e)) / c(C), and running totals after removing it.
struct GreedyRound {
  PartialCutSpec cut;
  EdgeId defining_edge = 0;
  Quantity gain;       // W - w(e), the numerator of the claimed ratio
  Quantity cut_cost;   // c(C), the denominator
  Quantity cumulative_cost;
  Extended cumulative_profit;
};

struct GreedyTrace {
  std::vector<GreedyRound> rounds;
  Quantity budget_guess;
  GreedyOutcome outcome = GreedyOutcome::no_progress;
};

/// A removal set with its exact cost and independently recomputed profit.
struct InterdictionSolution {
  EdgeSet edges;
  Quantity cost;
  Extended profit;
  std::vector<PartialCutSpec> cuts;   // the cuts whose union is `edges`
  std::optional<GreedyTrace> trace;   // last greedy run, when one produced the result
  std::uint64_t min_cut_calls = 0;
};

/// Builds a solution on connected `g`, recomputing cost and profit from scratch.
inline InterdictionSolution make_solution(const Graph& g, EdgeSet edges, std::vector<PartialCutSpec> cuts = {}) {
  InterdictionSolution s;
  s.edges = normalize(std::move(edges));
  const Extended c = cost_of(g, s.edges);
  if (c.is_infinite()) throw std::invalid_argument("solution removes an unremovable edge");
  s.cost = c.value();
  s.profit = profit(g, s.edges);
  s.cuts = std::move(cuts);
  return s;
}

inline nlohmann::json cut_to_json(const PartialCutSpec& c) {
  return nlohmann::json{{"side_vertices", c.side}, {"threshold", to_string(c.threshold)}, {"edge_indices", c.edges}};
}

/// Flat record: edges, cost, profit ("inf" on disconnection), cuts, and the
/// greedy trace when present. Quantities are exact decimal strings.
inline nlohmann::json solution_to_json(const InterdictionSolution& s) {
  nlohmann::json j;
  j["edges"] = s.edges;
  j["cost"] = to_string(s.cost);
  j["profit"] = to_string(s.profit);
  nlohmann::json cuts = nlohmann::json::array();
  for (const auto& c : s.cuts) cuts.push_back(cut_to_json(c));
  j["cuts"] = std::move(cuts);
  if (s.trace) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const GreedyRound& r : s.trace->rounds) {
      nlohmann::json row = cut_to_json(r.cut);
      row["defining_edge"] = r.defining_edge;
      row["gain"] = to_string(r.gain);
      row["cut_cost"] = to_string(r.cut_cost);
      row["cumulative_cost"] = to_string(r.cumulative_cost);
      row["cumulative_profit"] = to_string(r.cumulative_profit);
      rounds.push_back(std::move(row));
    }
    j["trace"] = {{"budget_guess", to_string(s.trace->budget_guess)},
                  {"outcome", to_string(s.trace->outcome)},
                  {"rounds", std::move(rounds)}};
  }
  j["min_cut_calls"] = s.min_cut_calls;
  return j;
}

inline std::string serialize_solution(const InterdictionSolution& s) { return solution_to_json(s).dump(); }

}  // namespace mstint

#endif  // MSTINT_SOLUTION_HPP
