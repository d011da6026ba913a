#ifndef MSTINT_RELAXATION_HPP
#define MSTINT_RELAXATION_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "json.hpp"
#include "mstint/graph.hpp"
#include "mstint/mst.hpp"
#include "mstint/solution.hpp"
#include "mstint/union_find.hpp"

namespace mstint {

/// Components of T \ F (T the fixed MST of g) and the surviving edges of
/// g \ F that run between distinct components.
struct CcGraph {
  std::vector<VertexSet> components;       // ordered by smallest member
  std::vector<std::size_t> component_of;   // vertex -> component index
  EdgeSet edges;

  std::size_t t() const { return components.size(); }
};

/// Laminar sequence of partial cuts built from a removal set F, plus the
/// matching that pairs each cut with a removed tree edge crossing it.
struct RelaxationCertificate {
  CcGraph cc;
  EdgeSet removed_tree_edges;                          // T ∩ F
  std::vector<EdgeId> tree_prime_edges;                // e'_1..e'_{t-1}, non-decreasing weight
  std::vector<std::vector<std::size_t>> small_sides;   // X_i as component indices
  std::vector<PartialCutSpec> cuts;                    // C_i = C_G(X_i, w(e'_i))
  std::vector<std::size_t> small_side_counts;          // final k(A_j)
  std::vector<EdgeId> matching;                        // matching[i] = removed tree edge paired with C_i

  Extended cost_sum;           // sum of c(C_i)
  Extended removal_cost;       // c(F)
  double cost_bound = 0;       // 2 c(F) log2 t, for display
  std::int64_t matched_gain = 0;  // sum of w(e'_i) - w(e_pi(i)), in units
  Extended profit;             // p_G(F)
};

inline CcGraph build_cc_graph(const Graph& g, const EdgeSet& f) {
  const EdgeMask alive = mask_without(g, f);
  if (!is_connected(g, full_mask(g))) throw graph_error("relaxation: graph is disconnected");
  if (!is_connected(g, alive)) throw graph_error("relaxation: removing F disconnects the graph");
  const SpanningForest t = mst(g);
  UnionFind uf(g.n_vertices());
  for (EdgeId id : t.edges) {
    if (alive[id]) uf.unite(g.edge(id).u, g.edge(id).v);
  }
  CcGraph cc;
  cc.component_of = uf.labels();
  cc.components.resize(uf.set_count());
  for (Vertex v = 0; v < g.n_vertices(); ++v) cc.components[cc.component_of[v]].push_back(v);
  for (EdgeId id = 0; id < g.n_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (alive[id] && cc.component_of[e.u] != cc.component_of[e.v]) cc.edges.push_back(id);
  }
  return cc;
}

namespace detail {

/// Kuhn's augmenting-path matching; returns match_of_left (npos if unmatched).
inline std::vector<std::size_t> bipartite_matching(const std::vector<std::vector<std::size_t>>& adj,
                                                   std::size_t n_right) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> left_of(n_right, npos);
  std::vector<std::size_t> right_of(adj.size(), npos);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t l) -> bool {
    for (std::size_t r : adj[l]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (left_of[r] == npos || self(self, left_of[r])) {
        left_of[r] = l;
        right_of[l] = r;
        return true;
      }
    }
    return false;
  };
  for (std::size_t l = 0; l < adj.size(); ++l) {
    seen.assign(n_right, 0);
    augment(augment, l);
  }
  return right_of;
}

inline VertexSet vertices_of(const CcGraph& cc, const std::vector<std::size_t>& comps) {
  VertexSet out;
  for (std::size_t c : comps) out.insert(out.end(), cc.components[c].begin(), cc.components[c].end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact test of  lhs <= 2 * cost * log2(t)  for integers.
inline bool within_log_bound(std::int64_t lhs, std::int64_t cost, std::size_t t) {
  if (t <= 1) return lhs <= 0;
  if ((t & (t - 1)) == 0) {
    const __int128 k = std::countr_zero(t);
    return static_cast<__int128>(lhs) <= 2 * static_cast<__int128>(cost) * k;
  }
  // log2 t is irrational here, so equality cannot occur
  return static_cast<long double>(lhs) <
         2.0L * static_cast<long double>(cost) * std::log2(static_cast<long double>(t));
}

/// Exact test of  count <= 2 * log2(t), i.e. 2^count <= t^2.
inline bool within_two_log(std::size_t count, std::size_t t) {
  if (count >= 127) return false;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(1) << count;
  return lhs <= static_cast<unsigned __int128>(t) * t;
}

}  // namespace detail

/// Builds the cut sequence for (g, F). X_i is the side of e'_i (within the
/// forest of strictly earlier T'_cc edges) whose largest counter is smaller;
/// ties go to the side holding the lower-indexed endpoint component.
inline RelaxationCertificate build_cut_sequence(const Graph& g, const EdgeSet& f_in) {
  const EdgeSet f = normalize(f_in);
  RelaxationCertificate cert;
  cert.cc = build_cc_graph(g, f);
  const CcGraph& cc = cert.cc;
  const std::size_t t = cc.t();

  const SpanningForest tree = mst(g);
  for (EdgeId id : tree.edges) {
    if (contains(f, id)) cert.removed_tree_edges.push_back(id);
  }

  // T'_cc: Kruskal over inter-component edges, (weight, index) order
  {
    UnionFind uf(t);
    for (EdgeId id : kruskal_order(g)) {
      if (!std::binary_search(cc.edges.begin(), cc.edges.end(), id)) continue;
      const Edge& e = g.edge(id);
      if (uf.unite(cc.component_of[e.u], cc.component_of[e.v])) cert.tree_prime_edges.push_back(id);
    }
  }
  if (cert.tree_prime_edges.size() + 1 != t || cert.removed_tree_edges.size() + 1 != t) {
    throw std::logic_error("relaxation: component count mismatch");
  }

  std::vector<std::size_t> counter(t, 0);
  UnionFind prefix(t);  // forest of e'_j for j < i
  for (std::size_t i = 0; i + 1 < t; ++i) {
    const Edge& ep = g.edge(cert.tree_prime_edges[i]);
    std::size_t a = cc.component_of[ep.u];
    std::size_t b = cc.component_of[ep.v];
    if (a > b) std::swap(a, b);
    std::vector<std::size_t> left, right;
    std::size_t k_left = 0, k_right = 0;
    for (std::size_t c = 0; c < t; ++c) {
      if (prefix.same(c, a)) {
        left.push_back(c);
        k_left = std::max(k_left, counter[c]);
      } else if (prefix.same(c, b)) {
        right.push_back(c);
        k_right = std::max(k_right, counter[c]);
      }
    }
    std::vector<std::size_t> chosen = k_left <= k_right ? std::move(left) : std::move(right);
    for (std::size_t c : chosen) ++counter[c];
    cert.cuts.push_back(partial_cut(g, detail::vertices_of(cc, chosen), ep.weight));
    cert.small_sides.push_back(std::move(chosen));
    prefix.unite(a, b);
  }
  cert.small_side_counts = counter;

  // match cuts to removed tree edges that cross them
  std::vector<std::vector<std::size_t>> adj(cert.cuts.size());
  for (std::size_t i = 0; i < cert.cuts.size(); ++i) {
    const auto in = vertex_flags(g.n_vertices(), cert.cuts[i].side);
    for (std::size_t r = 0; r < cert.removed_tree_edges.size(); ++r) {
      if (crosses(g.edge(cert.removed_tree_edges[r]), in)) adj[i].push_back(r);
    }
  }
  const auto match = detail::bipartite_matching(adj, cert.removed_tree_edges.size());
  for (std::size_t i = 0; i < match.size(); ++i) {
    if (match[i] == static_cast<std::size_t>(-1)) throw std::logic_error("relaxation: no perfect matching");
    cert.matching.push_back(cert.removed_tree_edges[match[i]]);
  }

  cert.cost_sum = Quantity::zero();
  for (const auto& c : cert.cuts) cert.cost_sum += cost_of(g, c.edges);
  cert.removal_cost = cost_of(g, f);
  if (t <= 1) {
    cert.cost_bound = 0.0;
  } else if (cert.removal_cost.is_infinite()) {
    cert.cost_bound = HUGE_VAL;
  } else {
    cert.cost_bound = 2.0 * static_cast<double>(cert.removal_cost.value().units()) / Quantity::kScale *
                      std::log2(static_cast<double>(t));
  }
  for (std::size_t i = 0; i < cert.cuts.size(); ++i) {
    cert.matched_gain += g.edge(cert.tree_prime_edges[i]).weight.units() - g.edge(cert.matching[i]).weight.units();
  }
  cert.profit = profit(g, f);
  return cert;
}

struct CertificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificationReport {
  std::vector<CertificationCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const CertificationCheck* failed() const {
    for (const auto& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
};

/// Re-derives everything it can from (g, F) and verifies the certificate's
/// claims one by one.
inline CertificationReport certify(const Graph& g, const EdgeSet& f_in, const RelaxationCertificate& cert) {
  const EdgeSet f = normalize(f_in);
  CertificationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const std::size_t t = cert.cc.t();
  const std::size_t k = cert.cuts.size();
  const Extended removal = cost_of(g, f);
  const Extended p = profit(g, f);

  // shape
  {
    bool ok = k + 1 == t && cert.small_sides.size() == k && cert.tree_prime_edges.size() == k &&
              cert.matching.size() == k;
    for (std::size_t i = 0; ok && i < k; ++i) {
      const PartialCutSpec expect =
          partial_cut(g, cert.cuts[i].side, g.edge(cert.tree_prime_edges[i]).weight);
      ok = expect == cert.cuts[i] && detail::vertices_of(cert.cc, cert.small_sides[i]) == cert.cuts[i].side;
    }
    add("well_formed", ok, "t=" + std::to_string(t) + " cuts=" + std::to_string(k));
    if (!ok) return rep;
  }

  // (a) every cut edge belongs to F
  {
    bool ok = true;
    for (const auto& c : cert.cuts) {
      for (EdgeId id : c.edges) ok = ok && contains(f, id);
    }
    add("cut_edges_in_F", ok, "");
  }

  // (b) each edge lies in at most 2 log2 t cuts; each counter at most log2 t
  {
    std::vector<std::size_t> hits(g.n_edges(), 0);
    for (const auto& c : cert.cuts) {
      for (EdgeId id : c.edges) ++hits[id];
    }
    const std::size_t worst = hits.empty() ? 0 : *std::max_element(hits.begin(), hits.end());
    bool ok = detail::within_two_log(worst, t);
    std::size_t kmax = 0;
    for (std::size_t c = 0; c < t; ++c) {
      std::size_t count = 0;
      for (const auto& side : cert.small_sides) count += std::count(side.begin(), side.end(), c);
      kmax = std::max(kmax, count);
      // 2^count <= t
      ok = ok && count < 64 && (std::uint64_t{1} << count) <= t;
    }
    add("crossings_bounded", ok, "max_crossings=" + std::to_string(worst) + " max_counter=" + std::to_string(kmax));
  }

  // (c) cost sum bound
  {
    Extended sum = Quantity::zero();
    for (const auto& c : cert.cuts) sum += cost_of(g, c.edges);
    const bool ok = removal.is_infinite() ||
                    (sum.is_finite() && detail::within_log_bound(sum.value().units(), removal.value().units(), t));
    add("cost_sum_bound", ok, "sum=" + to_string(sum) + " bound=" + std::to_string(cert.cost_bound));
  }

  // (d) laminarity: for j < i, X_i and X_j are disjoint or X_j ⊂ X_i
  {
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& xi = cert.small_sides[i];
      for (std::size_t j = 0; j < i; ++j) {
        const auto& xj = cert.small_sides[j];
        std::vector<std::size_t> common;
        std::set_intersection(xi.begin(), xi.end(), xj.begin(), xj.end(), std::back_inserter(common));
        if (!common.empty() && !std::includes(xi.begin(), xi.end(), xj.begin(), xj.end())) ok = false;
      }
    }
    add("laminar", ok, "");
  }

  // (e) matching is a bijection onto T ∩ F, pairs cross, and gains sum to p_G(F)
  {
    EdgeSet matched(cert.matching.begin(), cert.matching.end());
    matched = normalize(matched);
    const SpanningForest tree = mst(g);
    EdgeSet tf;
    for (EdgeId id : tree.edges) {
      if (contains(f, id)) tf.push_back(id);
    }
    bool ok = matched.size() == k && matched == tf;
    std::int64_t gain = 0;
    for (std::size_t i = 0; ok && i < k; ++i) {
      const auto in = vertex_flags(g.n_vertices(), cert.cuts[i].side);
      ok = crosses(g.edge(cert.matching[i]), in);
      gain += g.edge(cert.tree_prime_edges[i]).weight.units() - g.edge(cert.matching[i]).weight.units();
    }
    ok = ok && p.is_finite() && gain == p.value().units();
    add("matching_profit_identity", ok,
        "sum=" + std::to_string(gain) + "u profit=" + to_string(p));
  }

  // (f) per-cut lower bound and total cut profit
  {
    bool ok = true;
    Extended total = Quantity::zero();
    for (std::size_t i = 0; i < k; ++i) {
      const Extended pc = profit(g, cert.cuts[i].edges);
      total += pc;
      const auto in = vertex_flags(g.n_vertices(), cert.cuts[i].side);
      ok = ok && crosses(g.edge(cert.matching[i]), in) &&
           pc >= cut_profit_lower_bound(g, cert.cuts[i], cert.matching[i]);
    }
    ok = ok && total >= p;
    add("profit_sum_bound", ok, "sum=" + to_string(total) + " profit=" + to_string(p));
  }

  // (g) typical vertices
  {
    bool ok = true;
    std::vector<char> covered(t, 0);
    for (std::size_t i = 0; i < k; ++i) {
      bool fresh = false;
      for (std::size_t c : cert.small_sides[i]) fresh = fresh || !covered[c];
      ok = ok && fresh;
      for (std::size_t c : cert.small_sides[i]) covered[c] = 1;
    }
    ok = ok && std::find(covered.begin(), covered.end(), 0) != covered.end();
    add("typical_vertices", ok, "");
  }
  return rep;
}

inline nlohmann::json report_to_json(const RelaxationCertificate& cert, const CertificationReport& rep) {
  nlohmann::json j;
  j["t"] = cert.cc.t();
  j["cost_sum"] = to_string(cert.cost_sum);
  j["cost_bound"] = cert.cost_bound;
  j["removal_cost"] = to_string(cert.removal_cost);
  j["profit"] = to_string(cert.profit);
  j["matched_gain"] = to_string(Quantity::from_units(std::max<std::int64_t>(cert.matched_gain, 0)));
  j["tree_prime_edges"] = cert.tree_prime_edges;
  j["matching"] = cert.matching;
  j["small_side_counts"] = cert.small_side_counts;
  nlohmann::json cuts = nlohmann::json::array();
  for (const auto& c : cert.cuts) cuts.push_back(cut_to_json(c));
  j["cuts"] = std::move(cuts);
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : rep.checks) checks[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
  j["checks"] = std::move(checks);
  j["passed"] = rep.all_passed();
  return j;
}

}  // namespace mstint

#endif  // MSTINT_RELAXATION_HPP
