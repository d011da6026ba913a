#ifndef MSTINT_GENERATORS_HPP
#define MSTINT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mstint/graph.hpp"
#include "mstint/instance_io.hpp"
#include "mstint/mst.hpp"

namespace mstint {

/// mt19937_64 with a fixed rejection draw, so streams match across standard
/// libraries (std::uniform_int_distribution does not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) return eng_();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x = 0;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + x % range;
  }

  bool coin(std::uint64_t num, std::uint64_t den) { return between(0, den - 1) < num; }

 private:
  std::mt19937_64 eng_;
};

/// Connected multigraph: a random spanning tree first, then extra edges with
/// random distinct endpoints. Integer weights in [0, max_weight], costs in
/// [1, max_cost].
inline Graph gen_random(std::uint64_t seed, std::size_t n, std::size_t m, std::int64_t max_weight,
                        std::int64_t max_cost) {
  if (n < 2) throw std::invalid_argument("gen_random: need n >= 2");
  if (m < n - 1) throw std::invalid_argument("gen_random: m < n - 1 cannot be connected");
  if (max_weight < 0 || max_cost < 1) throw std::invalid_argument("gen_random: bad weight/cost range");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.between(0, i)]);

  auto draw = [&](Vertex u, Vertex v) {
    const auto w = static_cast<std::int64_t>(rng.between(0, static_cast<std::uint64_t>(max_weight)));
    const auto c = static_cast<std::int64_t>(rng.between(1, static_cast<std::uint64_t>(max_cost)));
    return Edge{u, v, Quantity::from_integer(w), Quantity::from_integer(c)};
  };
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < n; ++i) edges.push_back(draw(perm[rng.between(0, i - 1)], perm[i]));
  while (edges.size() < m) {
    const auto u = static_cast<Vertex>(rng.between(0, n - 1));
    auto v = static_cast<Vertex>(rng.between(0, n - 2));
    if (v >= u) ++v;
    edges.push_back(draw(u, v));
  }
  // shuffle so the tree edges are not always the first n-1 indices
  for (std::size_t i = edges.size() - 1; i > 0; --i) std::swap(edges[i], edges[rng.between(0, i)]);
  return Graph(n, std::move(edges));
}

/// Instance where rounding a Lagrangian relaxation gains only 1/2 while
/// profit b - 1/2 is affordable.
struct BadExample {
  Graph graph;
  Quantity budget;  // B + 1/2
  Vertex v1 = 0, v2 = 0, v3 = 0, v4 = 0;
  EdgeId v2v3 = 0;  // the over-budget edge worth W
  EdgeId v2v4 = 0;
};

/// G_H is a path on b vertices (w=0, c=1). Each G_H vertex joins v1 with
/// w=1. "Unremovable" costs are materialized as B+2.
inline BadExample gen_bad_example(Quantity big_w, Quantity big_b, std::size_t b) {
  const Quantity one = Quantity::from_integer(1);
  const Quantity half = Quantity::from_units(Quantity::kScale / 2);
  if (b < 2) throw std::invalid_argument("gen_bad_example: need b >= 2");
  if (big_b < Quantity::from_integer(static_cast<std::int64_t>(b) - 1)) {
    throw std::invalid_argument("gen_bad_example: B must allow cutting the path into b pieces (B >= b-1)");
  }
  if (!(big_w > big_b + one)) throw std::invalid_argument("gen_bad_example: need W > B+1");

  const Quantity blocked = big_b + one + one;
  BadExample ex;
  ex.v1 = static_cast<Vertex>(b);
  ex.v2 = ex.v1 + 1;
  ex.v3 = ex.v1 + 2;
  ex.v4 = ex.v1 + 3;
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < b; ++i) edges.push_back({i, i + 1, Quantity::zero(), one});
  for (Vertex i = 0; i < b; ++i) edges.push_back({i, ex.v1, one, blocked});
  edges.push_back({ex.v1, ex.v2, Quantity::zero(), blocked});
  edges.push_back({ex.v1, ex.v3, big_w, blocked});
  ex.v2v3 = static_cast<EdgeId>(edges.size());
  edges.push_back({ex.v2, ex.v3, Quantity::zero(), big_b + one});
  edges.push_back({ex.v1, ex.v4, big_w + half, blocked});
  ex.v2v4 = static_cast<EdgeId>(edges.size());
  edges.push_back({ex.v2, ex.v4, big_w, half});
  ex.graph = Graph(b + 4, std::move(edges));
  ex.budget = big_b + half;
  return ex;
}

/// Random protection instance: a base graph plus candidates that never lower
/// the MST weight.
inline Instance gen_protection(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t k,
                               std::int64_t max_weight, std::int64_t max_cost) {
  Instance inst;
  inst.graph = gen_random(seed, n, m, max_weight, max_cost);
  inst.has_protect_section = true;
  const Extended base = mst(inst.graph).weight;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < k; ++i) {
    const auto u = static_cast<Vertex>(rng.between(0, n - 1));
    auto v = static_cast<Vertex>(rng.between(0, n - 2));
    if (v >= u) ++v;
    Candidate c;
    c.u = u;
    c.v = v;
    c.weight = Quantity::from_integer(static_cast<std::int64_t>(rng.between(0, static_cast<std::uint64_t>(max_weight))));
    c.build_cost = Quantity::from_integer(static_cast<std::int64_t>(rng.between(1, static_cast<std::uint64_t>(max_cost))));
    c.removal_cost = Quantity::from_integer(static_cast<std::int64_t>(rng.between(1, static_cast<std::uint64_t>(max_cost))));
    // lift the weight until it stops undercutting the tree path
    while (mst(inst.graph.with_edges({c.as_edge()})).weight != base) c.weight += Quantity::from_integer(1);
    inst.candidates.push_back(c);
  }
  return inst;
}

}  // namespace mstint

#endif  // MSTINT_GENERATORS_HPP
