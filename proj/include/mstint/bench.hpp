#ifndef MSTINT_BENCH_HPP
#define MSTINT_BENCH_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "mstint/budget.hpp"
#include "mstint/eps_increase.hpp"
#include "mstint/generators.hpp"
#include "mstint/graph.hpp"
#include "mstint/instance_io.hpp"
#include "mstint/oracle.hpp"
#include "mstint/profit.hpp"
#include "mstint/protection.hpp"
#include "mstint/relaxation.hpp"

namespace mstint::bench {

// ---- exact guarantee checks -------------------------------------------------

/// floor(log2(x) * 2^20), exact when x is a power of two.
inline std::int64_t log2_floor_fixed(std::uint64_t x) {
  constexpr std::int64_t one = std::int64_t{1} << 20;
  if (x == 0) throw std::invalid_argument("log2 of zero");
  if ((x & (x - 1)) == 0) return static_cast<std::int64_t>(std::countr_zero(x)) * one;
  return static_cast<std::int64_t>(std::floor(std::log2(static_cast<long double>(x)) * one));
}

/// cost <= (2 + 4 log2 n) * opt, with log2 n rounded down (the strict side).
inline bool within_budget_factor(Quantity cost, Quantity opt, std::size_t n) {
  constexpr __int128 one = __int128{1} << 20;
  const __int128 lhs = static_cast<__int128>(cost.units()) * one;
  const __int128 rhs = (2 * one + 4 * static_cast<__int128>(log2_floor_fixed(n))) * opt.units();
  return lhs <= rhs;
}

/// profit >= delta / 4 * (1/x - 1/x^2) with x = log2(base). The bound is
/// checked against the x that makes it largest among the two 2^-20
/// neighbours, so rounding never helps the algorithm.
inline bool within_profit_factor(Extended got, Quantity delta, std::uint64_t base) {
  if (got.is_infinite()) return true;
  if (base < 2) return true;  // log2 <= 0: no claim
  constexpr __int128 one = __int128{1} << 20;
  const std::int64_t lo = log2_floor_fixed(base);
  const bool exact = (base & (base - 1)) == 0;
  // f(x) = (x - 1) / x^2 rises below x = 2 and falls above it
  const __int128 x = (lo >= 2 * one || exact) ? lo : lo + 1;
  if (x <= one) return true;  // bound <= 0
  // got >= delta * (x - 1) * one / (4 x^2)
  const __int128 lhs = static_cast<__int128>(got.value().units()) * 4 * x * x;
  const __int128 rhs = static_cast<__int128>(delta.units()) * (x - one) * one;
  return lhs >= rhs;
}

inline long double budget_factor(std::size_t n) { return 2.0L + 4.0L * std::log2(static_cast<long double>(n)); }

inline long double profit_factor(long double base) {
  const long double x = std::log2(base);
  return (1.0L / x - 1.0L / (x * x)) / 4.0L;
}

// ---- instance sampling ------------------------------------------------------

struct Family {
  std::size_t n_min = 5;
  std::size_t n_max = 8;
  std::size_t m_max = 14;
  std::int64_t max_weight = 5;
  std::int64_t max_cost = 5;
};

inline Graph sample_graph(Rng& rng, const Family& f) {
  const auto n = static_cast<std::size_t>(rng.between(f.n_min, f.n_max));
  const std::size_t m_lo = n - 1;
  const std::size_t m_hi = std::max(m_lo, std::min(f.m_max, n * (n - 1) / 2 + 2));
  const auto m = static_cast<std::size_t>(rng.between(m_lo, m_hi));
  return gen_random(rng.between(0, UINT64_MAX - 1), n, m, f.max_weight, f.max_cost);
}

/// Random removable set that keeps g connected (possibly empty).
inline EdgeSet sample_connected_removal(const Graph& g, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    EdgeSet f;
    for (EdgeId id = 0; id < g.n_edges(); ++id) {
      if (g.edge(id).cost.is_finite() && rng.coin(1, 2)) f.push_back(id);
    }
    if (is_connected(g, mask_without(g, f))) return f;
  }
  return {};
}

/// A target profit that some connected removal achieves; nullopt if the draw
/// found nothing positive.
inline std::optional<Quantity> sample_delta(const Graph& g, Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const EdgeSet f = sample_connected_removal(g, rng);
    const Extended p = profit(g, f);
    if (p.is_finite() && p > Extended(Quantity::zero())) return p.value();
  }
  return std::nullopt;
}

/// Budget equal to the cost of a random nonempty edge subset.
inline Quantity sample_budget(const Graph& g, Rng& rng) {
  Quantity b;
  while (b.is_zero()) {
    for (EdgeId id = 0; id < g.n_edges(); ++id) {
      if (g.edge(id).cost.is_finite() && rng.coin(1, 3)) b += g.edge(id).cost.value();
    }
  }
  return b;
}

// ---- rows -------------------------------------------------------------------

struct Row {
  std::string suite;
  std::size_t id = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string algorithm;
  std::string cost;
  std::string profit;
  std::string bound;
  bool ok = true;
  std::uint64_t min_cut_calls = 0;
  double wall_ms = -1;
  std::string note;
};

struct Config {
  std::vector<std::string> suites{"eps", "budget", "profit", "certify", "bad-example", "protect"};
  std::vector<std::string> instance_files;  // run eps/budget/profit on these too
  std::uint64_t seed = 1;
  std::size_t count = 50;
  Family family;
  std::size_t jobs = 1;
  bool timing = false;
};

inline Config config_from_json(const nlohmann::json& j) {
  Config c;
  if (j.contains("suites")) c.suites = j.at("suites").get<std::vector<std::string>>();
  if (j.contains("instances")) c.instance_files = j.at("instances").get<std::vector<std::string>>();
  c.seed = j.value("seed", c.seed);
  c.count = j.value("count", c.count);
  c.jobs = j.value("jobs", c.jobs);
  c.timing = j.value("timing", c.timing);
  c.family.n_min = j.value("n_min", c.family.n_min);
  c.family.n_max = j.value("n_max", c.family.n_max);
  c.family.m_max = j.value("m_max", c.family.m_max);
  c.family.max_weight = j.value("max_weight", c.family.max_weight);
  c.family.max_cost = j.value("max_cost", c.family.max_cost);
  return c;
}

namespace detail {

template <class Fn>
auto timed(Row& row, bool timing, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  auto out = fn();
  if (timing) {
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return out;
}

inline Row base_row(const std::string& suite, std::size_t id, const Graph& g, const std::string& algo) {
  Row r;
  r.suite = suite;
  r.id = id;
  r.n = g.n_vertices();
  r.m = g.n_edges();
  r.algorithm = algo;
  return r;
}

inline void fail(Row& r, const std::string& why) {
  r.ok = false;
  r.note = why;
}

inline std::vector<Row> eps_rows(const Graph& g, std::size_t id, bool timing) {
  Row r = base_row("eps", id, g, "eps_increase");
  try {
    const InterdictionSolution s = timed(r, timing, [&] { return eps_increase(g); });
    r.cost = to_string(s.cost);
    r.profit = to_string(s.profit);
    r.min_cut_calls = s.min_cut_calls;
    if (!(s.profit > Extended(Quantity::zero()))) fail(r, "no increase");
    if (g.n_edges() <= oracle::kMaxEdges) {
      const Quantity opt = oracle::oracle_eps(g).cost;
      r.bound = to_string(opt);
      if (s.cost != opt) fail(r, "cost differs from optimum");
    } else {
      r.bound = "-";
    }
  } catch (const infeasible_error& e) {
    r.cost = r.profit = r.bound = "-";
    r.note = e.what();
  }
  return {r};
}

inline std::vector<Row> budget_rows(const Graph& g, std::size_t id, Quantity delta, bool timing) {
  std::optional<Quantity> opt;
  if (g.n_edges() <= oracle::kMaxEdges) opt = oracle::oracle_budget(g, delta).cost;
  std::vector<Row> rows;
  for (bool fast : {false, true}) {
    Row r = base_row("budget", id, g, fast ? "budget_fast" : "budget");
    const InterdictionSolution s = timed(r, timing, [&] { return budget_approximate(g, delta, BudgetOptions{fast, false}); });
    r.cost = to_string(s.cost);
    r.profit = to_string(s.profit);
    r.min_cut_calls = s.min_cut_calls;
    r.note = "delta=" + to_string(delta);
    if (s.profit < Extended(delta)) fail(r, "profit below delta");
    if (opt) {
      std::ostringstream b;
      b << to_string(*opt) << "*" << static_cast<double>(budget_factor(g.n_vertices()));
      r.bound = b.str();
      if (!within_budget_factor(s.cost, *opt, g.n_vertices())) fail(r, "cost above (2+4log2 n)*OPT");
    } else {
      r.bound = "-";
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<Row> profit_rows(const Graph& g, std::size_t id, Quantity budget, bool timing) {
  Row r = base_row("profit", id, g, "profit_approximate");
  const InterdictionSolution s = timed(r, timing, [&] { return profit_approximate(g, budget); });
  r.cost = to_string(s.cost);
  r.profit = to_string(s.profit);
  r.min_cut_calls = s.min_cut_calls;
  r.note = "budget=" + to_string(budget);
  if (s.cost > budget) fail(r, "over budget");
  if (g.n_edges() <= oracle::kMaxEdges) {
    const Extended best = oracle::oracle_profit(g, budget, true).profit;
    r.bound = to_string(best);
    if (g.n_vertices() >= 5 && !within_profit_factor(s.profit, best.value(), g.n_vertices())) {
      fail(r, "profit below OPT/4*(1/log n - 1/log^2 n)");
    }
  } else {
    r.bound = "-";
  }
  return {r};
}

inline std::vector<Row> certify_rows(const Graph& g, std::size_t id, const EdgeSet& f, bool timing) {
  Row r = base_row("certify", id, g, "build_cut_sequence");
  const auto [cert, rep] = timed(r, timing, [&] {
    RelaxationCertificate c = build_cut_sequence(g, f);
    CertificationReport p = certify(g, f, c);
    return std::pair{std::move(c), std::move(p)};
  });
  r.cost = to_string(cert.cost_sum);
  r.profit = to_string(cert.profit);
  std::ostringstream b;
  b << "t=" << cert.cc.t() << " cost<=" << cert.cost_bound;
  r.bound = b.str();
  if (!rep.all_passed()) {
    std::string names;
    for (const auto& c : rep.checks) {
      if (!c.passed) names += (names.empty() ? "" : ",") + c.name;
    }
    fail(r, names);
  }
  return {r};
}

inline std::vector<Row> bad_example_rows(bool timing) {
  const BadExample ex = gen_bad_example(Quantity::from_integer(100), Quantity::from_integer(4), 5);
  Row r = base_row("bad-example", 0, ex.graph, "profit_approximate");
  const InterdictionSolution s = timed(r, timing, [&] { return profit_approximate(ex.graph, ex.budget); });
  r.cost = to_string(s.cost);
  r.profit = to_string(s.profit);
  r.min_cut_calls = s.min_cut_calls;
  r.bound = "prior=0.5";
  const Extended opt = oracle::oracle_profit(ex.graph, ex.budget).profit;
  r.note = "opt=" + to_string(opt);
  if (s.cost > ex.budget) fail(r, "over budget");
  if (!(s.profit > Extended(Quantity::from_units(Quantity::kScale / 2)))) fail(r, "no better than the prior 0.5");
  return {r};
}

inline std::vector<Row> protect_rows(std::size_t id, const Instance& inst, bool timing) {
  Row r = base_row("protect", id, inst.graph, "protect");
  try {
    const ProtectionInstance pi(inst);
    const ProtectionResult res = timed(r, timing, [&] { return protect(pi); });
    r.cost = to_string(res.build_cost);
    r.profit = to_string(res.cost_before) + "->" + to_string(res.cost_after);
    r.bound = "cuts=" + std::to_string(res.cuts.size());
    if (!res.complete) {
      r.note = "enumeration truncated";
    } else if (!(res.cost_after > Extended(res.cost_before))) {
      fail(r, "eps-increase cost did not rise");
    }
  } catch (const infeasible_error& e) {
    r.cost = r.profit = r.bound = "-";
    r.note = e.what();
  }
  return {r};
}

inline std::uint64_t instance_seed(std::uint64_t seed, const std::string& suite, std::size_t id) {
  std::uint64_t h = seed * 0x100000001b3ULL;
  for (char ch : suite) h = (h ^ static_cast<unsigned char>(ch)) * 0x100000001b3ULL;
  return h ^ (id * 0x9e3779b97f4a7c15ULL);
}

inline std::vector<Row> run_one(const Config& cfg, const std::string& suite, std::size_t id) {
  Rng rng(instance_seed(cfg.seed, suite, id));
  if (suite == "eps") {
    Family f = cfg.family;
    f.n_min = std::min<std::size_t>(f.n_min, 3);
    return eps_rows(sample_graph(rng, f), id, cfg.timing);
  }
  if (suite == "budget") {
    const Graph g = sample_graph(rng, cfg.family);
    const auto delta = sample_delta(g, rng);
    if (!delta) return {};
    return budget_rows(g, id, *delta, cfg.timing);
  }
  if (suite == "profit") {
    const Graph g = sample_graph(rng, cfg.family);
    return profit_rows(g, id, sample_budget(g, rng), cfg.timing);
  }
  if (suite == "certify") {
    const Graph g = sample_graph(rng, cfg.family);
    return certify_rows(g, id, sample_connected_removal(g, rng), cfg.timing);
  }
  if (suite == "bad-example") return id == 0 ? bad_example_rows(cfg.timing) : std::vector<Row>{};
  if (suite == "protect") {
    const auto n = static_cast<std::size_t>(rng.between(cfg.family.n_min, cfg.family.n_max));
    const auto m = static_cast<std::size_t>(rng.between(n - 1, std::max(n - 1, std::min<std::size_t>(cfg.family.m_max, 12))));
    const auto k = static_cast<std::size_t>(rng.between(3, 8));
    return protect_rows(id, gen_protection(rng.between(0, UINT64_MAX - 1), n, m, k, cfg.family.max_weight, cfg.family.max_cost),
                        cfg.timing);
  }
  throw std::invalid_argument("unknown bench suite '" + suite + "'");
}

}  // namespace detail

struct Report {
  std::vector<Row> rows;
  std::size_t violations() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.ok; }));
  }
};

/// Runs every suite. Instances within a suite are spread over `jobs` threads;
/// rows come back ordered by (suite order, instance id) regardless.
inline Report run_bench(const Config& cfg) {
  struct Task {
    std::string suite;
    std::size_t id;
  };
  std::vector<Task> tasks;
  for (const std::string& s : cfg.suites) {
    const std::size_t count = s == "bad-example" ? 1 : cfg.count;
    for (std::size_t i = 0; i < count; ++i) tasks.push_back({s, i});
  }
  std::vector<std::vector<Row>> out(tasks.size());
  std::vector<std::string> errors(tasks.size());
  const std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
  auto worker = [&](std::size_t k) {
    for (std::size_t i = k; i < tasks.size(); i += jobs) {
      try {
        out[i] = detail::run_one(cfg, tasks[i].suite, tasks[i].id);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker, k);
  worker(0);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) throw std::runtime_error(tasks[i].suite + " #" + std::to_string(tasks[i].id) + ": " + errors[i]);
  }

  Report rep;
  for (auto& rows : out) {
    for (auto& r : rows) rep.rows.push_back(std::move(r));
  }
  // user-supplied instances, one row group per file
  std::size_t id = 0;
  for (const std::string& path : cfg.instance_files) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance '" + path + "'");
    const Instance inst = parse_instance(in);
    Rng rng(detail::instance_seed(cfg.seed, path, id));
    std::vector<Row> rows = detail::eps_rows(inst.graph, id, cfg.timing);
    if (auto delta = sample_delta(inst.graph, rng)) {
      for (Row& r : detail::budget_rows(inst.graph, id, *delta, cfg.timing)) rows.push_back(std::move(r));
    }
    for (Row& r : detail::profit_rows(inst.graph, id, sample_budget(inst.graph, rng), cfg.timing)) {
      rows.push_back(std::move(r));
    }
    for (Row& r : rows) {
      r.suite = "file:" + r.suite;
      r.note = path + (r.note.empty() ? "" : " " + r.note);
      rep.rows.push_back(std::move(r));
    }
    ++id;
  }
  return rep;
}

inline void write_tsv(std::ostream& os, const Report& rep) {
  os << "suite\tid\tn\tm\talgorithm\tcost\tprofit\tbound\tok\tmin_cut_calls\twall_ms\tnote\n";
  for (const Row& r : rep.rows) {
    os << r.suite << '\t' << r.id << '\t' << r.n << '\t' << r.m << '\t' << r.algorithm << '\t' << r.cost << '\t'
       << r.profit << '\t' << r.bound << '\t' << (r.ok ? "yes" : "NO") << '\t' << r.min_cut_calls << '\t';
    if (r.wall_ms >= 0) {
      os << r.wall_ms;
    } else {
      os << '-';
    }
    os << '\t' << r.note << '\n';
  }
}

inline nlohmann::json summary(const Report& rep) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> per;
  for (const Row& r : rep.rows) {
    auto& [rows, bad] = per[r.suite];
    ++rows;
    bad += r.ok ? 0 : 1;
  }
  nlohmann::json j;
  for (const auto& [suite, c] : per) j["suites"][suite] = {{"rows", c.first}, {"violations", c.second}};
  j["rows"] = rep.rows.size();
  j["violations"] = rep.violations();
  return j;
}

}  // namespace mstint::bench

#endif  // MSTINT_BENCH_HPP
