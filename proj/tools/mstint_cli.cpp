// mstint: command-line front end for the interdiction library.
//
// exit codes: 0 ok, 1 a checked guarantee failed, 2 bad input

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mstint/mstint.hpp"

using namespace mstint;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

Instance read_instance(const std::string& path) {
  if (path.empty() || path == "-") return parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string join(const std::vector<std::uint32_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

void print_solution(const InterdictionSolution& s, bool json) {
  if (json) {
    std::cout << solution_to_json(s).dump(2) << "\n";
    return;
  }
  std::cout << "edges   " << join(s.edges) << "\n";
  std::cout << "cost    " << to_string(s.cost) << "\n";
  std::cout << "profit  " << to_string(s.profit) << "\n";
  for (const auto& c : s.cuts) {
    std::cout << "cut     side {" << join(c.side) << "} W=" << to_string(c.threshold) << " edges {" << join(c.edges)
              << "}\n";
  }
  if (s.trace) {
    std::cout << "greedy  budget guess " << to_string(s.trace->budget_guess) << ", " << s.trace->rounds.size()
              << " rounds, " << to_string(s.trace->outcome) << "\n";
  }
  if (s.min_cut_calls) std::cout << "min-cut calls " << s.min_cut_calls << "\n";
}

EdgeSet parse_edge_list(const std::string& text, const Graph& g) {
  EdgeSet out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const unsigned long id = std::stoul(tok, &pos);
    if (pos != tok.size() || id >= g.n_edges()) throw std::invalid_argument("bad edge index '" + tok + "'");
    out.push_back(static_cast<EdgeId>(id));
  }
  return normalize(std::move(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum spanning tree interdiction toolkit"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::string delta_text;
  std::string budget_text;
  bool fast = false;
  bool reduce_range = false;
  std::string edges_text;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("instance", file, "instance file (default: stdin)");
    sub->add_flag("--json", json, "print the machine-readable record");
  };

  auto* c_mst = app.add_subcommand("mst", "minimum spanning tree of the instance");
  with_input(c_mst);
  auto* c_eps = app.add_subcommand("eps-increase", "cheapest removal set that raises the MST at all");
  with_input(c_eps);
  auto* c_budget = app.add_subcommand("budget", "approximate cheapest removal set gaining at least delta");
  with_input(c_budget);
  c_budget->add_option("--delta", delta_text, "target MST increase")->required();
  c_budget->add_flag("--fast", fast, "compute the candidate cuts once");
  c_budget->add_flag("--reduce-range", reduce_range, "search budgets in [b*, m b*]");
  auto* c_profit = app.add_subcommand("profit", "approximate largest MST increase within a budget");
  with_input(c_profit);
  c_profit->add_option("--budget", budget_text, "removal budget")->required();
  auto* c_protect = app.add_subcommand("protect", "edges to build so the eps-increase cost rises");
  with_input(c_protect);
  auto* c_certify = app.add_subcommand("certify", "build and check the cut-sequence certificate for F");
  with_input(c_certify);
  c_certify->add_option("--edges", edges_text, "comma-separated edge indices of F")->required();
  auto* c_ob = app.add_subcommand("oracle-budget", "exact budget solution by enumeration");
  with_input(c_ob);
  c_ob->add_option("--delta", delta_text)->required();
  auto* c_op = app.add_subcommand("oracle-profit", "exact profit solution by enumeration");
  with_input(c_op);
  c_op->add_option("--budget", budget_text)->required();
  auto* c_oe = app.add_subcommand("oracle-eps", "exact eps-increase by enumeration");
  with_input(c_oe);

  auto* c_gen = app.add_subcommand("gen", "write a generated instance to stdout");
  c_gen->require_subcommand(1);
  std::uint64_t seed = 1;
  std::size_t gn = 6;
  std::size_t gm = 10;
  std::int64_t max_w = 5;
  std::int64_t max_c = 5;
  std::size_t gk = 0;
  auto* g_random = c_gen->add_subcommand("random", "random connected multigraph");
  g_random->add_option("--seed", seed);
  g_random->add_option("--n", gn);
  g_random->add_option("--m", gm);
  g_random->add_option("--max-weight", max_w);
  g_random->add_option("--max-cost", max_c);
  g_random->add_option("--candidates", gk, "also emit a protect section with this many candidates");
  std::string bw = "100";
  std::string bb = "4";
  std::size_t bsize = 5;
  auto* g_bad = c_gen->add_subcommand("bad", "instance where Lagrangian rounding gains only 1/2");
  g_bad->add_option("--W", bw);
  g_bad->add_option("--B", bb);
  g_bad->add_option("--b", bsize);

  auto* c_bench = app.add_subcommand("bench", "run the guarantee harness; TSV rows on stdout");
  std::string config_path;
  std::string summary_path;
  bench::Config bcfg;
  std::vector<std::string> suites;
  c_bench->add_option("--config", config_path, "JSON config (flags below override it)");
  c_bench->add_option("--suites", suites, "eps budget profit certify bad-example protect")->delimiter(',');
  auto* o_seed = c_bench->add_option("--seed", bcfg.seed);
  auto* o_count = c_bench->add_option("--count", bcfg.count, "instances per suite");
  auto* o_jobs = c_bench->add_option("--jobs", bcfg.jobs, "worker threads");
  bool timing = false;
  c_bench->add_flag("--timing", timing, "fill the wall_ms column (output no longer bit-reproducible)");
  std::vector<std::string> files;
  c_bench->add_option("--instance", files, "extra instance files");
  c_bench->add_option("--summary", summary_path, "write the JSON summary here (default: stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (c_bench->parsed()) {
      bench::Config cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config '" + config_path + "'");
        cfg = bench::config_from_json(nlohmann::json::parse(in));
      }
      if (!suites.empty()) cfg.suites = suites;
      if (o_seed->count()) cfg.seed = bcfg.seed;
      if (o_count->count()) cfg.count = bcfg.count;
      if (o_jobs->count()) cfg.jobs = bcfg.jobs;
      if (timing) cfg.timing = true;
      for (auto& f : files) cfg.instance_files.push_back(f);
      const bench::Report rep = bench::run_bench(cfg);
      bench::write_tsv(std::cout, rep);
      const std::string sum = bench::summary(rep).dump(2);
      if (summary_path.empty()) {
        std::cerr << sum << "\n";
      } else {
        std::ofstream(summary_path) << sum << "\n";
      }
      return rep.violations() == 0 ? kOk : kViolation;
    }

    if (c_gen->parsed()) {
      if (g_random->parsed()) {
        if (gk == 0) {
          std::cout << format_instance(gen_random(seed, gn, gm, max_w, max_c));
        } else {
          std::cout << format_instance(gen_protection(seed, gn, gm, gk, max_w, max_c));
        }
      } else {
        const BadExample ex = gen_bad_example(parse_quantity(bw), parse_quantity(bb), bsize);
        std::cout << "# budget " << to_string(ex.budget) << "\n" << format_instance(ex.graph);
      }
      return kOk;
    }

    const Instance inst = read_instance(file);
    const Graph& g = inst.graph;

    if (c_mst->parsed()) {
      const SpanningForest t = mst(g);
      if (json) {
        std::cout << nlohmann::json{{"edges", t.edges}, {"weight", to_string(t.weight)}}.dump(2) << "\n";
      } else {
        std::cout << "edges   " << join(t.edges) << "\nweight  " << to_string(t.weight) << "\n";
      }
      return kOk;
    }
    if (c_eps->parsed()) {
      const InterdictionSolution s = eps_increase(g);
      print_solution(s, json);
      return s.profit > Extended(Quantity::zero()) ? kOk : kViolation;
    }
    if (c_budget->parsed()) {
      const Quantity delta = parse_quantity(delta_text);
      const InterdictionSolution s = budget_approximate(g, delta, BudgetOptions{fast, reduce_range});
      print_solution(s, json);
      return s.profit >= Extended(delta) ? kOk : kViolation;
    }
    if (c_profit->parsed()) {
      const Quantity budget = parse_quantity(budget_text);
      const InterdictionSolution s = profit_approximate(g, budget);
      print_solution(s, json);
      return s.cost <= budget ? kOk : kViolation;
    }
    if (c_protect->parsed()) {
      if (!inst.has_protect_section) throw std::invalid_argument("instance has no protect section");
      const ProtectionInstance pi(inst);
      const ProtectionResult r = protect(pi);
      const bool rose = r.cost_after > Extended(r.cost_before);
      if (json) {
        nlohmann::json cuts = nlohmann::json::array();
        for (const auto& c : r.cuts) cuts.push_back(cut_to_json(c));
        std::cout << nlohmann::json{{"chosen", r.chosen},
                                    {"build_cost", to_string(r.build_cost)},
                                    {"cost_before", to_string(r.cost_before)},
                                    {"cost_after", to_string(r.cost_after)},
                                    {"complete", r.complete},
                                    {"cuts", cuts}}
                         .dump(2)
                  << "\n";
      } else {
        std::vector<std::uint32_t> chosen(r.chosen.begin(), r.chosen.end());
        std::cout << "build       " << join(chosen) << "\n";
        std::cout << "build cost  " << to_string(r.build_cost) << "\n";
        std::cout << "eps cost    " << to_string(r.cost_before) << " -> " << to_string(r.cost_after) << "\n";
        std::cout << "cuts        " << r.cuts.size() << (r.complete ? "" : " (enumeration truncated)") << "\n";
      }
      return (rose || !r.complete) ? kOk : kViolation;
    }
    if (c_certify->parsed()) {
      const EdgeSet f = parse_edge_list(edges_text, g);
      const RelaxationCertificate cert = build_cut_sequence(g, f);
      const CertificationReport rep = certify(g, f, cert);
      if (json) {
        std::cout << report_to_json(cert, rep).dump(2) << "\n";
      } else {
        for (const auto& c : rep.checks) {
          std::cout << (c.passed ? "ok    " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        }
      }
      return rep.all_passed() ? kOk : kViolation;
    }
    if (c_ob->parsed()) {
      print_solution(oracle::oracle_budget(g, parse_quantity(delta_text)), json);
      return kOk;
    }
    if (c_op->parsed()) {
      print_solution(oracle::oracle_profit(g, parse_quantity(budget_text)), json);
      return kOk;
    }
    if (c_oe->parsed()) {
      print_solution(oracle::oracle_eps(g), json);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "mstint: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
