#ifndef MSTINT_INSTANCE_IO_HPP
#define MSTINT_INSTANCE_IO_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mstint/graph.hpp"

namespace mstint {

/// A buildable edge for protection: weight, construction cost, and the
/// removal cost it carries once built.
struct Candidate {
  Vertex u = 0;
  Vertex v = 0;
  Quantity weight;
  Quantity build_cost;
  Extended removal_cost;

  Edge as_edge() const { return Edge{u, v, weight, removal_cost}; }
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct Instance {
  Graph graph;
  std::vector<Candidate> candidates;
  bool has_protect_section = false;

  friend bool operator==(const Instance&, const Instance&) = default;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::uint64_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw parse_error(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw parse_error(line, "integer out of range '" + tok + "'");
  }
}

inline Vertex parse_vertex(const std::string& tok, std::size_t n, std::size_t line) {
  const std::uint64_t v = parse_count(tok, line);
  if (v >= n) throw parse_error(line, "endpoint " + tok + " out of range");
  return static_cast<Vertex>(v);
}

template <class Fn>
auto with_line(std::size_t line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception& ex) {
    throw parse_error(line, ex.what());
  }
}

inline Quantity parse_weight(const std::string& tok, std::size_t line) {
  if (!tok.empty() && tok[0] == '-') throw parse_error(line, "negative weight '" + tok + "'");
  return with_line(line, [&] { return parse_quantity(tok); });
}

inline Extended parse_positive_cost(const std::string& tok, std::size_t line, bool allow_inf) {
  if (tok == "inf") {
    if (!allow_inf) throw parse_error(line, "cost may not be inf here");
    return Extended::infinity();
  }
  if (!tok.empty() && tok[0] == '-') throw parse_error(line, "non-positive cost '" + tok + "'");
  const Quantity q = with_line(line, [&] { return parse_quantity(tok); });
  if (q.is_zero()) throw parse_error(line, "non-positive cost '" + tok + "'");
  return q;
}

}  // namespace detail

/// Reads the whitespace-separated instance format:
///
///   n m
///   u v weight cost          (m lines; cost may be `inf`)
///   protect k                (optional)
///   u v weight build removal (k lines)
///
/// Lines starting with `#` and blank lines are ignored.
inline Instance parse_instance(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    lines.emplace_back(lineno, detail::tokenize(raw));
  }
  if (lines.empty()) throw parse_error(lineno, "missing header line 'n m'");

  std::size_t cursor = 0;
  const auto& [hline, header] = lines[cursor++];
  if (header.size() != 2) throw parse_error(hline, "header must be 'n m'");
  const std::uint64_t n = detail::parse_count(header[0], hline);
  const std::uint64_t m = detail::parse_count(header[1], hline);
  if (n > (std::uint64_t{1} << 31)) throw parse_error(hline, "too many vertices");

  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (cursor >= lines.size()) throw parse_error(lineno, "expected " + std::to_string(m) + " edge lines");
    const auto& [ln, tok] = lines[cursor++];
    if (tok.size() != 4) throw parse_error(ln, "edge line must be 'u v weight cost'");
    Edge e;
    e.u = detail::parse_vertex(tok[0], n, ln);
    e.v = detail::parse_vertex(tok[1], n, ln);
    if (e.u == e.v) throw parse_error(ln, "self-loop");
    e.weight = detail::parse_weight(tok[2], ln);
    e.cost = detail::parse_positive_cost(tok[3], ln, true);
    edges.push_back(e);
  }

  Instance inst;
  inst.graph = Graph(static_cast<std::size_t>(n), std::move(edges));

  if (cursor < lines.size()) {
    const auto& [ln, tok] = lines[cursor++];
    if (tok.size() != 2 || tok[0] != "protect") throw parse_error(ln, "unexpected content after edge list");
    inst.has_protect_section = true;
    const std::uint64_t k = detail::parse_count(tok[1], ln);
    for (std::uint64_t i = 0; i < k; ++i) {
      if (cursor >= lines.size()) throw parse_error(lineno, "expected " + std::to_string(k) + " candidate lines");
      const auto& [cl, ct] = lines[cursor++];
      if (ct.size() != 5) throw parse_error(cl, "candidate line must be 'u v weight build_cost removal_cost'");
      Candidate c;
      c.u = detail::parse_vertex(ct[0], n, cl);
      c.v = detail::parse_vertex(ct[1], n, cl);
      if (c.u == c.v) throw parse_error(cl, "self-loop");
      c.weight = detail::parse_weight(ct[2], cl);
      c.build_cost = detail::parse_positive_cost(ct[3], cl, false).value();
      c.removal_cost = detail::parse_positive_cost(ct[4], cl, true);
      inst.candidates.push_back(c);
    }
    if (cursor < lines.size()) throw parse_error(lines[cursor].first, "trailing content");
  }
  return inst;
}

inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

inline std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  const Graph& g = inst.graph;
  out << g.n_vertices() << ' ' << g.n_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << to_string(e.weight) << ' ' << to_string(e.cost) << '\n';
  }
  if (inst.has_protect_section || !inst.candidates.empty()) {
    out << "protect " << inst.candidates.size() << '\n';
    for (const Candidate& c : inst.candidates) {
      out << c.u << ' ' << c.v << ' ' << to_string(c.weight) << ' ' << to_string(c.build_cost) << ' '
          << to_string(c.removal_cost) << '\n';
    }
  }
  return out.str();
}

inline std::string format_instance(const Graph& g) { return format_instance(Instance{g, {}, false}); }

}  // namespace mstint

#endif  // MSTINT_INSTANCE_IO_HPP
