#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bdn/aux_graph.hpp"
#include "bdn/certificate.hpp"
#include "bdn/coloring.hpp"
#include "bdn/error.hpp"
#include "bdn/graph.hpp"
#include "bdn/matching.hpp"

namespace bdn {

using json = nlohmann::json;

namespace detail {

inline int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": line " + std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
}

inline int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field + ": expected an integer, got " + j.dump());
  auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(field + ": integer out of range");
  return static_cast<int>(v);
}

// Range, loop and duplicate checks shared by both graph formats.
class EdgeCollector {
 public:
  explicit EdgeCollector(int n) : n_(n) {}

  void add(int u, int v, const std::string& where) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw ParseError(where + ": endpoint out of range [0, " + std::to_string(n_) + ")");
    if (u == v) throw ParseError(where + ": loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen_.insert(key).second)
      throw ParseError(where + ": duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    edges_.emplace_back(key.first, key.second);
  }

  Graph build() const { return Graph(n_, edges_); }

 private:
  int n_;
  std::set<std::pair<int, int>> seen_;
  std::vector<Edge> edges_;
};

inline Graph parse_graph_json(std::string_view text) {
  const json j = parse_json(text, "graph");
  if (!j.is_object()) throw ParseError("graph: expected a JSON object");
  if (!j.contains("n")) throw ParseError("graph: missing field 'n'");
  if (!j.contains("edges")) throw ParseError("graph: missing field 'edges'");
  const int n = as_int(j["n"], "n");
  if (n < 0) throw ParseError("n: must be non-negative");
  const json& edges = j["edges"];
  if (!edges.is_array()) throw ParseError("edges: expected an array");
  EdgeCollector collect(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2) throw ParseError(field + ": expected a pair [u, v]");
    collect.add(as_int(e[0], field + "[0]"), as_int(e[1], field + "[1]"), field);
  }
  return collect.build();
}

inline Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto read_pair = [&](long long& a, long long& b) {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> a >> b)) throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    if (ls >> extra) throw ParseError("line " + std::to_string(line_no) + ": unexpected trailing '" + extra + "'");
  };
  if (!next_line()) throw ParseError("line 1: empty input, expected 'n m'");
  long long n = 0, m = 0;
  read_pair(n, m);
  if (n < 0 || n > std::numeric_limits<int>::max())
    throw ParseError("line " + std::to_string(line_no) + ": vertex count out of range");
  if (m < 0) throw ParseError("line " + std::to_string(line_no) + ": edge count must be non-negative");
  EdgeCollector collect(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw ParseError("line " + std::to_string(line_no + 1) + ": expected edge " + std::to_string(i + 1) +
                                       " of " + std::to_string(m));
    long long u = 0, v = 0;
    read_pair(u, v);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range [0, " + std::to_string(n) + ")");
    collect.add(static_cast<int>(u), static_cast<int>(v), "line " + std::to_string(line_no));
  }
  if (next_line()) throw ParseError("line " + std::to_string(line_no) + ": content after the declared " + std::to_string(m) + " edges");
  return collect.build();
}

inline VertexSet parse_vertex_list(const json& j, const std::string& field, int n) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of vertices");
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    int v = as_int(j[i], where);
    if (v < 0 || v >= n) throw ParseError(where + ": vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
    out.push_back(v);
  }
  VertexSet s(out);
  if (s.size() != out.size()) throw ParseError(field + ": repeated vertex");
  return s;
}

}  // namespace detail

// Accepts `{"n": N, "edges": [[u, v], ...]}` or plain text: a line `n m` then m
// lines `u v`. JSON is recognized by a leading '{'.
inline Graph parse_graph(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char ch) { return !std::isspace(static_cast<unsigned char>(ch)); });
  if (first != text.end() && *first == '{') return detail::parse_graph_json(text);
  return detail::parse_graph_text(text);
}

inline json to_json(const VertexSet& s) { return json(s.members()); }

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline std::string graph_to_text(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// `{"p1": [...], "p2": [...], "x": [...]}`; a missing x is the complement of p1 and p2.
inline BalancedColoring parse_coloring(std::string_view text, int n) {
  const json j = detail::parse_json(text, "coloring");
  if (!j.is_object()) throw ParseError("coloring: expected a JSON object");
  for (const char* key : {"p1", "p2"})
    if (!j.contains(key)) throw ParseError(std::string("coloring: missing field '") + key + "'");
  BalancedColoring c;
  c.p1 = detail::parse_vertex_list(j["p1"], "p1", n);
  c.p2 = detail::parse_vertex_list(j["p2"], "p2", n);
  if (j.contains("x")) {
    c.x = detail::parse_vertex_list(j["x"], "x", n);
  } else {
    c.x = set_difference(VertexSet::range(n), set_union(c.p1, c.p2));
  }
  return c;
}

inline json coloring_to_json(const BalancedColoring& c) {
  return {{"p1", to_json(c.p1)}, {"p2", to_json(c.p2)}, {"x", to_json(c.x)}};
}

inline json decomposition_to_json(const Decomposition& d) {
  json parts = json::array();
  for (const auto& p : d.parts) parts.push_back(to_json(p));
  return {{"parts", std::move(parts)}, {"max_part_size", d.max_part_size()}};
}

inline Decomposition parse_decomposition(std::string_view text, int n) {
  const json j = detail::parse_json(text, "decomposition");
  if (!j.is_object() || !j.contains("parts")) throw ParseError("decomposition: missing field 'parts'");
  if (!j["parts"].is_array()) throw ParseError("parts: expected an array");
  Decomposition d;
  for (std::size_t i = 0; i < j["parts"].size(); ++i)
    d.parts.push_back(detail::parse_vertex_list(j["parts"][i], "parts[" + std::to_string(i) + "]", n));
  return d;
}

inline json certificate_to_json(const CutCertificate& c) {
  json j;
  j["cut"] = to_json(c.cut);
  j["separated"] = to_json(c.separated);
  j["remainder"] = to_json(c.remainder);
  j["a"] = to_json(c.a);
  j["b"] = to_json(c.b);
  j["c"] = to_json(c.c);
  j["d"] = to_json(c.d);
  j["chosen_side"] = std::string(1, c.chosen_side);
  j["floor_half_minus_one"] = c.floor_half_minus_one;
  j["cut_c"] = to_json(c.cut_c);
  j["cut_a"] = to_json(c.cut_a);
  return j;
}

inline CutCertificate parse_certificate(std::string_view text, int n) {
  const json j = detail::parse_json(text, "certificate");
  if (!j.is_object()) throw ParseError("certificate: expected a JSON object");
  auto list = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("certificate: missing field '") + key + "'");
    return detail::parse_vertex_list(j[key], key, n);
  };
  CutCertificate c;
  c.cut = list("cut");
  c.separated = list("separated");
  c.remainder = list("remainder");
  c.a = list("a");
  c.b = list("b");
  c.c = list("c");
  c.d = list("d");
  if (!j.contains("chosen_side") || !j["chosen_side"].is_string() ||
      (j["chosen_side"] != "C" && j["chosen_side"] != "A"))
    throw ParseError("chosen_side: expected \"C\" or \"A\"");
  c.chosen_side = j["chosen_side"].get<std::string>()[0];
  if (!j.contains("floor_half_minus_one")) throw ParseError("certificate: missing field 'floor_half_minus_one'");
  c.floor_half_minus_one = detail::as_int(j["floor_half_minus_one"], "floor_half_minus_one");
  if (j.contains("cut_c")) c.cut_c = detail::parse_vertex_list(j["cut_c"], "cut_c", n);
  if (j.contains("cut_a")) c.cut_a = detail::parse_vertex_list(j["cut_a"], "cut_a", n);
  return c;
}

inline json aux_vertex_to_json(const AuxVertex& a) {
  switch (a.kind) {
    case AuxVertex::Kind::P1: return {{"kind", "p1"}, {"v", a.vertex}};
    case AuxVertex::Kind::P2: return {{"kind", "p2"}, {"v", a.vertex}};
    case AuxVertex::Kind::XCopy: return {{"kind", "x"}, {"v", a.vertex}, {"side", a.side}};
  }
  return {};
}

// Debug dump of H.
inline json aux_to_json(const AuxBipartite& h) {
  json s1 = json::array(), s2 = json::array(), edges = json::array();
  for (const auto& a : h.side1()) s1.push_back(aux_vertex_to_json(a));
  for (const auto& a : h.side2()) s2.push_back(aux_vertex_to_json(a));
  for (auto [u, w] : h.edges()) edges.push_back({u, w});
  return {{"side1", std::move(s1)}, {"side2", std::move(s2)}, {"edges", std::move(edges)}};
}

inline json violator_to_json(const HallViolator& v) {
  return {{"a", to_json(v.a)}, {"b", to_json(v.b)}, {"nh_p2", to_json(v.nh_p2)}, {"nh_x2", to_json(v.nh_x2)},
          {"deficiency", v.deficiency}};
}

}  // namespace bdn
