#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bdn/aux_graph.hpp"
#include "bdn/coloring.hpp"
#include "bdn/error.hpp"
#include "bdn/matching.hpp"

namespace bdn {

// Reads a perfect matching of H as a decomposition with parts of at most three
// vertices: a P1-P2 pair gives {p1, p2}; a matched copy edge gives {x}; an
// uncolored x whose copies are matched to p1 and p2 gives {p1, x, p2}.
inline Decomposition matching_to_decomposition(const Graph& g, const BalancedColoring& c, const AuxBipartite& h,
                                               const Matching& m) {
  if (auto v = check_matching(h, m); !v) throw ContractViolation("matching_to_decomposition: " + v.diagnostic);
  if (!m.is_perfect()) throw ContractViolation("matching_to_decomposition: matching is not perfect");

  Decomposition d;
  const auto p = static_cast<int>(h.p_count());
  for (int u = 0; u < p; ++u) {
    const int w = m.mate_left[static_cast<std::size_t>(u)];
    if (w < p) d.parts.push_back(VertexSet{h.side1()[static_cast<std::size_t>(u)].vertex,
                                           h.side2()[static_cast<std::size_t>(w)].vertex});
  }
  for (int u = p; u < h.left_size(); ++u) {
    const Vertex x = h.side1()[static_cast<std::size_t>(u)].vertex;
    const int w = m.mate_left[static_cast<std::size_t>(u)];  // partner of (x,1)
    const int back = m.mate_right[static_cast<std::size_t>(u)];  // partner of (x,2); same index on side 2
    if (w == u) {
      d.parts.push_back(VertexSet{x});
      continue;
    }
    if (w >= p || back >= p)
      throw ConsistencyError("copies of " + std::to_string(x) + " are matched to a mix of copy and P vertices");
    d.parts.push_back(VertexSet{h.side1()[static_cast<std::size_t>(back)].vertex, x,
                                h.side2()[static_cast<std::size_t>(w)].vertex});
  }
  d.canonicalize();
  if (auto v = verify_decomposition(g, c, d, 3); !v)
    throw ConsistencyError("decomposition read from matching fails verification: " + v.diagnostic);
  return d;
}

enum class PartShape { Single, Pair, Path, Other };

// Shape of a part among {x}, adjacent {p1, p2}, and path p1 - x - p2.
inline PartShape part_shape(const Graph& g, const std::vector<Color>& labels, const VertexSet& part) {
  auto count = [&](Color col) {
    int k = 0;
    for (Vertex v : part) k += labels[static_cast<std::size_t>(v)] == col;
    return k;
  };
  const int p1 = count(Color::P1), p2 = count(Color::P2), x = count(Color::X);
  if (part.size() == 1 && x == 1) return PartShape::Single;
  if (part.size() == 2 && p1 == 1 && p2 == 1 && g.has_edge(part.front(), part.back())) return PartShape::Pair;
  if (part.size() == 3 && p1 == 1 && p2 == 1 && x == 1) {
    Vertex a = -1, b = -1, mid = -1;
    for (Vertex v : part) {
      auto col = labels[static_cast<std::size_t>(v)];
      (col == Color::P1 ? a : col == Color::P2 ? b : mid) = v;
    }
    if (g.has_edge(a, mid) && g.has_edge(mid, b)) return PartShape::Path;
  }
  return PartShape::Other;
}

// Rewrites a decomposition with parts of at most three vertices into the
// canonical shapes: all-X parts become singletons, and a part {p1, p2, x}
// where x misses p1 or p2 splits into {p1, p2} and {x} (connectivity then
// forces the p1-p2 edge). A part p1 - x - p2 stays, with or without a p1-p2
// edge, so that decompositions read from matchings are fixed points.
inline Decomposition normalize_decomposition(const Graph& g, const BalancedColoring& c, const Decomposition& d) {
  if (auto v = verify_decomposition(g, c, d, 3); !v)
    throw ContractViolation("normalize_decomposition: input is not a decomposition with parts <= 3: " + v.diagnostic);
  const auto labels = c.labels(g.order());
  Decomposition out;
  for (const auto& part : d.parts) {
    std::vector<Vertex> xs;
    Vertex a = -1, b = -1;
    for (Vertex v : part) {
      auto col = labels[static_cast<std::size_t>(v)];
      if (col == Color::X) xs.push_back(v);
      else (col == Color::P1 ? a : b) = v;
    }
    if (a < 0) {
      for (Vertex x : xs) out.parts.push_back(VertexSet{x});
    } else if (xs.empty()) {
      out.parts.push_back(part);
    } else if (g.has_edge(a, xs.front()) && g.has_edge(xs.front(), b)) {
      out.parts.push_back(part);
    } else {
      out.parts.push_back(VertexSet{a, b});
      out.parts.push_back(VertexSet{xs.front()});
    }
  }
  out.canonicalize();
  for (const auto& part : out.parts)
    if (part_shape(g, labels, part) == PartShape::Other)
      throw ConsistencyError("normalized part " + to_string(part) + " is not canonical");
  if (auto v = verify_decomposition(g, c, out, 3); !v)
    throw ConsistencyError("normalized decomposition fails verification: " + v.diagnostic);
  return out;
}

// Perfect matching of H matching a decomposition in canonical shapes.
inline Matching decomposition_to_matching(const Graph& g, const BalancedColoring& c, const AuxBipartite& h,
                                          const Decomposition& d) {
  const auto labels = c.labels(g.order());
  std::vector<int> left_of(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> right_of(static_cast<std::size_t>(g.order()), -1);
  for (int u = 0; u < h.left_size(); ++u) left_of[static_cast<std::size_t>(h.side1()[static_cast<std::size_t>(u)].vertex)] = u;
  for (int w = 0; w < h.right_size(); ++w) right_of[static_cast<std::size_t>(h.side2()[static_cast<std::size_t>(w)].vertex)] = w;

  std::vector<std::pair<int, int>> pairs;
  for (const auto& part : d.parts) {
    Vertex a = -1, b = -1, x = -1;
    for (Vertex v : part) {
      auto col = labels[static_cast<std::size_t>(v)];
      (col == Color::P1 ? a : col == Color::P2 ? b : x) = v;
    }
    switch (part_shape(g, labels, part)) {
      case PartShape::Single: pairs.emplace_back(left_of[static_cast<std::size_t>(x)], right_of[static_cast<std::size_t>(x)]); break;
      case PartShape::Pair: pairs.emplace_back(left_of[static_cast<std::size_t>(a)], right_of[static_cast<std::size_t>(b)]); break;
      case PartShape::Path:
        pairs.emplace_back(left_of[static_cast<std::size_t>(a)], right_of[static_cast<std::size_t>(x)]);
        pairs.emplace_back(left_of[static_cast<std::size_t>(x)], right_of[static_cast<std::size_t>(b)]);
        break;
      case PartShape::Other:
        throw ContractViolation("decomposition_to_matching: part " + to_string(part) + " is not canonical");
    }
  }
  auto m = Matching::from_pairs(h.left_size(), h.right_size(), pairs);
  if (auto v = check_matching(h, m); !v) throw ConsistencyError("reconstructed matching invalid: " + v.diagnostic);
  if (!m.is_perfect()) throw ContractViolation("decomposition_to_matching: parts do not cover V");
  return m;
}

}  // namespace bdn
