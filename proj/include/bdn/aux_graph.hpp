#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bdn/coloring.hpp"
#include "bdn/error.hpp"
#include "bdn/graph.hpp"

namespace bdn {

// Vertex of the auxiliary bipartite graph: a P1 vertex, a P2 vertex, or one of
// the two copies (x, 1) / (x, 2) of an uncolored vertex.
struct AuxVertex {
  enum class Kind : std::uint8_t { P1, P2, XCopy };
  Kind kind = Kind::P1;
  Vertex vertex = 0;
  int side = 0;  // 1 or 2 for copies, 0 otherwise

  static AuxVertex p1(Vertex v) { return {Kind::P1, v, 0}; }
  static AuxVertex p2(Vertex v) { return {Kind::P2, v, 0}; }
  static AuxVertex copy(Vertex x, int side) { return {Kind::XCopy, x, side}; }

  [[nodiscard]] bool is_copy() const noexcept { return kind == Kind::XCopy; }

  friend bool operator==(const AuxVertex&, const AuxVertex&) = default;
};

inline std::string to_string(const AuxVertex& a) {
  switch (a.kind) {
    case AuxVertex::Kind::P1: return "p1:" + std::to_string(a.vertex);
    case AuxVertex::Kind::P2: return "p2:" + std::to_string(a.vertex);
    case AuxVertex::Kind::XCopy: return "x" + std::to_string(a.side) + ":" + std::to_string(a.vertex);
  }
  return "?";
}

// Bipartite graph H of a colored graph. Side 1 holds the P1 vertices then the
// first copies of X; side 2 holds the P2 vertices then the second copies, each
// block in ascending vertex order. Adjacency lists are ascending.
class AuxBipartite {
 public:
  AuxBipartite() = default;
  AuxBipartite(std::vector<AuxVertex> side1, std::vector<AuxVertex> side2, std::size_t p_count)
      : side1_(std::move(side1)), side2_(std::move(side2)), p_count_(p_count), adj_(side1_.size()) {}

  [[nodiscard]] int left_size() const noexcept { return static_cast<int>(side1_.size()); }
  [[nodiscard]] int right_size() const noexcept { return static_cast<int>(side2_.size()); }
  [[nodiscard]] std::span<const int> neighbors(int left) const { return adj_[static_cast<std::size_t>(left)]; }

  [[nodiscard]] const std::vector<AuxVertex>& side1() const noexcept { return side1_; }
  [[nodiscard]] const std::vector<AuxVertex>& side2() const noexcept { return side2_; }

  // |P1| (= |P2|); copies start at this index on both sides.
  [[nodiscard]] std::size_t p_count() const noexcept { return p_count_; }

  [[nodiscard]] std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& list : adj_) m += list.size();
    return m;
  }

  [[nodiscard]] bool has_edge(int left, int right) const {
    const auto& list = adj_[static_cast<std::size_t>(left)];
    return std::binary_search(list.begin(), list.end(), right);
  }

  // (side1 index, side2 index) pairs, sorted.
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < left_size(); ++u)
      for (int w : neighbors(u)) out.emplace_back(u, w);
    return out;
  }

  // Side indices of a vertex's two copies; -1 if the vertex is not uncolored.
  [[nodiscard]] int copy_index(Vertex x) const {
    auto first = side1_.begin() + static_cast<std::ptrdiff_t>(p_count_);
    auto it = std::lower_bound(first, side1_.end(), x,
                               [](const AuxVertex& a, Vertex v) { return a.vertex < v; });
    if (it == side1_.end() || it->vertex != x) return -1;
    return static_cast<int>(it - side1_.begin());
  }

  void add_edge(int left, int right) { adj_[static_cast<std::size_t>(left)].push_back(right); }
  void finish() {
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

 private:
  std::vector<AuxVertex> side1_;
  std::vector<AuxVertex> side2_;
  std::size_t p_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Builds H from G and a balanced coloring. Edges come from four families:
// P1-P2 edges of G, P1-(x,2) and (x,1)-P2 for G-edges touching X, and the
// copy edge (x,1)-(x,2). Edges inside a color class are not represented.
inline AuxBipartite build_aux(const Graph& g, const BalancedColoring& c) {
  if (auto v = validate_coloring(g, c); !v) throw DomainError("build_aux: invalid coloring: " + v.diagnostic);

  std::vector<AuxVertex> side1, side2;
  side1.reserve(c.p1.size() + c.x.size());
  side2.reserve(c.p2.size() + c.x.size());
  std::vector<int> left_of(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> right_of(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : c.p1) {
    left_of[static_cast<std::size_t>(v)] = static_cast<int>(side1.size());
    side1.push_back(AuxVertex::p1(v));
  }
  for (Vertex v : c.p2) {
    right_of[static_cast<std::size_t>(v)] = static_cast<int>(side2.size());
    side2.push_back(AuxVertex::p2(v));
  }
  for (Vertex v : c.x) {
    left_of[static_cast<std::size_t>(v)] = static_cast<int>(side1.size());
    right_of[static_cast<std::size_t>(v)] = static_cast<int>(side2.size());
    side1.push_back(AuxVertex::copy(v, 1));
    side2.push_back(AuxVertex::copy(v, 2));
  }

  const auto labels = c.labels(g.order());
  AuxBipartite h(std::move(side1), std::move(side2), c.p1.size());
  for (Vertex u = 0; u < g.order(); ++u) {
    const Color cu = labels[static_cast<std::size_t>(u)];
    if (cu == Color::P2) continue;
    const int left = left_of[static_cast<std::size_t>(u)];
    for (Vertex w : g.neighbors(u)) {
      const Color cw = labels[static_cast<std::size_t>(w)];
      // Side-1 vertex u (P1 or (u,1)) meets side-2 vertex w (P2 or (w,2));
      // X-X edges of G are excluded.
      const bool joins = (cu == Color::P1 && cw != Color::P1) || (cu == Color::X && cw == Color::P2);
      if (joins) h.add_edge(left, right_of[static_cast<std::size_t>(w)]);
    }
    if (cu == Color::X) h.add_edge(left, right_of[static_cast<std::size_t>(u)]);
  }
  h.finish();
  return h;
}

}  // namespace bdn
