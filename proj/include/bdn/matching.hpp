#pragma once

#include <concepts>
#include <cstddef>
#include <deque>
#include <limits>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "bdn/aux_graph.hpp"
#include "bdn/error.hpp"
#include "bdn/vertex_set.hpp"

namespace bdn {

// Any bipartite graph with indexed sides: left vertices 0..left_size()-1,
// right vertices 0..right_size()-1, and an ascending random-access list of
// right neighbors per left vertex.
template <class G>
concept BipartiteGraph = requires(const G& g, int u) {
  { g.left_size() } -> std::convertible_to<int>;
  { g.right_size() } -> std::convertible_to<int>;
  { g.neighbors(u) } -> std::ranges::random_access_range;
};

// Plain adjacency-list bipartite graph.
struct BipartiteAdjacency {
  int right = 0;
  std::vector<std::vector<int>> adj;

  [[nodiscard]] int left_size() const noexcept { return static_cast<int>(adj.size()); }
  [[nodiscard]] int right_size() const noexcept { return right; }
  [[nodiscard]] const std::vector<int>& neighbors(int u) const { return adj[static_cast<std::size_t>(u)]; }
};

struct Matching {
  std::vector<int> mate_left;   // side-2 partner of each side-1 vertex, or -1
  std::vector<int> mate_right;  // side-1 partner of each side-2 vertex, or -1
  std::size_t size = 0;

  [[nodiscard]] bool is_perfect() const noexcept {
    return mate_left.size() == mate_right.size() && size == mate_left.size();
  }

  [[nodiscard]] std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < mate_left.size(); ++u)
      if (mate_left[u] >= 0) out.emplace_back(static_cast<int>(u), mate_left[u]);
    return out;
  }

  static Matching from_pairs(int left, int right, const std::vector<std::pair<int, int>>& pairs) {
    Matching m{std::vector<int>(static_cast<std::size_t>(left), -1), std::vector<int>(static_cast<std::size_t>(right), -1), 0};
    for (auto [u, w] : pairs) {
      if (u < 0 || u >= left || w < 0 || w >= right)
        throw ContractViolation("matching pair (" + std::to_string(u) + "," + std::to_string(w) + ") out of range");
      if (m.mate_left[static_cast<std::size_t>(u)] >= 0 || m.mate_right[static_cast<std::size_t>(w)] >= 0)
        throw ContractViolation("vertex repeated in matching at pair (" + std::to_string(u) + "," +
                                std::to_string(w) + ")");
      m.mate_left[static_cast<std::size_t>(u)] = w;
      m.mate_right[static_cast<std::size_t>(w)] = u;
      ++m.size;
    }
    return m;
  }
};

// Every pair is an edge of g and the mate arrays agree.
template <BipartiteGraph G>
Verdict check_matching(const G& g, const Matching& m) {
  if (m.mate_left.size() != static_cast<std::size_t>(g.left_size()) ||
      m.mate_right.size() != static_cast<std::size_t>(g.right_size()))
    return Verdict::fail("matching dimensions differ from the graph");
  std::size_t count = 0;
  for (int u = 0; u < g.left_size(); ++u) {
    int w = m.mate_left[static_cast<std::size_t>(u)];
    if (w < 0) continue;
    ++count;
    if (w >= g.right_size() || m.mate_right[static_cast<std::size_t>(w)] != u)
      return Verdict::fail("mate arrays disagree at side-1 vertex " + std::to_string(u));
    const auto& nb = g.neighbors(u);
    if (std::find(std::ranges::begin(nb), std::ranges::end(nb), w) == std::ranges::end(nb))
      return Verdict::fail("pair (" + std::to_string(u) + "," + std::to_string(w) + ") is not an edge");
  }
  for (int w = 0; w < g.right_size(); ++w) {
    int u = m.mate_right[static_cast<std::size_t>(w)];
    if (u >= 0 && (u >= g.left_size() || m.mate_left[static_cast<std::size_t>(u)] != w))
      return Verdict::fail("mate arrays disagree at side-2 vertex " + std::to_string(w));
  }
  if (count != m.size) return Verdict::fail("recorded size differs from the number of pairs");
  return Verdict::pass();
}

// Hopcroft-Karp. Phases augment from free side-1 vertices in ascending order,
// scanning neighbors in ascending order, so results are reproducible. Buffers
// are reused across calls.
class HopcroftKarp {
 public:
  template <BipartiteGraph G>
  const Matching& run(const G& g) {
    const auto left = static_cast<std::size_t>(g.left_size());
    const auto right = static_cast<std::size_t>(g.right_size());
    m_.mate_left.assign(left, -1);
    m_.mate_right.assign(right, -1);
    m_.size = 0;
    dist_.resize(left);
    cursor_.resize(left);
    queue_.resize(left);

    while (layer(g)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (int u = 0; u < g.left_size(); ++u)
        if (m_.mate_left[static_cast<std::size_t>(u)] < 0 && augment(g, u)) ++m_.size;
    }
    return m_;
  }

 private:
  static constexpr int kUnreached = std::numeric_limits<int>::max();

  // BFS layering from the free side-1 vertices; true if a free side-2 vertex is reachable.
  template <BipartiteGraph G>
  bool layer(const G& g) {
    std::size_t head = 0, tail = 0;
    for (int u = 0; u < g.left_size(); ++u) {
      if (m_.mate_left[static_cast<std::size_t>(u)] < 0) {
        dist_[static_cast<std::size_t>(u)] = 0;
        queue_[tail++] = u;
      } else {
        dist_[static_cast<std::size_t>(u)] = kUnreached;
      }
    }
    free_dist_ = kUnreached;
    while (head < tail) {
      int u = queue_[head++];
      const int du = dist_[static_cast<std::size_t>(u)];
      if (du >= free_dist_) continue;
      for (int w : g.neighbors(u)) {
        int next = m_.mate_right[static_cast<std::size_t>(w)];
        if (next < 0) {
          if (free_dist_ == kUnreached) free_dist_ = du + 1;
        } else if (dist_[static_cast<std::size_t>(next)] == kUnreached) {
          dist_[static_cast<std::size_t>(next)] = du + 1;
          queue_[tail++] = next;
        }
      }
    }
    return free_dist_ != kUnreached;
  }

  template <BipartiteGraph G>
  bool augment(const G& g, int u) {
    const auto& nb = g.neighbors(u);
    const auto deg = static_cast<int>(std::ranges::size(nb));
    const int du = dist_[static_cast<std::size_t>(u)];
    for (int& i = cursor_[static_cast<std::size_t>(u)]; i < deg; ++i) {
      int w = nb[static_cast<std::size_t>(i)];
      int next = m_.mate_right[static_cast<std::size_t>(w)];
      bool ok = next < 0 ? du + 1 == free_dist_
                         : dist_[static_cast<std::size_t>(next)] == du + 1 && augment(g, next);
      if (ok) {
        m_.mate_left[static_cast<std::size_t>(u)] = w;
        m_.mate_right[static_cast<std::size_t>(w)] = u;
        ++i;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(u)] = kUnreached;
    return false;
  }

  Matching m_;
  std::vector<int> dist_, cursor_, queue_;
  int free_dist_ = kUnreached;
};

template <BipartiteGraph G>
Matching max_matching(const G& g) {
  HopcroftKarp hk;
  return hk.run(g);
}

// Vertices reachable from the unmatched side-1 vertices along alternating
// paths (any edge side 1 -> side 2, matched edge side 2 -> side 1).
struct AlternatingReach {
  std::vector<char> left;
  std::vector<char> right;
  std::size_t unmatched = 0;
};

// Throws ContractViolation if m is perfect or admits an augmenting path.
template <BipartiteGraph G>
AlternatingReach deficiency_set(const G& g, const Matching& m) {
  if (auto v = check_matching(g, m); !v) throw ContractViolation("not a matching of this graph: " + v.diagnostic);
  if (m.is_perfect()) throw ContractViolation("matching is perfect; no Hall violator exists");
  AlternatingReach r{std::vector<char>(static_cast<std::size_t>(g.left_size()), 0),
                     std::vector<char>(static_cast<std::size_t>(g.right_size()), 0), 0};
  std::deque<int> queue;
  for (int u = 0; u < g.left_size(); ++u) {
    if (m.mate_left[static_cast<std::size_t>(u)] < 0) {
      r.left[static_cast<std::size_t>(u)] = 1;
      ++r.unmatched;
      queue.push_back(u);
    }
  }
  if (r.unmatched == 0) throw ContractViolation("every side-1 vertex is matched; no side-1 Hall violator");
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (r.right[static_cast<std::size_t>(w)]) continue;
      r.right[static_cast<std::size_t>(w)] = 1;
      int next = m.mate_right[static_cast<std::size_t>(w)];
      if (next < 0) throw ContractViolation("matching is not maximum: augmenting path ends at side-2 vertex " + std::to_string(w));
      if (!r.left[static_cast<std::size_t>(next)]) {
        r.left[static_cast<std::size_t>(next)] = 1;
        queue.push_back(next);
      }
    }
  }
  return r;
}

// Subset A of P1 and B of X (standing for the copies (x,1)) whose neighborhood
// in H, split into its P2 part and its second-copy part, is smaller than |A|+|B|.
struct HallViolator {
  VertexSet a;
  VertexSet b;
  VertexSet nh_p2;
  VertexSet nh_x2;
  std::size_t deficiency = 0;  // |A| + |B| - |N_H(A u B)|
};

// Maximal violator from all unmatched side-1 vertices of a maximum matching of H.
inline HallViolator hall_violator(const AuxBipartite& h, const Matching& m) {
  auto reach = deficiency_set(h, m);
  std::vector<Vertex> a, b, nh_p2, nh_x2;
  for (int u = 0; u < h.left_size(); ++u) {
    if (!reach.left[static_cast<std::size_t>(u)]) continue;
    const auto& t = h.side1()[static_cast<std::size_t>(u)];
    (t.is_copy() ? b : a).push_back(t.vertex);
  }
  for (int w = 0; w < h.right_size(); ++w) {
    if (!reach.right[static_cast<std::size_t>(w)]) continue;
    const auto& t = h.side2()[static_cast<std::size_t>(w)];
    (t.is_copy() ? nh_x2 : nh_p2).push_back(t.vertex);
  }
  HallViolator v{VertexSet(std::move(a)), VertexSet(std::move(b)), VertexSet(std::move(nh_p2)),
                 VertexSet(std::move(nh_x2)), reach.unmatched};
  const std::size_t lhs = v.a.size() + v.b.size();
  const std::size_t rhs = v.nh_p2.size() + v.nh_x2.size();
  if (rhs + reach.unmatched != lhs)
    throw ConsistencyError("violator counts: |A|+|B| = " + std::to_string(lhs) + ", |N_H| = " + std::to_string(rhs) +
                           ", unmatched = " + std::to_string(reach.unmatched));
  if (v.a.empty()) throw ConsistencyError("Hall violator has no P1 vertex");
  return v;
}

}  // namespace bdn
