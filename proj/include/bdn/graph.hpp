#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bdn/error.hpp"
#include "bdn/vertex_set.hpp"

namespace bdn {

using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1. Immutable once built; adjacency
// lists are kept sorted so that every traversal is deterministic.
class Graph {
 public:
  Graph() = default;

  // Throws DomainError on a loop, a repeated edge, or an endpoint outside [0, n).
  Graph(int n, std::span<const Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw DomainError("vertex count must be non-negative, got " + std::to_string(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      const std::string where = "edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                                std::to_string(v) + ")";
      if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError(where + ": endpoint out of range");
      if (u == v) throw DomainError(where + ": loop");
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      auto& list = adj_[v];
      std::sort(list.begin(), list.end());
      auto dup = std::adjacent_find(list.begin(), list.end());
      if (dup != list.end()) {
        throw DomainError("duplicate edge (" + std::to_string(std::min<int>(static_cast<int>(v), *dup)) +
                          "," + std::to_string(std::max<int>(static_cast<int>(v), *dup)) + ")");
      }
      edge_count_ += list.size();
    }
    edge_count_ /= 2;
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
  }

  [[nodiscard]] bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  // Edges as (u, v) with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

namespace detail {

inline void require_subset(const Graph& g, const VertexSet& s, const char* what) {
  if (!s.empty() && (s.front() < 0 || s.back() >= g.order())) {
    throw DomainError(std::string(what) + ": vertex set " + to_string(s) + " not within [0, " +
                      std::to_string(g.order()) + ")");
  }
}

inline std::vector<char> membership(int n, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

// Vertices reachable from `start` without entering a blocked vertex.
inline std::vector<char> reach(const Graph& g, Vertex start, const std::vector<char>& blocked) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (!seen[wi] && !blocked[wi]) {
        seen[wi] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace detail

// Open neighborhood: vertices outside s adjacent to some member of s.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  detail::require_subset(g, s, "neighborhood");
  auto in = detail::membership(g.order(), s);
  std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : s)
    for (Vertex y : g.neighbors(x))
      if (!in[static_cast<std::size_t>(y)]) hit[static_cast<std::size_t>(y)] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
  return VertexSet(std::move(out));
}

// Induced subgraph; the i-th smallest member of s becomes vertex i.
inline Graph induced(const Graph& g, const VertexSet& s) {
  detail::require_subset(g, s, "induced");
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v : s) index[static_cast<std::size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (u < w && index[static_cast<std::size_t>(w)] >= 0)
        edges.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(w)]);
  return Graph(next, edges);
}

// The empty graph and the one-vertex graph count as connected.
inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> none(static_cast<std::size_t>(g.order()), 0);
  auto seen = detail::reach(g, 0, none);
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Connected components, each sorted, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> done(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> none(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (done[static_cast<std::size_t>(v)]) continue;
    auto seen = detail::reach(g, v, none);
    std::vector<Vertex> comp;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (seen[static_cast<std::size_t>(u)]) {
        comp.push_back(u);
        done[static_cast<std::size_t>(u)] = 1;
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

// Two sides left after deleting a vertex cut.
struct CutSplit {
  VertexSet first;   // component of the smallest surviving vertex
  VertexSet second;  // every other surviving vertex
};

// Returns the split when y is a vertex cut, nothing otherwise.
inline std::optional<CutSplit> is_vertex_cut(const Graph& g, const VertexSet& y) {
  detail::require_subset(g, y, "is_vertex_cut");
  auto removed = detail::membership(g.order(), y);
  Vertex start = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[static_cast<std::size_t>(v)]) {
      start = v;
      break;
    }
  }
  if (start < 0) return std::nullopt;
  auto seen = detail::reach(g, start, removed);
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto vi = static_cast<std::size_t>(v);
    if (removed[vi]) continue;
    (seen[vi] ? first : second).push_back(v);
  }
  if (second.empty()) return std::nullopt;
  return CutSplit{VertexSet(std::move(first)), VertexSet(std::move(second))};
}

namespace detail {

// Unit vertex-capacity max flow on the split-vertex network. Vertices flagged
// `removed` are absent; vertices flagged `undeletable` get unbounded capacity.
class SeparatorNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  SeparatorNetwork(const Graph& g, const std::vector<char>& removed, const std::vector<char>& undeletable)
      : n_(g.order()), head_(static_cast<std::size_t>(2 * n_), -1) {
    for (Vertex v = 0; v < n_; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      add_arc(in(v), out(v), undeletable[static_cast<std::size_t>(v)] ? kInfinite : 1);
    }
    for (Vertex u = 0; u < n_; ++u) {
      if (removed[static_cast<std::size_t>(u)]) continue;
      for (Vertex w : g.neighbors(u))
        if (!removed[static_cast<std::size_t>(w)]) add_arc(out(u), in(w), kInfinite);
    }
    base_cap_.resize(cap_.size());
    std::copy(cap_.begin(), cap_.end(), base_cap_.begin());
  }

  // Number of internally vertex-disjoint s-t paths, stopping once `limit` is reached.
  int local_connectivity(Vertex s, Vertex t, int limit) {
    std::copy(base_cap_.begin(), base_cap_.end(), cap_.begin());
    const int source = out(s);
    const int sink = in(t);
    int flow = 0;
    std::vector<int> parent_arc(head_.size());
    while (flow < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<int> queue{source};
      parent_arc[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && parent_arc[static_cast<std::size_t>(sink)] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
          int w = to_[static_cast<std::size_t>(a)];
          if (cap_[static_cast<std::size_t>(a)] > 0 && parent_arc[static_cast<std::size_t>(w)] == -1) {
            parent_arc[static_cast<std::size_t>(w)] = a;
            queue.push_back(w);
          }
        }
      }
      if (parent_arc[static_cast<std::size_t>(sink)] == -1) break;
      int bottleneck = kInfinite;
      for (int v = sink; v != source;) {
        int a = parent_arc[static_cast<std::size_t>(v)];
        bottleneck = std::min(bottleneck, cap_[static_cast<std::size_t>(a)]);
        v = to_[static_cast<std::size_t>(a ^ 1)];
      }
      if (bottleneck >= kInfinite) return kInfinite;
      for (int v = sink; v != source;) {
        int a = parent_arc[static_cast<std::size_t>(v)];
        cap_[static_cast<std::size_t>(a)] -= bottleneck;
        cap_[static_cast<std::size_t>(a ^ 1)] += bottleneck;
        v = to_[static_cast<std::size_t>(a ^ 1)];
      }
      flow += bottleneck;
    }
    return std::min(flow, limit);
  }

 private:
  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }

  void add_arc(int u, int w, int c) {
    push(u, w, c);
    push(w, u, 0);
  }
  void push(int u, int w, int c) {
    to_.push_back(w);
    cap_.push_back(c);
    next_.push_back(head_[static_cast<std::size_t>(u)]);
    head_[static_cast<std::size_t>(u)] = static_cast<int>(to_.size()) - 1;
  }

  int n_;
  std::vector<int> head_, to_, cap_, next_, base_cap_;
};

// Size of a smallest vertex set S, disjoint from the removed and undeletable
// vertices, whose deletion leaves the surviving vertices split into two
// nonempty non-adjacent sides. Nothing when no such set exists.
inline std::optional<int> separator_size(const Graph& g, const std::vector<char>& removed,
                                         const std::vector<char>& undeletable) {
  std::vector<Vertex> alive;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[static_cast<std::size_t>(v)]) alive.push_back(v);
  if (alive.size() < 2) return std::nullopt;

  auto seen = reach(g, alive.front(), removed);
  for (Vertex v : alive)
    if (!seen[static_cast<std::size_t>(v)]) return 0;

  SeparatorNetwork net(g, removed, undeletable);
  int best = SeparatorNetwork::kInfinite;
  // Some vertex among the first best+1 survivors lies outside any optimal
  // separator, so those sources suffice. An undeletable vertex is never in
  // the separator and works alone.
  std::vector<Vertex> sources;
  for (Vertex v : alive)
    if (undeletable[static_cast<std::size_t>(v)]) {
      sources.push_back(v);
      break;
    }
  const bool single_source = !sources.empty();
  if (!single_source) sources = alive;

  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (!single_source && static_cast<int>(i) > best) break;
    Vertex s = sources[i];
    for (Vertex t : alive) {
      if (t == s || g.has_edge(s, t)) continue;
      int k = net.local_connectivity(s, t, best);
      best = std::min(best, k);
      if (best == 0) return 0;
    }
  }
  if (best >= SeparatorNetwork::kInfinite) return std::nullopt;
  return best;
}

}  // namespace detail

// n > k and no vertex cut with fewer than k vertices. K_n is (n-1)-connected.
inline bool is_k_connected(const Graph& g, int k) {
  if (k < 0) return true;
  if (g.order() <= k) return false;
  if (k == 0) return true;
  std::vector<char> none(static_cast<std::size_t>(g.order()), 0);
  auto kappa = detail::separator_size(g, none, none);
  return !kappa || *kappa >= k;
}

// Vertex connectivity, or nothing for graphs without any vertex cut
// (complete graphs, n <= 1).
inline std::optional<int> vertex_connectivity(const Graph& g) {
  std::vector<char> none(static_cast<std::size_t>(g.order()), 0);
  return detail::separator_size(g, none, none);
}

// A minimum vertex cut, lexicographically smallest among all minimum cuts.
// Disconnected graphs (n >= 2) yield the empty cut.
inline std::optional<VertexSet> min_vertex_cut(const Graph& g) {
  const int n = g.order();
  std::vector<char> none(static_cast<std::size_t>(n), 0);
  auto kappa = detail::separator_size(g, none, none);
  if (!kappa) return std::nullopt;

  // Decide vertices in ascending order, keeping v whenever a minimum cut
  // containing the chosen prefix and avoiding the rejected vertices remains.
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  std::vector<char> rejected(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < n && static_cast<int>(cut.size()) < *kappa; ++v) {
    chosen[static_cast<std::size_t>(v)] = 1;
    auto rest = detail::separator_size(g, chosen, rejected);
    if (rest && *rest <= *kappa - static_cast<int>(cut.size()) - 1) {
      cut.push_back(v);
    } else {
      chosen[static_cast<std::size_t>(v)] = 0;
      rejected[static_cast<std::size_t>(v)] = 1;
    }
  }
  VertexSet result(std::move(cut));
  if (static_cast<int>(result.size()) != *kappa || !is_vertex_cut(g, result)) {
    throw ConsistencyError("min_vertex_cut: greedy selection produced " + to_string(result) +
                           ", expected a cut of size " + std::to_string(*kappa));
  }
  return result;
}

}  // namespace bdn
