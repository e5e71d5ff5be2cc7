#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bdn/error.hpp"
#include "bdn/graph.hpp"

namespace bdn {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

// Star with center 0 and `leaves` leaves.
inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

// Labeled graph whose edges are the set bits of `mask` over the pairs
// (0,1), (0,2), ..., (n-2,n-1) in lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1U) e.emplace_back(i, j);
  return Graph(n, e);
}

// Number of labeled graphs on n vertices as an edge-mask count.
inline std::uint64_t labeled_graph_count(int n) {
  const int pairs = n * (n - 1) / 2;
  if (pairs >= 64) throw ResourceError("too many labeled graphs on " + std::to_string(n) + " vertices");
  return std::uint64_t{1} << pairs;
}

// Calls f(graph) for every labeled graph on n vertices.
template <class F>
void for_each_labeled_graph(int n, F&& f) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t m = 0; m < total; ++m) f(graph_from_mask(n, m));
}

// Erdos-Renyi graph G(n, p).
template <class Rng>
Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

// Connected G(n, p) with p drawn uniformly from [0.15, 0.95], by rejection.
template <class Rng>
Graph random_connected_graph(int n, Rng& rng) {
  std::uniform_real_distribution<double> density(0.15, 0.95);
  for (;;) {
    Graph g = random_graph(n, density(rng), rng);
    if (is_connected(g)) return g;
  }
}

}  // namespace bdn
