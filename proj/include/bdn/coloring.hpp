#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bdn/error.hpp"
#include "bdn/graph.hpp"
#include "bdn/vertex_set.hpp"

namespace bdn {

enum class Color : std::uint8_t { P1 = 0, P2 = 1, X = 2 };

// Partition V = P1 + P2 + X with |P1| = |P2|. Construction does not validate;
// see validate_coloring.
struct BalancedColoring {
  VertexSet p1;
  VertexSet p2;
  VertexSet x;

  // Label per vertex. Assumes the coloring is valid for a graph of order n.
  [[nodiscard]] std::vector<Color> labels(int n) const {
    std::vector<Color> out(static_cast<std::size_t>(n), Color::X);
    for (Vertex v : p1) out[static_cast<std::size_t>(v)] = Color::P1;
    for (Vertex v : p2) out[static_cast<std::size_t>(v)] = Color::P2;
    return out;
  }

  static BalancedColoring from_labels(const std::vector<Color>& labels) {
    std::vector<Vertex> a, b, c;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      auto& bucket = labels[v] == Color::P1 ? a : labels[v] == Color::P2 ? b : c;
      bucket.push_back(static_cast<Vertex>(v));
    }
    return {VertexSet(std::move(a)), VertexSet(std::move(b)), VertexSet(std::move(c))};
  }

  friend bool operator==(const BalancedColoring&, const BalancedColoring&) = default;
};

// Parts of a balanced decomposition, each sorted; parts ordered by smallest member.
struct Decomposition {
  std::vector<VertexSet> parts;

  [[nodiscard]] std::size_t max_part_size() const {
    std::size_t m = 0;
    for (const auto& p : parts) m = std::max(m, p.size());
    return m;
  }

  void canonicalize() { std::sort(parts.begin(), parts.end()); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Verdict validate_coloring(const Graph& g, const BalancedColoring& c) {
  const struct {
    const VertexSet* set;
    const char* name;
  } classes[] = {{&c.p1, "p1"}, {&c.p2, "p2"}, {&c.x, "x"}};
  for (const auto& cls : classes) {
    if (!cls.set->empty() && (cls.set->front() < 0 || cls.set->back() >= g.order()))
      return Verdict::fail(std::string(cls.name) + " contains a vertex outside [0, " +
                           std::to_string(g.order()) + ")");
  }
  if (!disjoint(c.p1, c.p2)) return Verdict::fail("p1 and p2 overlap at " + to_string(set_intersection(c.p1, c.p2)));
  if (!disjoint(c.p1, c.x)) return Verdict::fail("p1 and x overlap at " + to_string(set_intersection(c.p1, c.x)));
  if (!disjoint(c.p2, c.x)) return Verdict::fail("p2 and x overlap at " + to_string(set_intersection(c.p2, c.x)));
  const std::size_t covered = c.p1.size() + c.p2.size() + c.x.size();
  if (covered != static_cast<std::size_t>(g.order())) {
    auto missing = set_difference(VertexSet::range(g.order()), set_union(set_union(c.p1, c.p2), c.x));
    return Verdict::fail("classes do not cover V; missing " + to_string(missing));
  }
  if (c.p1.size() != c.p2.size())
    return Verdict::fail("|p1| = " + std::to_string(c.p1.size()) + " differs from |p2| = " +
                         std::to_string(c.p2.size()));
  return Verdict::pass();
}

// Checks d against (g, c): parts nonempty, disjoint, covering V, each inducing a
// connected subgraph with as many P1 as P2 vertices, none larger than s.
inline Verdict verify_decomposition(const Graph& g, const BalancedColoring& c, const Decomposition& d,
                                    std::size_t s) {
  const auto labels = c.labels(g.order());
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& part = d.parts[i];
    const std::string name = "part " + std::to_string(i) + " " + to_string(part);
    if (part.empty()) return Verdict::fail(name + " is empty");
    if (part.front() < 0 || part.back() >= g.order()) return Verdict::fail(name + " has an out-of-range vertex");
    if (part.size() > s)
      return Verdict::fail(name + " has " + std::to_string(part.size()) + " vertices, more than " +
                           std::to_string(s));
    int balance = 0;
    for (Vertex v : part) {
      auto vi = static_cast<std::size_t>(v);
      if (owner[vi] >= 0) return Verdict::fail(name + " overlaps part " + std::to_string(owner[vi]));
      owner[vi] = static_cast<int>(i);
      if (labels[vi] == Color::P1) ++balance;
      if (labels[vi] == Color::P2) --balance;
    }
    if (balance != 0) return Verdict::fail(name + " is unbalanced (|P1| - |P2| = " + std::to_string(balance) + ")");
    if (!is_connected(induced(g, part))) return Verdict::fail(name + " does not induce a connected subgraph");
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (owner[static_cast<std::size_t>(v)] < 0) return Verdict::fail("vertex " + std::to_string(v) + " is in no part");
  return Verdict::pass();
}

// Number of balanced colorings of an n-vertex graph: sum over k of
// n! / (k! k! (n-2k)!). Throws ResourceError on 64-bit overflow.
inline std::uint64_t coloring_count(int n) {
  auto multinomial = [](int a, int b, int c) {
    // (a+b+c)! / (a! b! c!) as a product of binomials.
    auto binom = [](int top, int k) {
      unsigned __int128 r = 1;
      for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(top - k + i) / static_cast<unsigned>(i);
      return r;
    };
    unsigned __int128 r = binom(a + b + c, a) * binom(b + c, b);
    return r;
  };
  unsigned __int128 total = 0;
  for (int k = 0; 2 * k <= n; ++k) total += multinomial(k, k, n - 2 * k);
  if (total > std::numeric_limits<std::uint64_t>::max()) throw ResourceError("coloring count overflows 64 bits");
  return static_cast<std::uint64_t>(total);
}

// Deterministic stream of every balanced coloring of an n-vertex graph:
// k = |P1| ascending, then label vectors (P1 < P2 < X) in lexicographic order.
// A stream may be restricted to an index range for splitting work.
class ColoringStream {
 public:
  explicit ColoringStream(int n) : ColoringStream(n, 0, coloring_count(n)) {}

  ColoringStream(int n, std::uint64_t first, std::uint64_t last)
      : n_(n), index_(first), last_(std::min(last, coloring_count(n))) {
    if (index_ < last_) labels_ = unrank(n_, index_);
  }

  std::optional<BalancedColoring> next() {
    if (index_ >= last_) return std::nullopt;
    auto out = BalancedColoring::from_labels(labels_);
    ++index_;
    if (index_ < last_ && !std::next_permutation(labels_.begin(), labels_.end())) {
      const int k = static_cast<int>(std::count(labels_.begin(), labels_.end(), Color::P1)) + 1;
      labels_ = first_of_block(n_, k);
    }
    return out;
  }

  [[nodiscard]] std::uint64_t position() const noexcept { return index_; }

  // The coloring at a given index of the full stream.
  static std::vector<Color> unrank(int n, std::uint64_t index) {
    int k = 0;
    for (;; ++k) {
      auto block = block_size(n, k);
      if (index < block) break;
      index -= block;
    }
    int counts[3] = {k, k, n - 2 * k};
    std::vector<Color> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
      for (int c = 0; c < 3; ++c) {
        if (counts[c] == 0) continue;
        --counts[c];
        auto below = arrangements(counts[0], counts[1], counts[2]);
        if (index < below) {
          out.push_back(static_cast<Color>(c));
          break;
        }
        index -= below;
        ++counts[c];
      }
    }
    return out;
  }

 private:
  static std::uint64_t arrangements(int a, int b, int c) {
    unsigned __int128 r = 1;
    int t = 0;
    for (int part : {a, b, c})
      for (int i = 1; i <= part; ++i) r = r * static_cast<unsigned>(++t) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
  }
  static std::uint64_t block_size(int n, int k) { return arrangements(k, k, n - 2 * k); }

  static std::vector<Color> first_of_block(int n, int k) {
    std::vector<Color> out;
    out.insert(out.end(), static_cast<std::size_t>(k), Color::P1);
    out.insert(out.end(), static_cast<std::size_t>(k), Color::P2);
    out.insert(out.end(), static_cast<std::size_t>(n - 2 * k), Color::X);
    return out;
  }

  int n_;
  std::uint64_t index_;
  std::uint64_t last_;
  std::vector<Color> labels_;
};

// All balanced colorings in stream order.
inline std::vector<BalancedColoring> enumerate_balanced_colorings(const Graph& g) {
  std::vector<BalancedColoring> out;
  ColoringStream stream(g.order());
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

// Details of the adversarial construction, kept for reporting.
struct AdversarialColoring {
  BalancedColoring coloring;
  VertexSet cut;    // minimum vertex cut Y
  VertexSet small;  // G1, the smaller side
  VertexSet large;  // G2
  int l = 0;        // min(|Y|, |G1| - 1)
};

// Coloring of a connected graph that is not floor(n/2)-connected for which
// every balanced decomposition has a part with at least 4 vertices.
// Throws NotApplicable naming the failed precondition.
inline AdversarialColoring adversarial_construction(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw NotApplicable("adversarial coloring needs at least 3 vertices, graph has " + std::to_string(n));
  if (!is_connected(g)) throw NotApplicable("adversarial coloring needs a connected graph");
  if (is_k_connected(g, n / 2))
    throw NotApplicable("graph is " + std::to_string(n / 2) + "-connected (floor(n/2)); no adversarial coloring exists");

  auto cut = min_vertex_cut(g);
  if (!cut) throw ConsistencyError("graph is not floor(n/2)-connected but has no vertex cut");
  if (2 * static_cast<int>(cut->size()) > n - 2)
    throw ConsistencyError("minimum cut " + to_string(*cut) + " violates 2|Y| <= n - 2");
  auto split = is_vertex_cut(g, *cut);
  if (!split) throw ConsistencyError("minimum cut " + to_string(*cut) + " does not separate the graph");

  // Ties keep the side holding the smallest surviving vertex as G1.
  const bool swap = split->second.size() < split->first.size();
  const VertexSet& small = swap ? split->second : split->first;
  const VertexSet& large = swap ? split->first : split->second;

  const int y = static_cast<int>(cut->size());
  const int l = std::min(y, static_cast<int>(small.size()) - 1);
  const int top_up = y + 1 - l;
  if (static_cast<int>(large.size()) < top_up)
    throw ConsistencyError("larger side has " + std::to_string(large.size()) + " vertices, need " +
                           std::to_string(top_up));

  std::vector<Vertex> p1, p2, x;
  for (int i = 0; i < y; ++i) (i < l ? p1 : p2).push_back(cut->members()[static_cast<std::size_t>(i)]);
  for (int i = 0; i < static_cast<int>(small.size()); ++i)
    (i < l + 1 ? p2 : x).push_back(small.members()[static_cast<std::size_t>(i)]);
  for (int i = 0; i < static_cast<int>(large.size()); ++i)
    (i < top_up ? p1 : x).push_back(large.members()[static_cast<std::size_t>(i)]);

  AdversarialColoring out{{VertexSet(std::move(p1)), VertexSet(std::move(p2)), VertexSet(std::move(x))},
                          *cut, small, large, l};
  if (auto v = validate_coloring(g, out.coloring); !v)
    throw ConsistencyError("adversarial coloring is not balanced: " + v.diagnostic);
  return out;
}

inline BalancedColoring adversarial_coloring(const Graph& g) { return adversarial_construction(g).coloring; }

}  // namespace bdn
