#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bdn/coloring.hpp"
#include "bdn/error.hpp"
#include "bdn/graph.hpp"

namespace bdn {

inline constexpr int kDefaultSearchBound = 10;
inline constexpr int kDefaultBdnBound = 8;

namespace detail {

// Exhaustive search for a balanced decomposition with parts of at most s
// vertices. The smallest unassigned vertex seeds the next part; parts grow
// through connected extensions only. Failed residual vertex sets are memoized.
class DecompositionSearch {
 public:
  DecompositionSearch(const Graph& g, const BalancedColoring& c, int s) : s_(s) {
    const int n = g.order();
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w : g.neighbors(u)) adj_[static_cast<std::size_t>(u)] |= bit(w);
    for (Vertex v : c.p1) p1_ |= bit(v);
    for (Vertex v : c.p2) p2_ |= bit(v);
    all_ = n == 64 ? ~0ULL : (bit(n) - 1);
  }

  std::optional<Decomposition> run() {
    parts_.clear();
    failed_.clear();
    if (!solve(all_)) return std::nullopt;
    Decomposition d;
    for (auto mask : parts_) {
      std::vector<Vertex> part;
      for (auto m = mask; m; m &= m - 1) part.push_back(std::countr_zero(m));
      d.parts.emplace_back(std::move(part));
    }
    d.canonicalize();
    return d;
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  int imbalance(std::uint64_t m) const { return std::popcount(m & p1_) - std::popcount(m & p2_); }

  bool solve(std::uint64_t remaining) {
    if (remaining == 0) return true;
    if (failed_.contains(remaining)) return false;
    const std::uint64_t seed = remaining & (~remaining + 1);
    const int v = std::countr_zero(seed);
    if (grow(remaining, seed, adj_[static_cast<std::size_t>(v)] & remaining, 0)) return true;
    failed_.insert(remaining);
    return false;
  }

  // Each connected set containing the seed is visited once: candidates are
  // taken in ascending order and, once branched on, excluded for the rest.
  bool grow(std::uint64_t remaining, std::uint64_t part, std::uint64_t cand, std::uint64_t excluded) {
    const int size = std::popcount(part);
    const int imb = imbalance(part);
    if (imb == 0) {
      parts_.push_back(part);
      if (solve(remaining & ~part)) return true;
      parts_.pop_back();
    }
    if (size == s_) return false;
    while (cand) {
      const std::uint64_t u = cand & (~cand + 1);
      cand &= ~u;
      const std::uint64_t next = part | u;
      if (std::abs(imbalance(next)) <= s_ - size - 1) {
        const std::uint64_t grown =
            (cand | adj_[static_cast<std::size_t>(std::countr_zero(u))]) & remaining & ~next & ~excluded;
        if (grow(remaining, next, grown, excluded)) return true;
      }
      excluded |= u;
    }
    return false;
  }

  int s_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t p1_ = 0, p2_ = 0, all_ = 0;
  std::vector<std::uint64_t> parts_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace detail

// A balanced decomposition of (g, c) with every part at most s vertices, if
// one exists. Throws ResourceError when n exceeds `bound`.
inline std::optional<Decomposition> exists_decomposition(const Graph& g, const BalancedColoring& c, int s,
                                                         int bound = kDefaultSearchBound) {
  if (g.order() > bound)
    throw ResourceError("exhaustive search limited to " + std::to_string(bound) + " vertices, graph has " +
                        std::to_string(g.order()));
  if (g.order() > 64) throw ResourceError("exhaustive search supports at most 64 vertices");
  if (s < 1) throw DomainError("part size bound must be positive");
  if (auto v = validate_coloring(g, c); !v) throw DomainError("exists_decomposition: " + v.diagnostic);
  detail::DecompositionSearch search(g, c, s);
  return search.run();
}

// Balanced decomposition number: a positive integer, or infinite when some
// balanced coloring admits no balanced decomposition at all.
class DecompositionNumber {
 public:
  static DecompositionNumber finite(int s) { return DecompositionNumber(s); }
  static DecompositionNumber infinite() { return DecompositionNumber(std::nullopt); }

  [[nodiscard]] bool is_infinite() const noexcept { return !value_; }
  [[nodiscard]] int value() const {
    if (!value_) throw ContractViolation("decomposition number is infinite");
    return *value_;
  }
  // True when every balanced coloring decomposes into parts of at most s vertices.
  [[nodiscard]] bool at_most(int s) const noexcept { return value_ && *value_ <= s; }

  [[nodiscard]] std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

  friend bool operator==(const DecompositionNumber&, const DecompositionNumber&) = default;

 private:
  explicit DecompositionNumber(std::optional<int> v) : value_(v) {}
  std::optional<int> value_;
};

struct BdnResult {
  DecompositionNumber number = DecompositionNumber::finite(1);
  std::optional<BalancedColoring> hardest;  // first coloring needing the final part size
};

// Exact balanced decomposition number by trying every balanced coloring.
inline BdnResult bdn_exact_detailed(const Graph& g, int bound = kDefaultBdnBound) {
  const int n = g.order();
  if (n > bound)
    throw ResourceError("exact decomposition number limited to " + std::to_string(bound) + " vertices, graph has " +
                        std::to_string(n));
  BdnResult out;
  int s = 1;
  ColoringStream stream(n);
  while (auto c = stream.next()) {
    bool raised = false;
    while (!exists_decomposition(g, *c, s, n)) {
      ++s;
      raised = true;
      if (s > n) {
        out.number = DecompositionNumber::infinite();
        out.hardest = *c;
        return out;
      }
    }
    if (raised) out.hardest = *c;
  }
  out.number = DecompositionNumber::finite(s);
  return out;
}

inline DecompositionNumber bdn_exact(const Graph& g, int bound = kDefaultBdnBound) {
  return bdn_exact_detailed(g, bound).number;
}

}  // namespace bdn
