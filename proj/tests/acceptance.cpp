// Acceptance driver: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bdn/bdn.hpp"
#include "oracles.hpp"

using namespace bdn;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::uint32_t mask_of(const VertexSet& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

std::string describe(const Graph& g, const BalancedColoring& c) {
  return "n=" + std::to_string(g.order()) + " edges=" + graph_to_json(g)["edges"].dump() + " p1=" + to_string(c.p1) +
         " p2=" + to_string(c.p2);
}

// Independent check of a balanced decomposition given as vertex masks.
bool valid_parts(const Graph& g, const BalancedColoring& c, const std::vector<std::uint32_t>& parts, int s) {
  const std::uint32_t p1 = mask_of(c.p1), p2 = mask_of(c.p2);
  std::uint32_t seen = 0;
  for (auto part : parts) {
    if (part == 0 || (seen & part) || std::popcount(part) > s) return false;
    if (std::popcount(part & p1) != std::popcount(part & p2)) return false;
    if (oracle::component_count(g, part) != 1) return false;
    seen |= part;
  }
  return seen == (g.order() == 32 ? ~0u : (1u << g.order()) - 1);
}

std::vector<std::uint32_t> parts_of(const Decomposition& d) {
  std::vector<std::uint32_t> out;
  for (const auto& p : d.parts) out.push_back(mask_of(p));
  return out;
}

// All partitions of {0..n-1} into blocks of at most three vertices.
void for_each_small_partition(int n, const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  std::vector<std::uint32_t> blocks;
  const std::uint32_t all = (1u << n) - 1;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t used) {
    if (used == all) {
      f(blocks);
      return;
    }
    const int first = std::countr_zero(~used);
    const std::uint32_t rest = all & ~used & ~(1u << first);
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      if (std::popcount(sub) <= 2) {
        blocks.push_back(sub | (1u << first));
        rec(used | blocks.back());
        blocks.pop_back();
      }
      if (sub == 0) break;
    }
  };
  rec(0);
}

template <class F>
void for_each_graph(int nmin, int nmax, bool connected_only, F&& f) {
  for (int n = nmin; n <= nmax; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!connected_only || oracle::component_count(g, (1u << n) - 1) <= 1) f(g);
    });
}

Outcome forward_direction() {
  std::uint64_t graphs = 0, cases = 0, failures = 0;
  std::string first;
  for_each_graph(3, 5, true, [&](const Graph& g) {
    const int n = g.order();
    if (!oracle::k_connected(g, n / 2)) return;
    ++graphs;
    ColoringStream stream(n);
    while (auto c = stream.next()) {
      ++cases;
      bool ok = false;
      try {
        auto r = decompose_or_certify(g, *c);
        ok = r.decomposed() && verify_decomposition(g, *c, r.decomposition(), 3) &&
             valid_parts(g, *c, parts_of(r.decomposition()), 3);
      } catch (const std::exception&) {
      }
      if (!ok && failures++ == 0) first = describe(g, *c);
    }
  });
  return {failures == 0 && graphs > 0, std::to_string(graphs) + " graphs, " + std::to_string(cases) + " colorings, " +
                                           std::to_string(failures) + " failures" + (first.empty() ? "" : "; first " + first)};
}

Outcome converse_direction() {
  std::uint64_t graphs = 0, failures = 0;
  std::string first;
  for_each_graph(3, 6, true, [&](const Graph& g) {
    const int n = g.order();
    if (oracle::k_connected(g, n / 2)) return;
    ++graphs;
    bool ok = false;
    BalancedColoring c;
    try {
      c = adversarial_coloring(g);
      ok = validate_coloring(g, c) && c.p1.size() + c.p2.size() + c.x.size() == static_cast<std::size_t>(n) &&
           !exists_decomposition(g, c, 3);
    } catch (const std::exception&) {
    }
    if (!ok && failures++ == 0) first = describe(g, c);
  });
  return {failures == 0 && graphs > 0,
          std::to_string(graphs) + " graphs, " + std::to_string(failures) + " failures" + (first.empty() ? "" : "; first " + first)};
}

bool certificate_case(const Graph& g, const BalancedColoring& c, HopcroftKarp& hk, std::uint64_t& deficient) {
  auto h = build_aux(g, c);
  const auto& m = hk.run(h);
  if (m.is_perfect()) return true;
  ++deficient;
  try {
    auto cert = violator_to_certificate(g, c, hall_violator(h, m));
    const int n = g.order();
    const std::uint32_t cut = mask_of(cert.cut);
    if (!verify_certificate(g, cert)) return false;
    if (!oracle::is_cut(g, cut)) return false;
    if (std::popcount(cut) > n / 2 - 1) return false;
    if (certificate_counts(c, cert).cut_sum > static_cast<std::size_t>(n - 2)) return false;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

Outcome certificate_soundness() {
  HopcroftKarp hk;
  std::uint64_t exhaustive = 0, sampled = 0, deficient = 0, failures = 0;
  std::string first;
  for_each_graph(3, 5, true, [&](const Graph& g) {
    ColoringStream stream(g.order());
    while (auto c = stream.next()) {
      ++exhaustive;
      if (!certificate_case(g, *c, hk, deficient) && failures++ == 0) first = describe(g, *c);
    }
  });
  const std::uint64_t exhaustive_deficient = deficient;
  std::mt19937_64 rng(20240601);
  // Sample until 10^4 sampled pairs lack a perfect matching.
  for (int n = 6; deficient - exhaustive_deficient < 10000; n = n == 8 ? 6 : n + 1) {
    std::uniform_int_distribution<std::uint64_t> pick(0, coloring_count(n) - 1);
    Graph g = random_connected_graph(n, rng);
    auto c = BalancedColoring::from_labels(ColoringStream::unrank(n, pick(rng)));
    ++sampled;
    if (!certificate_case(g, c, hk, deficient) && failures++ == 0) first = describe(g, c);
  }
  std::ostringstream os;
  os << exhaustive << " exhaustive pairs (" << exhaustive_deficient << " without perfect matching), " << sampled
     << " sampled pairs at n=6..8 (" << deficient - exhaustive_deficient << " without perfect matching), " << failures
     << " failures";
  if (!first.empty()) os << "; first " << first;
  return {failures == 0 && deficient - exhaustive_deficient >= 10000, os.str()};
}

Outcome matching_oracle_equivalence() {
  HopcroftKarp hk;
  std::uint64_t cases = 0, perfect = 0, disagreements = 0;
  std::string first;
  for_each_graph(1, 5, false, [&](const Graph& g) {
    ColoringStream stream(g.order());
    while (auto c = stream.next()) {
      ++cases;
      const bool pm = hk.run(build_aux(g, *c)).is_perfect();
      perfect += pm;
      if (pm != exists_decomposition(g, *c, 3).has_value() && disagreements++ == 0) first = describe(g, *c);
    }
  });
  return {disagreements == 0, std::to_string(cases) + " pairs, " + std::to_string(perfect) + " with perfect matching, " +
                                  std::to_string(disagreements) + " disagreements" +
                                  (first.empty() ? "" : "; first " + first)};
}

Outcome named_values() {
  struct Named {
    const char* name;
    Graph g;
    int expected;
  };
  const Named named[] = {{"P3", path_graph(3), 3},
                         {"K3", complete_graph(3), 2},
                         {"K4", complete_graph(4), 2},
                         {"C4", cycle_graph(4), 3},
                         {"K1,3", star_graph(3), 4}};
  Outcome out;
  HopcroftKarp hk;
  for (const auto& [name, g, expected] : named) {
    auto first = bdn_exact_detailed(g);
    auto second = bdn_exact_detailed(g);
    bool all_perfect = true;
    ColoringStream stream(g.order());
    while (auto c = stream.next()) all_perfect = all_perfect && hk.run(build_aux(g, *c)).is_perfect();
    const bool stable = first.number == second.number && first.hardest == second.hardest;
    const bool agrees = all_perfect == first.number.at_most(3);
    const bool matches = first.number == DecompositionNumber::finite(expected);
    out.ok = out.ok && stable && agrees && matches;
    if (!out.detail.empty()) out.detail += ", ";
    out.detail += std::string(name) + "=" + first.number.to_string();
    if (!stable) out.detail += " (unstable)";
    if (!agrees) out.detail += " (matching decision disagrees)";
    if (!matches) out.detail += " (expected " + std::to_string(expected) + ")";
  }
  return out;
}

// Rows are bitmasks with column 0 as the most significant of `cols` bits.
// Enumerates matrices whose rows are nonincreasing and whose columns, read
// top-down, are nonincreasing. Every 0/1 matrix has such a row and column
// permutation. inner(r, m) runs once rows 0..r-1 are fixed.
template <class Inner, class Leaf>
void for_each_doubly_sorted(int rows, int cols, Inner&& inner, Leaf&& leaf) {
  if (rows == 0) return;
  std::vector<std::uint32_t> m(static_cast<std::size_t>(rows));
  // Bit p stands for the adjacent columns held in bits p+1 and p.
  const std::uint32_t pairs = (1u << (cols - 1)) - 1;
  std::function<void(int, std::uint32_t, std::uint32_t)> rec = [&](int r, std::uint32_t cap, std::uint32_t tied) {
    inner(r, m.data());
    for (std::uint32_t row = cap + 1; row-- > 0;) {
      const std::uint32_t left = (row >> 1) & pairs, right = row & pairs;
      if (right & ~left & tied) continue;
      m[static_cast<std::size_t>(r)] = row;
      if (r == rows - 1) leaf(m.data());
      else rec(r + 1, row, tied & ~(left & ~right));
    }
  };
  rec(0, (1u << cols) - 1, pairs);
}

std::uint64_t matrix_key(const std::vector<std::uint32_t>& rows, int cols) {
  std::uint64_t k = 0;
  for (auto r : rows) k = (k << cols) | r;
  return k;
}

// Row and column sorting repeated until stable.
std::vector<std::uint32_t> doubly_sort(std::vector<std::uint32_t> rows, int cols) {
  for (;;) {
    auto before = rows;
    std::sort(rows.begin(), rows.end(), std::greater<>());
    std::vector<std::uint32_t> colkeys(static_cast<std::size_t>(cols), 0);
    for (int j = 0; j < cols; ++j)
      for (auto r : rows) colkeys[static_cast<std::size_t>(j)] = (colkeys[static_cast<std::size_t>(j)] << 1) | ((r >> (cols - 1 - j)) & 1);
    std::sort(colkeys.begin(), colkeys.end(), std::greater<>());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::uint32_t r = 0;
      for (int j = 0; j < cols; ++j) r = (r << 1) | ((colkeys[static_cast<std::size_t>(j)] >> (rows.size() - 1 - i)) & 1);
      rows[i] = r;
    }
    if (rows == before) return rows;
  }
}

struct MaskRows {
  const std::uint32_t* rows;
  int left;
  int right;
  const std::vector<std::vector<int>>* table;
  [[nodiscard]] int left_size() const { return left; }
  [[nodiscard]] int right_size() const { return right; }
  [[nodiscard]] const std::vector<int>& neighbors(int u) const { return (*table)[rows[u]]; }
};

Outcome matching_correctness() {
  constexpr int kSide = 7;
  std::vector<std::vector<int>> table(1u << kSide);
  for (std::uint32_t m = 0; m < table.size(); ++m)
    for (int b = 0; b < kSide; ++b)
      if (m >> b & 1) table[m].push_back(b);

  HopcroftKarp hk;
  std::uint64_t matrices = 0, disagreements = 0, coverage_gaps = 0;
  std::string first;
  const auto start = std::chrono::steady_clock::now();

  for (int rows = 1; rows <= kSide; ++rows)
    for (int cols = 1; cols <= kSide; ++cols) {
      // Reachable sets of used columns after each prefix of rows.
      std::vector<std::vector<std::uint8_t>> reach(static_cast<std::size_t>(rows));
      std::vector<char> seen(1u << cols);
      int best = 0;
      std::uint32_t core = 0;  // columns used by every maximum partial matching
      auto inner = [&](int r, const std::uint32_t* m) {
        auto& level = reach[static_cast<std::size_t>(r)];
        level.clear();
        if (r == 0) {
          level.push_back(0);
        } else {
          std::fill(seen.begin(), seen.end(), 0);
          for (auto u : reach[static_cast<std::size_t>(r) - 1]) {
            if (!seen[u]) seen[u] = 1, level.push_back(u);
            for (std::uint32_t free = m[r - 1] & ~std::uint32_t{u}; free; free &= free - 1) {
              auto w = static_cast<std::uint8_t>(u | (free & (~free + 1)));
              if (!seen[w]) seen[w] = 1, level.push_back(w);
            }
          }
        }
        if (r == rows - 1) {
          best = 0;
          for (auto u : level) best = std::max(best, std::popcount(unsigned{u}));
          core = (1u << cols) - 1;
          for (auto u : level)
            if (std::popcount(unsigned{u}) == best) core &= u;
        }
      };
      std::set<std::uint64_t> enumerated;
      const bool audit = rows * cols <= 20;
      auto leaf = [&](const std::uint32_t* m) {
        ++matrices;
        const int expected = best + ((m[rows - 1] & ~core) ? 1 : 0);
        const int got = static_cast<int>(hk.run(MaskRows{m, rows, cols, &table}).size);
        if (got != expected && disagreements++ == 0) {
          first = std::to_string(rows) + "x" + std::to_string(cols) + " rows";
          for (int r = 0; r < rows; ++r) first += " " + std::to_string(m[r]);
        }
        if (audit) enumerated.insert(matrix_key(std::vector<std::uint32_t>(m, m + rows), cols));
      };
      for_each_doubly_sorted(rows, cols, inner, leaf);
      if (audit) {
        const std::uint64_t total = std::uint64_t{1} << (rows * cols);
        for (std::uint64_t bits = 0; bits < total; ++bits) {
          std::vector<std::uint32_t> r(static_cast<std::size_t>(rows));
          for (int i = 0; i < rows; ++i) r[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((bits >> (i * cols)) & ((1u << cols) - 1));
          if (!enumerated.count(matrix_key(doubly_sort(r, cols), cols))) ++coverage_gaps;
        }
      }
    }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::mt19937_64 rng(7);
  std::uint64_t random_disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<int> side(1, 10);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    const int left = side(rng), right = side(rng);
    const double p = density(rng);
    std::bernoulli_distribution coin(p);
    BipartiteAdjacency g{right, std::vector<std::vector<int>>(static_cast<std::size_t>(left))};
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(left), 0);
    for (int u = 0; u < left; ++u)
      for (int w = 0; w < right; ++w)
        if (coin(rng)) g.adj[static_cast<std::size_t>(u)].push_back(w), rows[static_cast<std::size_t>(u)] |= 1u << w;
    const auto& m = hk.run(g);
    if ((!check_matching(g, m) || static_cast<int>(m.size) != oracle::max_matching_size(left, right, rows)) &&
        random_disagreements++ == 0 && first.empty())
      first = "random instance " + std::to_string(i);
  }
  std::ostringstream os;
  os << matrices << " doubly sorted matrices up to 7x7 in " << static_cast<int>(seconds) << " s, " << disagreements
     << " disagreements, " << coverage_gaps << " coverage gaps; 1000 random instances up to 10x10, " << random_disagreements
     << " disagreements";
  if (!first.empty()) os << "; first " << first;
  return {disagreements == 0 && coverage_gaps == 0 && random_disagreements == 0, os.str()};
}

bool canonical_shape(const Graph& g, const BalancedColoring& c, std::uint32_t part) {
  const std::uint32_t p1 = mask_of(c.p1), p2 = mask_of(c.p2), x = mask_of(c.x);
  auto adj = [&](std::uint32_t a, std::uint32_t b) {
    return g.has_edge(std::countr_zero(a), std::countr_zero(b));
  };
  const std::uint32_t a = part & p1, b = part & p2, m = part & x;
  if (std::popcount(part) == 1) return m != 0;
  if (std::popcount(part) == 2) return a && b && adj(a, b);
  if (std::popcount(part) == 3) return a && b && m && adj(a, m) && adj(m, b);
  return false;
}

Outcome normalization() {
  std::uint64_t decompositions = 0, failures = 0, disagreements = 0;
  std::string first;
  for_each_graph(1, 5, false, [&](const Graph& g) {
    ColoringStream stream(g.order());
    while (auto c = stream.next()) {
      bool any = false;
      const AuxBipartite h = build_aux(g, *c);
      for_each_small_partition(g.order(), [&](const std::vector<std::uint32_t>& blocks) {
        if (!valid_parts(g, *c, blocks, 3)) return;
        any = true;
        ++decompositions;
        bool ok = false;
        try {
          Decomposition d;
          for (auto b : blocks) {
            std::vector<Vertex> vs;
            for (int v = 0; v < g.order(); ++v)
              if (b >> v & 1) vs.push_back(v);
            d.parts.emplace_back(vs);
          }
          auto norm = normalize_decomposition(g, *c, d);
          const auto masks = parts_of(norm);
          ok = valid_parts(g, *c, masks, 3) &&
               std::all_of(masks.begin(), masks.end(), [&](auto p) { return canonical_shape(g, *c, p); });
          if (ok) {
            auto m = decomposition_to_matching(g, *c, h, norm);
            ok = m.is_perfect() && check_matching(h, m);
          }
        } catch (const std::exception&) {
        }
        if (!ok && failures++ == 0) first = describe(g, *c);
      });
      if (any != exists_decomposition(g, *c, 3).has_value()) ++disagreements;
    }
  });
  return {failures == 0 && disagreements == 0 && decompositions > 0,
          std::to_string(decompositions) + " decompositions, " + std::to_string(failures) + " failures, " +
              std::to_string(disagreements) + " oracle disagreements" + (first.empty() ? "" : "; first " + first)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 forward: floor(n/2)-connected graphs, n=3..5, always decompose", forward_direction},
      {"2 converse: adversarial coloring blocks parts <= 3, n=3..6", converse_direction},
      {"3 certificate soundness", certificate_soundness},
      {"4 perfect matching <=> oracle decomposition, n<=5", matching_oracle_equivalence},
      {"5 named exact values", named_values},
      {"6 maximum matching correctness", matching_correctness},
      {"7 normalization and matching reconstruction, n<=5", normalization},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.1f s)\n", out.ok ? "PASS" : "FAIL", name, out.detail.c_str(), s);
    std::fflush(stdout);
    failed += !out.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
