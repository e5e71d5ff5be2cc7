#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bdn/aux_graph.hpp"
#include "bdn/certificate.hpp"
#include "bdn/coloring.hpp"
#include "bdn/generators.hpp"
#include "bdn/graph.hpp"
#include "bdn/matching.hpp"
#include "bdn/oracle.hpp"
#include "bdn/reduction.hpp"
#include "bdn/solver.hpp"

namespace bdn {

inline constexpr int kSweepExhaustiveMax = 6;
inline constexpr int kSweepSampledMax = 8;

struct SweepOptions {
  int nmax = 0;
  std::uint64_t samples = 0;  // random connected graphs per size above the exhaustive range
  std::uint64_t seed = 1;
  double max_seconds = 0;     // 0 = unlimited
  std::size_t keep_messages = 20;
};

struct SweepSizeStats {
  int n = 0;
  bool exhaustive = true;
  std::uint64_t graphs = 0;
  std::uint64_t colorings = 0;
  std::uint64_t decompositions = 0;
  std::uint64_t certificates = 0;
  std::uint64_t failures = 0;
  double max_case_ms = 0;
};

struct SweepReport {
  std::vector<SweepSizeStats> sizes;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;
  bool incomplete = false;
  std::vector<std::string> incomplete_reasons;
  std::uint64_t seed = 0;
  double seconds = 0;
};

namespace detail {

class SweepRunner {
 public:
  SweepRunner(const SweepOptions& opt, SweepReport& report) : opt_(opt), report_(report) {}

  void fail(SweepSizeStats& stats, const Graph& g, const BalancedColoring* c, const std::string& what) {
    ++stats.failures;
    ++report_.failures;
    if (report_.messages.size() < opt_.keep_messages) {
      std::string msg = "n=" + std::to_string(g.order()) + " edges=" + graph_edges(g);
      if (c) msg += " p1=" + to_string(c->p1) + " p2=" + to_string(c->p2);
      report_.messages.push_back(msg + ": " + what);
    }
  }

  // Every invariant that involves a single graph and all of its colorings.
  void check_graph(const Graph& g, SweepSizeStats& stats) {
    ++stats.graphs;
    const int n = g.order();
    const int half = n / 2;
    bool k_connected = false;
    try {
      k_connected = is_k_connected(g, half);
      check_cuts(g, stats);
    } catch (const Error& e) {
      fail(stats, g, nullptr, std::string("graph checks threw: ") + e.what());
      return;
    }

    bool all_perfect = true;
    std::uint64_t seen = 0;
    ColoringStream stream(n);
    while (auto c = stream.next()) {
      ++seen;
      ++stats.colorings;
      auto t0 = std::chrono::steady_clock::now();
      try {
        all_perfect &= check_coloring(g, *c, k_connected, stats);
      } catch (const Error& e) {
        fail(stats, g, &*c, std::string("threw: ") + e.what());
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      stats.max_case_ms = std::max(stats.max_case_ms, ms);
    }
    if (seen != coloring_count(n)) fail(stats, g, nullptr, "coloring stream length differs from the closed form");

    if (n >= 3) {
      if (all_perfect != k_connected)
        fail(stats, g, nullptr, k_connected ? "floor(n/2)-connected but some coloring has no perfect matching"
                                            : "not floor(n/2)-connected yet every coloring has a perfect matching");
      if (!k_connected) {
        try {
          auto adv = adversarial_coloring(g);
          if (exists_decomposition(g, adv, 3)) fail(stats, g, &adv, "adversarial coloring decomposes into parts <= 3");
        } catch (const Error& e) {
          fail(stats, g, nullptr, std::string("adversarial coloring threw: ") + e.what());
        }
      }
    }
  }

  std::string graph_edges(const Graph& g) const {
    std::string s = "[";
    for (auto [u, v] : g.edges()) s += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    return s + "]";
  }

 private:
  // min_vertex_cut against subset enumeration; is_k_connected against the definition.
  void check_cuts(const Graph& g, SweepSizeStats& stats) {
    const int n = g.order();
    std::optional<VertexSet> best;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<Vertex> members;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1U) members.push_back(v);
      VertexSet y(std::move(members));
      if (best && y.size() > best->size()) continue;
      if (is_vertex_cut(g, y) && (!best || y.size() < best->size() || y < *best)) best = y;
    }
    auto found = min_vertex_cut(g);
    if (found != best)
      fail(stats, g, nullptr, "min_vertex_cut " + (found ? to_string(*found) : std::string("none")) +
                                  " differs from enumeration " + (best ? to_string(*best) : std::string("none")));
    for (int k = 0; k <= n + 1; ++k) {
      const bool expect = n > k && (!best || static_cast<int>(best->size()) >= k);
      if (is_k_connected(g, k) != expect) fail(stats, g, nullptr, "is_k_connected disagrees at k=" + std::to_string(k));
    }
  }

  // Returns whether H has a perfect matching.
  bool check_coloring(const Graph& g, const BalancedColoring& c, bool k_connected, SweepSizeStats& stats) {
    if (auto v = validate_coloring(g, c); !v) fail(stats, g, &c, "enumerated coloring invalid: " + v.diagnostic);
    const AuxBipartite h = build_aux(g, c);
    check_aux(g, c, h, stats);
    const Matching& m = hk_.run(h);
    if (auto v = check_matching(h, m); !v) fail(stats, g, &c, "max_matching output invalid: " + v.diagnostic);
    auto oracle = exists_decomposition(g, c, 3);
    const bool perfect = m.is_perfect();
    if (perfect != oracle.has_value()) fail(stats, g, &c, "perfect matching and exhaustive search disagree");

    if (perfect) {
      ++stats.decompositions;
      auto d = matching_to_decomposition(g, c, h, m);
      if (normalize_decomposition(g, c, d) != d) fail(stats, g, &c, "decomposition from matching is not a normalization fixed point");
      if (!decomposition_to_matching(g, c, h, d).is_perfect()) fail(stats, g, &c, "round trip to matching lost pairs");
    } else {
      ++stats.certificates;
      auto violator = hall_violator(h, m);
      auto cert = violator_to_certificate(g, c, violator);
      if (auto v = verify_certificate(g, cert); !v) fail(stats, g, &c, "certificate rejected: " + v.diagnostic);
      auto counts = certificate_counts(c, cert);
      if (counts.cut_sum > g.order() - 2) fail(stats, g, &c, "|cut_c| + |cut_a| exceeds n - 2");
      if (k_connected) fail(stats, g, &c, "certificate produced for a floor(n/2)-connected graph");
    }
    if (oracle) {
      auto canon = normalize_decomposition(g, c, *oracle);
      if (!decomposition_to_matching(g, c, h, canon).is_perfect())
        fail(stats, g, &c, "normalized oracle decomposition does not give a perfect matching");
    }
    if (g.order() >= 3 && is_connected(g)) {
      auto r = decompose_or_certify(g, c);
      if (r.decomposed() != perfect) fail(stats, g, &c, "decompose_or_certify outcome differs from matching");
    }
    return perfect;
  }

  void check_aux(const Graph& g, const BalancedColoring& c, const AuxBipartite& h, SweepSizeStats& stats) {
    const std::size_t side = c.p1.size() + c.x.size();
    if (static_cast<std::size_t>(h.left_size()) != side || static_cast<std::size_t>(h.right_size()) != side)
      fail(stats, g, &c, "H sides have the wrong size");
    std::size_t expect = c.x.size();
    for (auto [u, v] : g.edges()) {
      auto cls = [&](Vertex w) { return c.p1.contains(w) ? 0 : c.p2.contains(w) ? 1 : 2; };
      int a = cls(u), b = cls(v);
      if (a != b) ++expect;
    }
    if (h.edge_count() != expect) fail(stats, g, &c, "|E(H)| differs from the four-family count");
    for (Vertex x : c.x) {
      int i = h.copy_index(x);
      if (i < 0 || !h.has_edge(i, i)) fail(stats, g, &c, "copy edge missing for " + std::to_string(x));
    }
  }

  const SweepOptions& opt_;
  SweepReport& report_;
  HopcroftKarp hk_;
};

}  // namespace detail

// Checks the decomposition theorem and every module invariant over all
// connected labeled graphs up to kSweepExhaustiveMax vertices, then over
// `samples` random connected graphs per size up to kSweepSampledMax.
inline SweepReport run_sweep(const SweepOptions& opt, const std::function<void(const SweepSizeStats&)>& progress = {}) {
  SweepReport report;
  report.seed = opt.seed;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  auto out_of_time = [&] { return opt.max_seconds > 0 && elapsed() > opt.max_seconds; };

  detail::SweepRunner runner(opt, report);
  std::mt19937_64 rng(opt.seed);
  for (int n = 1; n <= opt.nmax; ++n) {
    if (n > kSweepSampledMax) {
      report.incomplete = true;
      report.incomplete_reasons.push_back("sizes above " + std::to_string(kSweepSampledMax) + " are not supported");
      break;
    }
    SweepSizeStats stats;
    stats.n = n;
    stats.exhaustive = n <= kSweepExhaustiveMax;
    bool stopped = false;
    if (stats.exhaustive) {
      const std::uint64_t total = labeled_graph_count(n);
      for (std::uint64_t mask = 0; mask < total && !stopped; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (!is_connected(g)) continue;
        runner.check_graph(g, stats);
        stopped = out_of_time();
      }
    } else {
      if (opt.samples == 0) {
        report.incomplete = true;
        report.incomplete_reasons.push_back("n=" + std::to_string(n) + " skipped: sampled size with samples=0");
        continue;
      }
      for (std::uint64_t i = 0; i < opt.samples && !stopped; ++i) {
        runner.check_graph(random_connected_graph(n, rng), stats);
        stopped = out_of_time();
      }
    }
    report.sizes.push_back(stats);
    if (progress) progress(stats);
    if (stopped) {
      report.incomplete = true;
      report.incomplete_reasons.push_back("time budget exhausted during n=" + std::to_string(n));
      break;
    }
  }
  report.seconds = elapsed();
  return report;
}

}  // namespace bdn
