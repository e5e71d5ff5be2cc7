// Command-line front end: decompose-or-certify, adversarial colorings, exact
// decomposition numbers, k-connectivity checks and the exhaustive sweep.
//
// Exit codes: 0 decomposition found / property verified, 1 certificate or
// counterexample, 2 input error, 3 internal consistency failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bdn/bdn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bdn::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bdn::Graph load_graph(const std::string& path) {
  try {
    return bdn::parse_graph(read_file(path));
  } catch (const bdn::ParseError& e) {
    throw bdn::ParseError(path + ": " + e.what());
  }
}

bdn::BalancedColoring load_coloring(const std::string& path, int n) {
  try {
    return bdn::parse_coloring(read_file(path), n);
  } catch (const bdn::ParseError& e) {
    throw bdn::ParseError(path + ": " + e.what());
  }
}

void print_parts(const bdn::Decomposition& d) {
  std::cout << "decomposition (" << d.parts.size() << " parts, max size " << d.max_part_size() << ")\n";
  for (const auto& p : d.parts) std::cout << "  " << p << "\n";
}

void print_certificate(const bdn::CutCertificate& c) {
  std::cout << "vertex cut certificate (side " << c.chosen_side << ")\n"
            << "  cut        " << c.cut << "  (" << c.cut.size() << " <= floor(n/2)-1 = " << c.floor_half_minus_one << ")\n"
            << "  separated  " << c.separated << "\n"
            << "  remainder  " << c.remainder << "\n"
            << "  a " << c.a << "  b " << c.b << "  c " << c.c << "  d " << c.d << "\n"
            << "  cut_c " << c.cut_c << "  cut_a " << c.cut_a << "\n";
}

int run_decompose(const std::string& graph_path, const std::string& coloring_path, bool json, bool diagnostics) {
  const auto g = load_graph(graph_path);
  const auto c = load_coloring(coloring_path, g.order());
  const auto r = bdn::decompose_or_certify(g, c);

  if (json) {
    bdn::json out;
    if (r.decomposed()) {
      out["decomposition"] = bdn::decomposition_to_json(r.decomposition());
    } else {
      out["certificate"] = bdn::certificate_to_json(r.certificate());
    }
    if (diagnostics) {
      out["matching_size"] = r.matching_size;
      out["side_size"] = r.side_size;
      if (r.violator) {
        out["violator"] = bdn::violator_to_json(*r.violator);
        auto counts = bdn::certificate_counts(c, r.certificate());
        out["counts"] = {{"cut_sum", counts.cut_sum}, {"n_minus_two", g.order() - 2},
                         {"x_slack", counts.x_slack}, {"pair_slack", counts.pair_slack}};
      }
    }
    std::cout << out.dump() << "\n";
  } else {
    if (diagnostics) std::cout << "matching " << r.matching_size << " / " << r.side_size << "\n";
    if (r.decomposed()) {
      print_parts(r.decomposition());
    } else {
      print_certificate(r.certificate());
      if (diagnostics) {
        const auto& v = *r.violator;
        auto counts = bdn::certificate_counts(c, r.certificate());
        std::cout << "  violator A " << v.a << " B " << v.b << " N_H: P2 " << v.nh_p2 << " X2 " << v.nh_x2
                  << " (deficiency " << v.deficiency << ")\n"
                  << "  |cut_c| + |cut_a| = " << counts.cut_sum << " <= n - 2 = " << g.order() - 2 << "\n"
                  << "  0 <= |X|-|b|-|d| = " << counts.x_slack << " <= |a|+|c|-|P1|-1 = " << counts.pair_slack << "\n";
      }
    }
  }
  return r.decomposed() ? kExitOk : kExitCounterexample;
}

int run_adversary(const std::string& graph_path, bool json, int max_n) {
  const auto g = load_graph(graph_path);
  const auto adv = bdn::adversarial_construction(g);
  std::optional<bool> forced;
  if (g.order() <= max_n) forced = !bdn::exists_decomposition(g, adv.coloring, 3, max_n).has_value();
  if (forced && !*forced) throw bdn::ConsistencyError("adversarial coloring admits a decomposition with parts <= 3");

  if (json) {
    bdn::json out = bdn::coloring_to_json(adv.coloring);
    out["cut"] = bdn::to_json(adv.cut);
    out["g1"] = bdn::to_json(adv.small);
    out["g2"] = bdn::to_json(adv.large);
    out["l"] = adv.l;
    out["forces_part_of_size_4"] = forced ? bdn::json(*forced) : bdn::json("unchecked");
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "minimum cut Y " << adv.cut << ", G1 " << adv.small << ", G2 " << adv.large << ", l = " << adv.l << "\n"
              << "p1 " << adv.coloring.p1 << "\np2 " << adv.coloring.p2 << "\nx  " << adv.coloring.x << "\n"
              << "no decomposition with parts <= 3: "
              << (forced ? "confirmed by exhaustive search" : "not checked (graph above --max-n)") << "\n";
  }
  return kExitOk;
}

int run_bdn(const std::string& graph_path, bool json, int max_n) {
  const auto g = load_graph(graph_path);
  const auto r = bdn::bdn_exact_detailed(g, max_n);
  if (json) {
    bdn::json out;
    out["bdn"] = r.number.is_infinite() ? bdn::json("infinity") : bdn::json(r.number.value());
    out["at_most_3"] = r.number.at_most(3);
    if (r.hardest) out["hardest_coloring"] = bdn::coloring_to_json(*r.hardest);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "balanced decomposition number: " << r.number.to_string() << "\n";
    if (r.hardest) std::cout << "hardest coloring: p1 " << r.hardest->p1 << " p2 " << r.hardest->p2 << "\n";
  }
  return kExitOk;
}

int run_check(const std::string& graph_path, int k, bool json) {
  const auto g = load_graph(graph_path);
  const bool ok = bdn::is_k_connected(g, k);
  std::optional<bdn::VertexSet> cut;
  if (!ok) cut = bdn::min_vertex_cut(g);
  if (json) {
    bdn::json out{{"k", k}, {"n", g.order()}, {"k_connected", ok}};
    if (cut) out["min_cut"] = bdn::to_json(*cut);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (ok ? "" : "not ") << k << "-connected (n = " << g.order() << ")\n";
    if (cut) std::cout << "minimum vertex cut " << *cut << "\n";
    else if (!ok) std::cout << "n <= k\n";
  }
  return ok ? kExitOk : kExitCounterexample;
}

int run_sweep(int nmax, std::uint64_t samples, std::uint64_t seed, double max_seconds, bool json) {
  if (nmax < 0) throw bdn::DomainError("--nmax must be non-negative");
  bdn::SweepOptions opt{nmax, samples, seed, max_seconds};
  auto progress = [&](const bdn::SweepSizeStats& s) {
    if (!json)
      std::cerr << "n=" << s.n << " graphs=" << s.graphs << " colorings=" << s.colorings << " failures=" << s.failures << "\n";
  };
  const auto report = bdn::run_sweep(opt, progress);
  if (json) {
    bdn::json sizes = bdn::json::array();
    for (const auto& s : report.sizes)
      sizes.push_back({{"n", s.n}, {"mode", s.exhaustive ? "exhaustive" : "sampled"}, {"graphs", s.graphs},
                       {"colorings", s.colorings}, {"decompositions", s.decompositions},
                       {"certificates", s.certificates}, {"failures", s.failures}, {"max_case_ms", s.max_case_ms}});
    bdn::json out{{"seed", report.seed}, {"sizes", sizes}, {"failures", report.failures},
                  {"messages", report.messages}, {"incomplete", report.incomplete},
                  {"incomplete_reasons", report.incomplete_reasons}, {"seconds", report.seconds}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("seed %llu\n%3s %-10s %10s %12s %14s %12s %9s %12s\n", static_cast<unsigned long long>(report.seed), "n",
                "mode", "graphs", "colorings", "decompositions", "certificates", "failures", "max_case_ms");
    for (const auto& s : report.sizes)
      std::printf("%3d %-10s %10llu %12llu %14llu %12llu %9llu %12.3f\n", s.n, s.exhaustive ? "exhaustive" : "sampled",
                  static_cast<unsigned long long>(s.graphs), static_cast<unsigned long long>(s.colorings),
                  static_cast<unsigned long long>(s.decompositions), static_cast<unsigned long long>(s.certificates),
                  static_cast<unsigned long long>(s.failures), s.max_case_ms);
    std::printf("total failures %llu, %.2f s%s\n", static_cast<unsigned long long>(report.failures), report.seconds,
                report.incomplete ? " (INCOMPLETE)" : "");
    for (const auto& r : report.incomplete_reasons) std::printf("  incomplete: %s\n", r.c_str());
    for (const auto& m : report.messages) std::printf("  failure: %s\n", m.c_str());
  }
  return report.failures == 0 ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced decompositions with parts of at most 3 vertices: matching or vertex-cut certificate"};
  app.require_subcommand(1);

  std::string graph_path, coloring_path;
  bool json = false;
  int max_n = bdn::kDefaultSearchBound;
  int k = 0;
  int nmax = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  double max_seconds = 0;

  auto* decompose = app.add_subcommand("decompose", "Decompose a colored graph or certify that G is not floor(n/2)-connected");
  decompose->add_option("--graph", graph_path, "Graph file (JSON or 'n m' edge list)")->required();
  decompose->add_option("--coloring", coloring_path, "Coloring JSON file")->required();
  decompose->add_flag("--json", json, "JSON output");

  auto* certify = app.add_subcommand("certify", "Like decompose, with matching and violator diagnostics");
  certify->add_option("--graph", graph_path, "Graph file")->required();
  certify->add_option("--coloring", coloring_path, "Coloring JSON file")->required();
  certify->add_flag("--json", json, "JSON output");

  auto* adversary = app.add_subcommand("adversary", "Coloring forcing a part of at least 4 vertices");
  adversary->add_option("--graph", graph_path, "Graph file")->required();
  adversary->add_option("--max-n", max_n, "Largest graph confirmed by exhaustive search")->capture_default_str();
  adversary->add_flag("--json", json, "JSON output");

  auto* bdn_cmd = app.add_subcommand("bdn", "Exact balanced decomposition number (exponential)");
  bdn_cmd->add_option("--graph", graph_path, "Graph file")->required();
  bdn_cmd->add_option("--max-n", max_n, "Largest accepted graph")->default_val(bdn::kDefaultBdnBound)->capture_default_str();
  bdn_cmd->add_flag("--json", json, "JSON output");

  auto* check = app.add_subcommand("check", "Test k-connectivity");
  check->add_option("--graph", graph_path, "Graph file")->required();
  check->add_option("--k", k, "Connectivity to test")->required()->check(CLI::NonNegativeNumber);
  check->add_flag("--json", json, "JSON output");

  auto* sweep = app.add_subcommand("sweep", "Check the theorem and all invariants on small graphs");
  sweep->add_option("--nmax", nmax, "Largest vertex count (exhaustive up to 6, sampled 7-8)")->required();
  sweep->add_option("--samples", samples, "Random connected graphs per sampled size")->capture_default_str();
  auto* seed_opt = sweep->add_option("--seed", seed, "Random seed (default: $BD_SEED or 1)");
  sweep->add_option("--max-seconds", max_seconds, "Time budget; 0 = unlimited")->capture_default_str();
  sweep->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (decompose->parsed()) return run_decompose(graph_path, coloring_path, json, false);
    if (certify->parsed()) return run_decompose(graph_path, coloring_path, json, true);
    if (adversary->parsed()) return run_adversary(graph_path, json, max_n);
    if (bdn_cmd->parsed()) return run_bdn(graph_path, json, max_n);
    if (check->parsed()) return run_check(graph_path, k, json);
    if (sweep->parsed()) {
      if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("BD_SEED")) {
          try {
            seed = std::stoull(env);
          } catch (const std::exception&) {
            std::cerr << "error: BD_SEED is not an unsigned integer: " << env << "\n";
            return kExitInput;
          }
        }
      }
      return run_sweep(nmax, samples, seed, max_seconds, json);
    }
  } catch (const bdn::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const bdn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
