#pragma once

#include <optional>
#include <string>
#include <variant>

#include "bdn/aux_graph.hpp"
#include "bdn/certificate.hpp"
#include "bdn/coloring.hpp"
#include "bdn/error.hpp"
#include "bdn/graph.hpp"
#include "bdn/matching.hpp"
#include "bdn/reduction.hpp"

namespace bdn {

struct SolveResult {
  std::variant<Decomposition, CutCertificate> outcome;
  std::size_t matching_size = 0;
  std::size_t side_size = 0;
  std::optional<HallViolator> violator;

  [[nodiscard]] bool decomposed() const noexcept { return std::holds_alternative<Decomposition>(outcome); }
  [[nodiscard]] const Decomposition& decomposition() const { return std::get<Decomposition>(outcome); }
  [[nodiscard]] const CutCertificate& certificate() const { return std::get<CutCertificate>(outcome); }
};

// Either a balanced decomposition with parts of at most 3 vertices (from a
// perfect matching of H) or a vertex cut with fewer than floor(n/2) vertices
// (from a Hall violator of H). Both outputs are verified before returning.
inline SolveResult decompose_or_certify(const Graph& g, const BalancedColoring& c) {
  if (auto v = validate_coloring(g, c); !v) throw DomainError("invalid coloring: " + v.diagnostic);
  if (g.order() < 3) throw NotApplicable("graph needs at least 3 vertices, has " + std::to_string(g.order()));
  if (!is_connected(g)) throw NotApplicable("graph is disconnected");

  const AuxBipartite h = build_aux(g, c);
  const Matching m = max_matching(h);
  SolveResult out{Decomposition{}, m.size, static_cast<std::size_t>(h.left_size()), std::nullopt};
  if (m.is_perfect()) {
    out.outcome = matching_to_decomposition(g, c, h, m);
    if (auto v = verify_decomposition(g, c, out.decomposition(), 3); !v)
      throw ConsistencyError("emitted decomposition fails verification: " + v.diagnostic);
    return out;
  }
  out.violator = hall_violator(h, m);
  out.outcome = violator_to_certificate(g, c, *out.violator);
  if (auto v = verify_certificate(g, out.certificate()); !v)
    throw ConsistencyError("emitted certificate fails verification: " + v.diagnostic);
  return out;
}

}  // namespace bdn
