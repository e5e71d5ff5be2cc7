#pragma once

#include <string>
#include <vector>

#include "bdn/coloring.hpp"
#include "bdn/error.hpp"
#include "bdn/graph.hpp"
#include "bdn/matching.hpp"

namespace bdn {

// Vertex cut of fewer than floor(n/2) vertices, derived from a Hall violator
// (a, b) of H with c = P2 \ N_H and d = X \ N_H. Two cuts are available:
//   cut_c = (P1 \ a) + (P2 \ c) + (X \ b), isolating c from a + b;
//   cut_a = (P1 \ a) + (P2 \ c) + (X \ d), isolating a from c + d.
struct CutCertificate {
  VertexSet cut;
  VertexSet separated;
  VertexSet remainder;
  VertexSet a, b, c, d;
  char chosen_side = 'C';  // 'C' or 'A'
  VertexSet cut_c;
  VertexSet cut_a;
  int floor_half_minus_one = 0;

  friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

// Checks a certificate with graph primitives only: the three sets partition V,
// both sides are nonempty with no edge between them, the cut is a vertex cut,
// and it has at most floor(n/2) - 1 vertices.
inline Verdict verify_certificate(const Graph& g, const CutCertificate& cert) {
  const int n = g.order();
  for (const VertexSet* s : {&cert.cut, &cert.separated, &cert.remainder})
    if (!s->empty() && (s->front() < 0 || s->back() >= n)) return Verdict::fail("vertex out of range in " + to_string(*s));
  if (!disjoint(cert.cut, cert.separated) || !disjoint(cert.cut, cert.remainder) ||
      !disjoint(cert.separated, cert.remainder))
    return Verdict::fail("cut, separated and remainder are not pairwise disjoint");
  if (cert.cut.size() + cert.separated.size() + cert.remainder.size() != static_cast<std::size_t>(n))
    return Verdict::fail("cut, separated and remainder do not cover V");
  if (cert.separated.empty()) return Verdict::fail("separated side is empty");
  if (cert.remainder.empty()) return Verdict::fail("remainder is empty");
  for (Vertex v : cert.separated)
    for (Vertex w : g.neighbors(v))
      if (cert.remainder.contains(w))
        return Verdict::fail("edge (" + std::to_string(v) + "," + std::to_string(w) + ") joins separated and remainder");
  if (!is_vertex_cut(g, cert.cut)) return Verdict::fail(to_string(cert.cut) + " is not a vertex cut");
  const int bound = n / 2 - 1;
  if (cert.floor_half_minus_one != bound)
    return Verdict::fail("recorded bound " + std::to_string(cert.floor_half_minus_one) + " differs from floor(n/2) - 1 = " +
                         std::to_string(bound));
  if (static_cast<int>(cert.cut.size()) > bound)
    return Verdict::fail("cut has " + std::to_string(cert.cut.size()) + " vertices, more than floor(n/2) - 1 = " +
                         std::to_string(bound));
  if (!disjoint(cert.b, cert.d)) return Verdict::fail("b and d overlap");
  return Verdict::pass();
}

// Quantities of the counting argument, for reports and assertions.
struct CertificateCounts {
  int cut_sum = 0;      // |cut_c| + |cut_a|
  int x_slack = 0;      // |X| - |b| - |d|
  int pair_slack = 0;   // |a| + |c| - |P1| - 1
};

inline CertificateCounts certificate_counts(const BalancedColoring& col, const CutCertificate& cert) {
  return {static_cast<int>(cert.cut_c.size() + cert.cut_a.size()),
          static_cast<int>(col.x.size()) - static_cast<int>(cert.b.size()) - static_cast<int>(cert.d.size()),
          static_cast<int>(cert.a.size() + cert.c.size()) - static_cast<int>(col.p1.size()) - 1};
}

inline CutCertificate violator_to_certificate(const Graph& g, const BalancedColoring& col, const HallViolator& v) {
  if (auto ok = validate_coloring(g, col); !ok) throw DomainError("violator_to_certificate: " + ok.diagnostic);
  auto subset = [](const VertexSet& s, const VertexSet& of) { return set_difference(s, of).empty(); };
  if (!subset(v.a, col.p1) || !subset(v.b, col.x) || !subset(v.nh_p2, col.p2) || !subset(v.nh_x2, col.x))
    throw DomainError("violator sets do not match the coloring's classes");

  // N_H(A u B), recomputed from G.
  std::vector<Vertex> nh_p2, nh_x2;
  for (Vertex p : v.a)
    for (Vertex w : g.neighbors(p)) {
      if (col.p2.contains(w)) nh_p2.push_back(w);
      else if (col.x.contains(w)) nh_x2.push_back(w);
    }
  for (Vertex x : v.b) {
    nh_x2.push_back(x);
    for (Vertex w : g.neighbors(x))
      if (col.p2.contains(w)) nh_p2.push_back(w);
  }
  if (VertexSet(nh_p2) != v.nh_p2 || VertexSet(nh_x2) != v.nh_x2)
    throw DomainError("violator neighborhood does not equal N_H(A u B)");
  if (v.nh_p2.size() + v.nh_x2.size() + 1 > v.a.size() + v.b.size())
    throw DomainError("violator is not deficient: |N_H(A u B)| >= |A| + |B|");

  CutCertificate cert;
  cert.a = v.a;
  cert.b = v.b;
  cert.c = set_difference(col.p2, v.nh_p2);
  cert.d = set_difference(col.x, v.nh_x2);
  if (cert.a.empty() || cert.c.empty())
    throw ConsistencyError("violator yields empty a or c: a = " + to_string(cert.a) + ", c = " + to_string(cert.c));

  // Deficiency on the other side: N_H(C u D) lies in (P1 \ A) + (X1 \ B).
  {
    std::vector<Vertex> side1;
    for (Vertex q : cert.c)
      for (Vertex w : g.neighbors(q))
        if (col.p1.contains(w) || col.x.contains(w)) side1.push_back(w);
    for (Vertex x : cert.d) {
      side1.push_back(x);
      for (Vertex w : g.neighbors(x))
        if (col.p1.contains(w)) side1.push_back(w);
    }
    const std::size_t reach = VertexSet(std::move(side1)).size();
    if (reach + 1 > cert.c.size() + cert.d.size())
      throw ConsistencyError("symmetric deficiency fails: |N_H(C u D)| = " + std::to_string(reach) +
                             ", |C| + |D| = " + std::to_string(cert.c.size() + cert.d.size()));
  }

  const VertexSet shared = set_union(set_difference(col.p1, cert.a), set_difference(col.p2, cert.c));
  cert.cut_c = set_union(shared, set_difference(col.x, cert.b));
  cert.cut_a = set_union(shared, set_difference(col.x, cert.d));
  cert.floor_half_minus_one = g.order() / 2 - 1;

  const auto counts = certificate_counts(col, cert);
  if (counts.x_slack < 0 || counts.x_slack > counts.pair_slack)
    throw ConsistencyError("counting chain fails: |X|-|b|-|d| = " + std::to_string(counts.x_slack) +
                           ", |a|+|c|-|P1|-1 = " + std::to_string(counts.pair_slack));
  if (counts.cut_sum > g.order() - 2)
    throw ConsistencyError("|cut_c| + |cut_a| = " + std::to_string(counts.cut_sum) + " exceeds n - 2");

  if (cert.cut_a.size() < cert.cut_c.size()) {
    cert.chosen_side = 'A';
    cert.cut = cert.cut_a;
    cert.separated = cert.a;
    cert.remainder = set_union(cert.c, cert.d);
  } else {
    cert.chosen_side = 'C';
    cert.cut = cert.cut_c;
    cert.separated = cert.c;
    cert.remainder = set_union(cert.a, cert.b);
  }
  if (auto ok = verify_certificate(g, cert); !ok) throw ConsistencyError("certificate fails verification: " + ok.diagnostic);
  return cert;
}

}  // namespace bdn
