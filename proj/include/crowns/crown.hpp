#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>

#include "crowns/graph.hpp"

namespace crowns {

// A crown is a central edge plus three pairwise-disjoint pendant edges,
// one attached at each central vertex; four edges spanning nine vertices.

struct Pendant {
  Edge edge{};
  int attach = -1;
};

struct CrownCertificate {
  Edge central{};
  std::array<Pendant, 3> pendants{};  // ordered by attach vertex, ascending
};

struct CrownCheck {
  bool ok = false;
  std::string reason;  // first failed invariant when !ok
};

// Checks every certificate invariant against g. Failure is reported, not
// thrown: a bad certificate is an answer, not an error.
inline CrownCheck verify_crown(const LinearThreeGraph& g, const CrownCertificate& cert) {
  if (!g.has_edge(cert.central)) return {false, "edge not in graph"};
  for (const Pendant& p : cert.pendants)
    if (!g.has_edge(p.edge)) return {false, "edge not in graph"};
  std::set<int> attaches;
  for (const Pendant& p : cert.pendants) {
    if (edge_intersection_size(p.edge, cert.central) != 1)
      return {false, "pendant intersection with central is not a single vertex"};
    if (!edge_contains(p.edge, p.attach) || !edge_contains(cert.central, p.attach))
      return {false, "pendant attachment mismatch"};
    // The shared vertex must be the recorded attachment.
    for (int v : p.edge)
      if (edge_contains(cert.central, v) && v != p.attach)
        return {false, "pendant attachment mismatch"};
    attaches.insert(p.attach);
  }
  if (attaches.size() != 3) return {false, "attachment vertices do not cover central"};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!edges_disjoint(cert.pendants[static_cast<std::size_t>(i)].edge,
                          cert.pendants[static_cast<std::size_t>(j)].edge))
        return {false, "pendants not disjoint"};
  std::set<int> support(cert.central.begin(), cert.central.end());
  for (const Pendant& p : cert.pendants) support.insert(p.edge.begin(), p.edge.end());
  if (support.size() != 9) return {false, "union not 9 vertices"};
  return {true, ""};
}

inline CrownCertificate make_certificate(const Edge& central, const Edge& at0, const Edge& at1,
                                         const Edge& at2) {
  // Incoming pendants are aligned with central[0..2]; central is sorted,
  // so the certificate is already in attach-ascending order.
  CrownCertificate cert;
  cert.central = central;
  cert.pendants[0] = {at0, central[0]};
  cert.pendants[1] = {at1, central[1]};
  cert.pendants[2] = {at2, central[2]};
  return cert;
}

// Brute-force crown search; the reference oracle for everything else.
// Scans central edges in index order, then one incident edge per central
// vertex in index order, and returns the first disjoint pendant triple.
// Repeated calls return the identical certificate.
inline std::optional<CrownCertificate> find_crown_exhaustive(const LinearThreeGraph& g) {
  for (int ci = 0; ci < g.edge_count(); ++ci) {
    const Edge& central = g.edge(ci);
    for (int i0 : g.edges_at(central[0])) {
      if (i0 == ci) continue;
      const Edge& p0 = g.edge(i0);
      for (int i1 : g.edges_at(central[1])) {
        if (i1 == ci) continue;
        const Edge& p1 = g.edge(i1);
        if (!edges_disjoint(p0, p1)) continue;
        for (int i2 : g.edges_at(central[2])) {
          if (i2 == ci) continue;
          const Edge& p2 = g.edge(i2);
          if (!edges_disjoint(p0, p2) || !edges_disjoint(p1, p2)) continue;
          return make_certificate(central, p0, p1, p2);
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_crown_free(const LinearThreeGraph& g) { return !find_crown_exhaustive(g).has_value(); }

}  // namespace crowns
