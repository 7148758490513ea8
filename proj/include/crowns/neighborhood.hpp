#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crowns/analysis.hpp"
#include "crowns/crown.hpp"
#include "crowns/errors.hpp"
#include "crowns/graph.hpp"

namespace crowns {

// Neighborhood analysis around a base edge e = {x,y,z} with d(x) >= 4 and
// d(y) = d(z) = 5. Walks the constructive case split in a fixed order and
// returns either the first crown it can assemble, tagged with the branch
// that produced it, or the verified 11-vertex closed component:
//
//   554-1   an edge at y leaves the neighborhood of z
//   554-2   an edge at x leaves the neighborhood of y
//   554-3   pairwise-disjoint pendant triple across the x/y/z edge lists
//   554-4   an x-edge mixing V1 and V2 (subsumed by 554-3, kept as a check)
//   554-5a  outside edge meeting S in a single vertex
//   554-5b  outside edge containing a diagonal pair {a,d}
//   554-5c  outside edge meeting S in a cross pair {a,r}
//   554-closed  no outside edges: S is a closed component
//
// Label positions: 0..7 stand for a,b,c,d,r,s,p,q.

namespace detail {

inline CrownCertificate certificate_with_attachments(
    const Edge& central, std::array<std::pair<int, Edge>, 3> pendants) {
  std::sort(pendants.begin(), pendants.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  CrownCertificate cert;
  cert.central = central;
  for (int k = 0; k < 3; ++k) {
    cert.pendants[static_cast<std::size_t>(k)] = {pendants[static_cast<std::size_t>(k)].second,
                                                  pendants[static_cast<std::size_t>(k)].first};
  }
  return cert;
}

// The relabelings that preserve the canonical edge pattern: the Klein
// four-group inside each C4, optionally composed with the V1 <-> V2 swap.
// 32 elements, enumerated in a fixed order.
inline const std::vector<std::array<int, 8>>& label_symmetry_group() {
  static const std::vector<std::array<int, 8>> group = [] {
    const std::array<std::array<int, 4>, 4> klein = {
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    std::vector<std::array<int, 8>> out;
    for (int swap_blocks = 0; swap_blocks < 2; ++swap_blocks) {
      for (const auto& k1 : klein) {
        for (const auto& k2 : klein) {
          std::array<int, 8> perm{};
          for (int i = 0; i < 4; ++i) {
            perm[static_cast<std::size_t>(i)] = swap_blocks ? k1[static_cast<std::size_t>(i)] + 4
                                                            : k1[static_cast<std::size_t>(i)];
            perm[static_cast<std::size_t>(i + 4)] = swap_blocks
                                                        ? k2[static_cast<std::size_t>(i)]
                                                        : k2[static_cast<std::size_t>(i)] + 4;
          }
          out.push_back(perm);
        }
      }
    }
    return out;
  }();
  return group;
}

inline std::array<int, 8> invert_label_permutation(const std::array<int, 8>& perm) {
  std::array<int, 8> inv{};
  for (int i = 0; i < 8; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  return inv;
}

}  // namespace detail

// Computes the auxiliary bipartite pairing of the y-edges against the
// z-edges and its cycle classification. Requires d(y) = d(z) = 5; the
// 2-regularity claim additionally needs the two neighborhoods to agree,
// which callers establish first.
inline AuxiliaryBipartite build_auxiliary_bipartite(const LinearThreeGraph& g, int base_index,
                                                    int y, int z) {
  AuxiliaryBipartite aux;
  for (int ei : g.edges_at(y))
    if (ei != base_index) aux.y_side.push_back(ei);
  for (int ei : g.edges_at(z))
    if (ei != base_index) aux.z_side.push_back(ei);
  std::vector<int> y_deg(aux.y_side.size(), 0), z_deg(aux.z_side.size(), 0);
  for (std::size_t i = 0; i < aux.y_side.size(); ++i) {
    for (std::size_t j = 0; j < aux.z_side.size(); ++j) {
      if (edge_intersection_size(g.edge(aux.y_side[i]), g.edge(aux.z_side[j])) > 0) {
        aux.links.emplace_back(static_cast<int>(i), static_cast<int>(j));
        ++y_deg[i];
        ++z_deg[j];
      }
    }
  }
  const bool regular = aux.y_side.size() == 4 && aux.z_side.size() == 4 &&
                       std::all_of(y_deg.begin(), y_deg.end(), [](int d) { return d == 2; }) &&
                       std::all_of(z_deg.begin(), z_deg.end(), [](int d) { return d == 2; });
  if (!regular) {
    aux.classification = HClassification::Irregular;
    return aux;
  }
  // Walk one cycle from y-side vertex 0; 2-regular bipartite on 4+4 means
  // either one 8-cycle or two 4-cycles.
  std::set<std::pair<int, int>> unused(aux.links.begin(), aux.links.end());
  int cycle_len = 0;
  int side = 0, at = 0;
  while (true) {
    std::optional<std::pair<int, int>> next;
    for (const auto& link : aux.links) {
      if (!unused.count(link)) continue;
      if ((side == 0 && link.first == at) || (side == 1 && link.second == at)) {
        next = link;
        break;
      }
    }
    if (!next) break;
    unused.erase(*next);
    ++cycle_len;
    at = side == 0 ? next->second : next->first;
    side = 1 - side;
  }
  aux.classification = cycle_len == 8 ? HClassification::C8 : HClassification::C4PlusC4;
  return aux;
}

// Derives the canonical labels a..q from a C4+C4 pairing. The C4 holding
// the lowest-index z-edge comes first; inside a C4 the lower-index z-edge
// and y-edge anchor the labels.
inline std::array<int, 8> derive_labels(const LinearThreeGraph& g, const AuxiliaryBipartite& aux) {
  if (aux.classification != HClassification::C4PlusC4)
    throw ContractViolation("labels are only defined for the C4+C4 classification");
  auto adjacent = [&](int yi, int zi) {
    for (const auto& link : aux.links)
      if (link.first == yi && link.second == zi) return true;
    return false;
  };
  // Split the 4 z-edges into the two C4s via the y-edges linking them.
  std::array<int, 4> z_component{-1, -1, -1, -1};
  z_component[0] = 0;
  for (int pass = 0; pass < 4; ++pass)
    for (int yi = 0; yi < 4; ++yi)
      for (int zi = 0; zi < 4; ++zi)
        for (int zj = 0; zj < 4; ++zj)
          if (adjacent(yi, zi) && adjacent(yi, zj) && z_component[static_cast<std::size_t>(zi)] >= 0)
            z_component[static_cast<std::size_t>(zj)] = z_component[static_cast<std::size_t>(zi)];
  for (int zi = 0; zi < 4; ++zi)
    if (z_component[static_cast<std::size_t>(zi)] < 0) z_component[static_cast<std::size_t>(zi)] = 1;
  auto shared_vertex = [&](const Edge& lhs, const Edge& rhs) {
    for (int v : lhs)
      if (edge_contains(rhs, v)) return v;
    throw ContractViolation("expected intersecting edges while labeling");
  };
  std::array<int, 8> labels{};
  for (int component = 0; component < 2; ++component) {
    std::vector<int> zs, ys;
    for (int zi = 0; zi < 4; ++zi)
      if (z_component[static_cast<std::size_t>(zi)] == component) zs.push_back(aux.z_side[static_cast<std::size_t>(zi)]);
    for (int yi = 0; yi < 4; ++yi) {
      for (int zi = 0; zi < 4; ++zi) {
        if (z_component[static_cast<std::size_t>(zi)] == component && adjacent(yi, zi)) {
          ys.push_back(aux.y_side[static_cast<std::size_t>(yi)]);
          break;
        }
      }
    }
    if (zs.size() != 2 || ys.size() != 2)
      throw ContractViolation("C4 does not have two edges on each side");
    std::sort(zs.begin(), zs.end());
    std::sort(ys.begin(), ys.end());
    const Edge &z1 = g.edge(zs[0]), &z2 = g.edge(zs[1]);
    const Edge &y1 = g.edge(ys[0]), &y2 = g.edge(ys[1]);
    const std::size_t base = component == 0 ? 0 : 4;
    labels[base + 0] = shared_vertex(z1, y1);
    labels[base + 1] = shared_vertex(z1, y2);
    labels[base + 2] = shared_vertex(z2, y1);
    labels[base + 3] = shared_vertex(z2, y2);
  }
  return labels;
}

namespace detail {

struct LabelFrame {
  std::array<int, 8> actual{};  // actual[t] = vertex at canonical position t
};

inline LabelFrame frame_for(const std::array<int, 8>& labels, const std::array<int, 8>& sigma) {
  const std::array<int, 8> inv = invert_label_permutation(sigma);
  LabelFrame f;
  for (int t = 0; t < 8; ++t) f.actual[static_cast<std::size_t>(t)] = labels[static_cast<std::size_t>(inv[static_cast<std::size_t>(t)])];
  return f;
}

// Crown following the mixing-edge pattern {z,a,b}, {y,b,d}, {z,p,q} plus
// the given edge attached at a. Valid as long as the edge avoids
// positions b, d, p, q and the vertices y, z.
inline CrownCertificate pattern_crown_apq(const LinearThreeGraph& g, int y, int z,
                                          const LabelFrame& f, const Edge& at_a) {
  const Edge central = make_edge(z, f.actual[0], f.actual[1]);
  const Edge pend_b = make_edge(y, f.actual[1], f.actual[3]);
  const Edge pend_z = make_edge(z, f.actual[6], f.actual[7]);
  if (!g.has_edge(central) || !g.has_edge(pend_b) || !g.has_edge(pend_z))
    throw ContractViolation("pattern edges missing from graph (a/pq crown)");
  return certificate_with_attachments(central,
                                      {{{f.actual[0], at_a}, {f.actual[1], pend_b}, {z, pend_z}}});
}

// Crown for the single-contact case: {z,a,b}, {y,b,d}, {z,r,s}, edge at a.
inline CrownCertificate pattern_crown_ars(const LinearThreeGraph& g, int y, int z,
                                          const LabelFrame& f, const Edge& at_a) {
  const Edge central = make_edge(z, f.actual[0], f.actual[1]);
  const Edge pend_b = make_edge(y, f.actual[1], f.actual[3]);
  const Edge pend_z = make_edge(z, f.actual[4], f.actual[5]);
  if (!g.has_edge(central) || !g.has_edge(pend_b) || !g.has_edge(pend_z))
    throw ContractViolation("pattern edges missing from graph (a/rs crown)");
  return certificate_with_attachments(central,
                                      {{{f.actual[0], at_a}, {f.actual[1], pend_b}, {z, pend_z}}});
}

// Crown for the diagonal case: {z,a,b}, {x,b,c}, {z,r,s}, edge at a. The
// x-edge {x,b,c} is forced to exist: the contact pair {a,d} rules out
// {x,a,d} by linearity, and d(x) >= 4 then requires the other diagonals.
inline CrownCertificate pattern_crown_diag(const LinearThreeGraph& g, int x, int z,
                                           const LabelFrame& f, const Edge& at_a) {
  const Edge central = make_edge(z, f.actual[0], f.actual[1]);
  const Edge pend_b = make_edge(x, f.actual[1], f.actual[2]);
  const Edge pend_z = make_edge(z, f.actual[4], f.actual[5]);
  if (!g.has_edge(central) || !g.has_edge(pend_z))
    throw ContractViolation("pattern edges missing from graph (diagonal crown)");
  if (!g.has_edge(pend_b))
    throw ContractViolation("forced diagonal x-edge missing from graph");
  return certificate_with_attachments(central,
                                      {{{f.actual[0], at_a}, {f.actual[1], pend_b}, {z, pend_z}}});
}

}  // namespace detail

// Crown from an x-edge with one endpoint in each C4 (the mixing pattern).
// Exposed separately so the construction can be exercised directly: in the
// full analysis the disjoint-triple search already covers this situation.
inline CrownCertificate build_mixing_crown(const LinearThreeGraph& g, int x, int y, int z,
                                           const std::array<int, 8>& labels, const Edge& x_edge) {
  std::vector<int> positions;
  for (int v : x_edge) {
    if (v == x) continue;
    for (int t = 0; t < 8; ++t)
      if (labels[static_cast<std::size_t>(t)] == v) positions.push_back(t);
  }
  if (positions.size() != 2)
    throw PreconditionViolated("mixing edge must have both non-x vertices labeled");
  const bool mixes = (positions[0] < 4) != (positions[1] < 4);
  if (!mixes) throw PreconditionViolated("edge does not mix V1 and V2");
  for (const auto& sigma : detail::label_symmetry_group()) {
    const int i0 = sigma[static_cast<std::size_t>(positions[0])];
    const int i1 = sigma[static_cast<std::size_t>(positions[1])];
    if ((i0 == 0 && i1 == 4) || (i0 == 4 && i1 == 0)) {
      const auto frame = detail::frame_for(labels, sigma);
      return detail::pattern_crown_apq(g, y, z, frame, x_edge);
    }
  }
  throw ContractViolation("no relabeling aligns the mixing edge");
}

// Crown from an outside edge f (one meeting S \ {x,y,z} but not {x,y,z}).
// Normalizes f's contact with the labels to one of the three canonical
// shapes and instantiates that shape's crown. Returns the certificate and
// the case tag ("554-5a" | "554-5b" | "554-5c").
inline std::pair<CrownCertificate, std::string> build_outside_edge_crown(
    const LinearThreeGraph& g, int x, int y, int z, const std::array<int, 8>& labels,
    const Edge& f) {
  std::vector<int> positions;
  for (int v : f)
    for (int t = 0; t < 8; ++t)
      if (labels[static_cast<std::size_t>(t)] == v) positions.push_back(t);
  if (positions.empty()) throw PreconditionViolated("edge does not meet the labeled vertices");
  if (edge_contains(f, x) || edge_contains(f, y) || edge_contains(f, z))
    throw PreconditionViolated("outside edge must avoid the base edge");
  auto image = [&](const std::array<int, 8>& sigma) {
    std::set<int> img;
    for (int t : positions) img.insert(sigma[static_cast<std::size_t>(t)]);
    return img;
  };
  // Single contact, normalized to a.
  for (const auto& sigma : detail::label_symmetry_group()) {
    const auto img = image(sigma);
    if (img == std::set<int>{0}) {
      const auto frame = detail::frame_for(labels, sigma);
      return {detail::pattern_crown_ars(g, y, z, frame, f), "554-5a"};
    }
  }
  // Diagonal contact {a,d} (third vertex anywhere but r, s).
  for (const auto& sigma : detail::label_symmetry_group()) {
    const auto img = image(sigma);
    if (img.count(0) && img.count(3) && !img.count(1) && !img.count(2) && !img.count(4) &&
        !img.count(5)) {
      const auto frame = detail::frame_for(labels, sigma);
      return {detail::pattern_crown_diag(g, x, z, frame, f), "554-5b"};
    }
  }
  // Cross contact {a,r}.
  for (const auto& sigma : detail::label_symmetry_group()) {
    const auto img = image(sigma);
    if (img == std::set<int>{0, 4}) {
      const auto frame = detail::frame_for(labels, sigma);
      return {detail::pattern_crown_apq(g, y, z, frame, f), "554-5c"};
    }
  }
  throw ContractViolation("outside edge " + edge_str(f) + " matches no canonical contact shape");
}

// Re-checks every closed-component invariant of `ns` against g. Returns
// the first failure, or nullopt when the structure is a genuine closed
// component of g.
inline std::optional<std::string> closed_component_failure(const LinearThreeGraph& g,
                                                           const NeighborhoodStructure& ns) {
  if (!g.has_edge(ns.base)) return "base edge not in graph";
  const std::set<int> base{ns.x, ns.y, ns.z};
  if (base != std::set<int>(ns.base.begin(), ns.base.end())) return "roles do not match base edge";
  if (g.degree(ns.x) < 4 || g.degree(ns.y) != 5 || g.degree(ns.z) != 5)
    return "role degrees are not (>=4, 5, 5)";
  std::set<int> s_set;
  for (const Edge& e : g.edges())
    if (!edges_disjoint(e, ns.base)) s_set.insert(e.begin(), e.end());
  if (std::vector<int>(s_set.begin(), s_set.end()) != ns.s_vertices)
    return "S does not match the edges meeting the base";
  if (ns.s_vertices.size() != 11) return "S does not have exactly 11 vertices";
  std::vector<Edge> meeting;
  for (const Edge& e : g.edges()) {
    const bool meets = s_set.count(e[0]) || s_set.count(e[1]) || s_set.count(e[2]);
    if (meets) meeting.push_back(e);
  }
  if (meeting != ns.edges_meeting_s) return "E_S does not match the edges meeting S";
  if (meeting.size() > 13) return "E_S has more than 13 edges";
  for (const Edge& e : meeting)
    if (!(s_set.count(e[0]) && s_set.count(e[1]) && s_set.count(e[2])))
      return "an edge of E_S leaves S";
  for (int v : ns.s_vertices)
    if (g.degree(v) > 5) return "a vertex of S has degree above 5";
  // F is recomputed, not trusted: any edge meeting S while avoiding the
  // base vertices breaks the closed-component claim.
  if (!ns.outside_edges.empty()) return "outside edge set F is not empty";
  for (const Edge& e : meeting)
    if (edges_disjoint(e, ns.base)) return "graph has an outside edge meeting S";
  return std::nullopt;
}

// The full constructive analysis described at the top of this header.
inline AnalysisOutcome analyze_554(const LinearThreeGraph& g, const Edge& base,
                                   const std::array<int, 3>& roles) {
  const auto base_index = g.edge_index(base);
  if (!base_index) throw PreconditionViolated("base edge not in graph");
  {
    Edge sorted_roles = make_edge(roles[0], roles[1], roles[2]);
    if (sorted_roles != base) throw PreconditionViolated("roles are not the base edge's vertices");
  }
  const int x = roles[0], y = roles[1], z = roles[2];
  if (g.degree(x) < 4 || g.degree(y) != 5 || g.degree(z) != 5)
    throw PreconditionViolated("analysis needs degrees (>=4, 5, 5); got d(x)=" +
                               std::to_string(g.degree(x)) + " d(y)=" + std::to_string(g.degree(y)) +
                               " d(z)=" + std::to_string(g.degree(z)));

  auto finish_crown = [&](CrownCertificate cert, std::string branch) {
    const CrownCheck check = verify_crown(g, cert);
    if (!check.ok)
      throw ContractViolation("branch " + branch + " produced an invalid crown: " + check.reason);
    AnalysisOutcome out;
    out.kind = AnalysisOutcome::Kind::Crown;
    out.branch = std::move(branch);
    out.certificate = cert;
    return out;
  };
  auto first_edge_at = [&](int v, auto&& keep) -> std::optional<int> {
    for (int ei : g.edges_at(v)) {
      if (ei == *base_index) continue;
      if (keep(g.edge(ei))) return ei;
    }
    return std::nullopt;
  };

  const std::vector<int> nbhd_y = g.vertex_neighborhood(y, base);
  const std::vector<int> nbhd_z = g.vertex_neighborhood(z, base);
  const std::set<int> set_y(nbhd_y.begin(), nbhd_y.end());
  const std::set<int> set_z(nbhd_z.begin(), nbhd_z.end());

  // Branch 1: some edge at y reaches outside the neighborhood of z. Two
  // edges through a vertex share only that vertex, so each vertex of the
  // offending edge blocks at most one candidate at the other roles.
  if (nbhd_y != nbhd_z) {
    const auto e1i = first_edge_at(y, [&](const Edge& e) {
      for (int v : e)
        if (v != y && !set_z.count(v)) return true;
      return false;
    });
    if (!e1i) throw ContractViolation("neighborhoods differ but every y-edge stays inside");
    const Edge e1 = g.edge(*e1i);
    const auto e2i = first_edge_at(x, [&](const Edge& e) { return edges_disjoint(e, e1); });
    if (!e2i) throw ContractViolation("no x-edge avoids the escaping y-edge");
    const Edge e2 = g.edge(*e2i);
    const auto e3i = first_edge_at(
        z, [&](const Edge& e) { return edges_disjoint(e, e1) && edges_disjoint(e, e2); });
    if (!e3i) throw ContractViolation("no z-edge completes the escaping-edge crown");
    return finish_crown(
        detail::certificate_with_attachments(base, {{{x, e2}, {y, e1}, {z, g.edge(*e3i)}}}),
        "554-1");
  }

  // Branch 2: some edge at x reaches outside the (now common) neighborhood.
  {
    const auto e1i = first_edge_at(x, [&](const Edge& e) {
      for (int v : e)
        if (v != x && !set_y.count(v)) return true;
      return false;
    });
    if (e1i) {
      const Edge e1 = g.edge(*e1i);
      const auto e3i = first_edge_at(z, [&](const Edge& e) { return edges_disjoint(e, e1); });
      if (!e3i) throw ContractViolation("no z-edge avoids the escaping x-edge");
      const Edge e3 = g.edge(*e3i);
      const auto e2i = first_edge_at(
          y, [&](const Edge& e) { return edges_disjoint(e, e1) && edges_disjoint(e, e3); });
      if (!e2i) throw ContractViolation("no y-edge completes the escaping-edge crown");
      return finish_crown(
          detail::certificate_with_attachments(base, {{{x, e1}, {y, g.edge(*e2i)}, {z, e3}}}),
          "554-2");
    }
  }

  // Branch 3: disjoint pendant triple across the x/y/z edge lists.
  AuxiliaryBipartite aux = build_auxiliary_bipartite(g, *base_index, y, z);
  if (aux.classification == HClassification::Irregular)
    throw ContractViolation("auxiliary pairing is not 2-regular despite equal neighborhoods");
  for (int xi : g.edges_at(x)) {
    if (xi == *base_index) continue;
    const Edge& ex = g.edge(xi);
    for (int yi : aux.y_side) {
      const Edge& ey = g.edge(yi);
      if (!edges_disjoint(ex, ey)) continue;
      for (int zi : aux.z_side) {
        const Edge& ez = g.edge(zi);
        if (!edges_disjoint(ex, ez) || !edges_disjoint(ey, ez)) continue;
        return finish_crown(
            detail::certificate_with_attachments(base, {{{x, ex}, {y, ey}, {z, ez}}}), "554-3");
      }
    }
  }
  if (aux.classification != HClassification::C4PlusC4)
    throw ContractViolation("no disjoint triple, yet the pairing is an 8-cycle");
  const std::array<int, 8> labels = derive_labels(g, aux);
  const std::set<int> v1(labels.begin(), labels.begin() + 4);
  const std::set<int> v2(labels.begin() + 4, labels.end());

  // Branch 4: an x-edge with one endpoint in each C4. Unreachable when the
  // triple search above is exhaustive, since a mixing edge always leaves a
  // disjoint pair across the two C4s; kept as a faithful step of the case
  // split and as a guard.
  for (int xi : g.edges_at(x)) {
    if (xi == *base_index) continue;
    const Edge& ex = g.edge(xi);
    int in_v1 = 0, in_v2 = 0;
    for (int v : ex) {
      if (v == x) continue;
      in_v1 += v1.count(v) ? 1 : 0;
      in_v2 += v2.count(v) ? 1 : 0;
    }
    if (in_v1 + in_v2 != 2)
      throw ContractViolation("x-edge has an unlabeled vertex after the inclusion checks");
    if (in_v1 == 1 && in_v2 == 1)
      return finish_crown(build_mixing_crown(g, x, y, z, labels, ex), "554-4");
  }

  // Branch 5: outside edges. F is every edge meeting S \ {x,y,z} while
  // avoiding {x,y,z} itself.
  std::vector<Edge> outside;
  for (const Edge& e : g.edges()) {
    if (!edges_disjoint(e, base)) continue;
    bool meets = false;
    for (int v : e) meets = meets || set_y.count(v) > 0;
    if (meets) outside.push_back(e);
  }
  if (!outside.empty()) {
    auto [cert, tag] = build_outside_edge_crown(g, x, y, z, labels, outside.front());
    return finish_crown(std::move(cert), tag);
  }

  // Branch 6: closed component.
  NeighborhoodStructure ns;
  ns.base = base;
  ns.x = x;
  ns.y = y;
  ns.z = z;
  ns.labels = labels;
  ns.v1.assign(v1.begin(), v1.end());
  ns.v2.assign(v2.begin(), v2.end());
  ns.aux = aux;
  {
    std::set<int> s_set(base.begin(), base.end());
    s_set.insert(nbhd_y.begin(), nbhd_y.end());
    std::set<int> gx_set;
    for (int v : g.vertex_neighborhood(x, base)) gx_set.insert(v);
    for (int v : gx_set)
      if (!set_y.count(v)) throw ContractViolation("x-neighborhood escapes after branch 2");
    ns.s_vertices.assign(s_set.begin(), s_set.end());
    for (const Edge& e : g.edges())
      if (s_set.count(e[0]) || s_set.count(e[1]) || s_set.count(e[2]))
        ns.edges_meeting_s.push_back(e);
  }
  if (const auto failure = closed_component_failure(g, ns))
    throw ContractViolation("closed component invariant failed: " + *failure);
  AnalysisOutcome out;
  out.kind = AnalysisOutcome::Kind::ClosedComponent;
  out.branch = "554-closed";
  out.component = std::move(ns);
  return out;
}

}  // namespace crowns
