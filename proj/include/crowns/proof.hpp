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
#include "crowns/neighborhood.hpp"
#include "crowns/weights.hpp"

namespace crowns {

// Greedy crown extraction around an edge with degrees (>=2, >=4, >=6) at
// roles (x, y, z). Stage counts: the choice at y has at least 3 candidates
// of which the two non-x vertices of e1 block at most one each; the choice
// at z has at least 5 candidates of which the four outside vertices of
// e1 and e2 block at most one each. So the greedy always completes.
inline CrownCertificate extract_crown_642(const LinearThreeGraph& g, const Edge& base,
                                          const std::array<int, 3>& roles) {
  const auto base_index = g.edge_index(base);
  if (!base_index) throw ContractViolation("base edge not in graph");
  if (make_edge(roles[0], roles[1], roles[2]) != base)
    throw ContractViolation("roles are not the base edge's vertices");
  const int x = roles[0], y = roles[1], z = roles[2];
  if (g.degree(x) < 2 || g.degree(y) < 4 || g.degree(z) < 6)
    throw ContractViolation("greedy extraction needs degrees (>=2, >=4, >=6); got d(x)=" +
                            std::to_string(g.degree(x)) + " d(y)=" + std::to_string(g.degree(y)) +
                            " d(z)=" + std::to_string(g.degree(z)));
  auto pick = [&](int v, auto&& keep) -> Edge {
    for (int ei : g.edges_at(v)) {
      if (ei == *base_index) continue;
      if (keep(g.edge(ei))) return g.edge(ei);
    }
    throw ContractViolation("greedy pendant selection failed at vertex " + std::to_string(v));
  };
  const Edge e1 = pick(x, [](const Edge&) { return true; });
  const Edge e2 = pick(y, [&](const Edge& e) { return edges_disjoint(e, e1); });
  const Edge e3 =
      pick(z, [&](const Edge& e) { return edges_disjoint(e, e1) && edges_disjoint(e, e2); });
  CrownCertificate cert =
      detail::certificate_with_attachments(base, {{{x, e1}, {y, e2}, {z, e3}}});
  const CrownCheck check = verify_crown(g, cert);
  if (!check.ok) throw ContractViolation("greedy extraction built an invalid crown: " + check.reason);
  return cert;
}

// Deletion of a closed component: drops S and E_S, reindexes the rest
// densely. The component is revalidated against g first.
struct PeelResult {
  LinearThreeGraph graph;
  std::vector<int> original_of_new;  // new index -> index in the peeled graph's parent
  std::vector<int> index_map;        // old index -> new index, -1 for deleted
};

inline PeelResult peel(const LinearThreeGraph& g, const NeighborhoodStructure& component) {
  if (const auto failure = closed_component_failure(g, component))
    throw PreconditionViolated("not a closed component of this graph: " + *failure);
  const std::set<int> s_set(component.s_vertices.begin(), component.s_vertices.end());
  PeelResult result;
  result.index_map.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s_set.count(v)) continue;
    result.index_map[static_cast<std::size_t>(v)] = static_cast<int>(result.original_of_new.size());
    result.original_of_new.push_back(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (s_set.count(e[0]) || s_set.count(e[1]) || s_set.count(e[2])) continue;
    kept.push_back(make_edge(result.index_map[static_cast<std::size_t>(e[0])],
                             result.index_map[static_cast<std::size_t>(e[1])],
                             result.index_map[static_cast<std::size_t>(e[2])]));
  }
  result.graph = LinearThreeGraph::build(g.vertex_count() - 11, kept);
  if (result.graph.high_degree_count() != g.high_degree_count())
    throw ContractViolation("peel changed the number of high-degree vertices");
  return result;
}

namespace detail {

inline CrownCertificate map_certificate(const CrownCertificate& cert,
                                        const std::vector<int>& original_of) {
  auto map_edge = [&](const Edge& e) {
    return make_edge(original_of[static_cast<std::size_t>(e[0])],
                     original_of[static_cast<std::size_t>(e[1])],
                     original_of[static_cast<std::size_t>(e[2])]);
  };
  std::array<std::pair<int, Edge>, 3> pendants;
  for (int k = 0; k < 3; ++k) {
    const Pendant& p = cert.pendants[static_cast<std::size_t>(k)];
    pendants[static_cast<std::size_t>(k)] = {original_of[static_cast<std::size_t>(p.attach)],
                                             map_edge(p.edge)};
  }
  return certificate_with_attachments(map_edge(cert.central), pendants);
}

}  // namespace detail

// The decomposition loop: while the edge count exceeds the scheme bound,
// take the first light edge, extract a crown greedily when its top degree
// reaches 6, otherwise run the neighborhood analysis and either return its
// crown or peel the closed component and repeat. Each peel removes 11
// vertices, so the loop terminates. Certificates are reported in the
// coordinates of the input graph; trace steps are in the coordinates of
// the graph at that step.
inline AnalysisOutcome decompose(const LinearThreeGraph& g, WeightScheme scheme) {
  if (scheme == WeightScheme::Theorem2 && g.high_degree_count() > 2)
    throw SchemeInapplicable("scheme 2 requires at most 2 vertices of degree >= 6; got " +
                             std::to_string(g.high_degree_count()));
  AnalysisOutcome out;
  LinearThreeGraph current = g;
  std::vector<int> to_original(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) to_original[static_cast<std::size_t>(v)] = v;
  int step = 0;
  while (true) {
    const int n = current.vertex_count();
    const int m = current.edge_count();
    const int s = current.high_degree_count();
    const Rational bound = scheme_edge_bound(scheme, n, s);
    if (Rational(m) <= bound) {
      out.kind = AnalysisOutcome::Kind::BoundSatisfied;
      out.final_n = n;
      out.final_m = m;
      out.final_s = s;
      out.final_bound = bound;
      return out;
    }
    const auto light = find_light_edge(current, scheme);
    if (!light)
      throw ContractViolation("edge count exceeds the bound but no light edge exists");
    light_edge_degree_facts(current, light->edge, scheme);

    TraceStep trace;
    trace.step = step;
    trace.n = n;
    trace.m = m;
    trace.s = s;
    trace.bound = bound;
    trace.light_edge = light->edge;
    trace.light_roles = light->roles;
    trace.light_degrees = light->degrees;
    trace.weight_sum = light->weight_sum;

    if (light->degrees[2] >= 6) {
      const CrownCertificate cert = extract_crown_642(current, light->edge, light->roles);
      trace.branch = "642";
      out.steps.push_back(std::move(trace));
      out.kind = AnalysisOutcome::Kind::Crown;
      out.branch = "642";
      out.certificate = detail::map_certificate(cert, to_original);
      return out;
    }

    AnalysisOutcome inner = analyze_554(current, light->edge, light->roles);
    if (inner.kind == AnalysisOutcome::Kind::Crown) {
      trace.branch = inner.branch;
      out.steps.push_back(std::move(trace));
      out.kind = AnalysisOutcome::Kind::Crown;
      out.branch = inner.branch;
      out.certificate = detail::map_certificate(*inner.certificate, to_original);
      return out;
    }

    const PeelResult peeled = peel(current, *inner.component);
    trace.branch = "554-closed";
    trace.peeled_vertices = inner.component->s_vertices;
    trace.removed_edges = inner.component->edges_meeting_s;
    trace.index_map = peeled.index_map;
    out.steps.push_back(std::move(trace));
    std::vector<int> next_to_original(peeled.original_of_new.size());
    for (std::size_t i = 0; i < peeled.original_of_new.size(); ++i)
      next_to_original[i] = to_original[static_cast<std::size_t>(peeled.original_of_new[i])];
    to_original = std::move(next_to_original);
    current = peeled.graph;
    ++step;
  }
}

}  // namespace crowns
