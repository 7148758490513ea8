#pragma once

#include <array>
#include <optional>
#include <string>

#include "crowns/errors.hpp"
#include "crowns/graph.hpp"
#include "crowns/rational.hpp"

namespace crowns {

// The two vertex-weight schemes used by the counting argument. Scheme 1 is
// context-free; scheme 2 weights a degree-3 vertex by whether its edge
// touches a vertex of degree >= 6. Everything is exact rational: the
// argument lives on strict inequalities that floating point would blur.
enum class WeightScheme { Theorem1, Theorem2 };

inline std::string scheme_name(WeightScheme s) {
  return s == WeightScheme::Theorem1 ? "THEOREM_1" : "THEOREM_2";
}

inline Rational scheme_threshold(WeightScheme s) {
  return s == WeightScheme::Theorem1 ? Rational(2, 3) : Rational(7, 10);
}

// Bound on |E| implied by the scheme: 3(n-s)/2, resp. 10(n-s)/7.
inline Rational scheme_edge_bound(WeightScheme s, int n, int high_degree_count) {
  const int covered = n - high_degree_count;
  return s == WeightScheme::Theorem1 ? Rational(3L * covered, 2) : Rational(10L * covered, 7);
}

// chi for scheme 1: depends only on the vertex degree.
inline Rational chi_theorem1(int degree) { return degree <= 5 ? Rational(1) : Rational(0); }

// chi for scheme 2: `edge_has_high_degree_vertex` refers to the edge the
// weight is evaluated in.
inline Rational chi_theorem2(int degree, bool edge_has_high_degree_vertex) {
  if (degree >= 6) return Rational(0);
  if (degree == 3) return edge_has_high_degree_vertex ? Rational(21, 20) : Rational(9, 10);
  return Rational(1);
}

// Per-edge weight sum from the three degrees alone; both schemes only look
// at degrees, so this is the whole story for one edge.
inline Rational edge_weight_sum_from_degrees(WeightScheme scheme, const std::array<int, 3>& deg) {
  const bool has_high = deg[0] >= 6 || deg[1] >= 6 || deg[2] >= 6;
  Rational sum;
  for (int d : deg) {
    const Rational chi =
        scheme == WeightScheme::Theorem1 ? chi_theorem1(d) : chi_theorem2(d, has_high);
    sum += chi / Rational(d);
  }
  return sum;
}

inline Rational edge_weight_sum(const LinearThreeGraph& g, const Edge& e, WeightScheme scheme) {
  std::array<int, 3> deg{g.degree(e[0]), g.degree(e[1]), g.degree(e[2])};
  return edge_weight_sum_from_degrees(scheme, deg);
}

// Sum over all edges of the per-slot weight chi(v[,e])/d(v). For scheme 1
// this double-counts to the number of vertices with 1 <= d(v) <= 5, which
// equals n - s whenever the graph has no isolated vertices; for scheme 2
// it is bounded by n - s when at most two vertices have degree >= 6.
inline Rational weighted_sum_identity(const LinearThreeGraph& g, WeightScheme scheme) {
  Rational total;
  for (const Edge& e : g.edges()) total += edge_weight_sum(g, e, scheme);
  return total;
}

// An edge whose weight sum fell strictly below the scheme threshold, with
// its vertices ordered by ascending degree (vertex id breaks ties).
struct LightEdge {
  int edge_index = -1;
  Edge edge{};
  std::array<int, 3> roles{};    // x, y, z by ascending degree
  std::array<int, 3> degrees{};  // aligned with roles
  Rational weight_sum;
};

// First edge in index order with weight sum < threshold. When
// |E| > 3(n-s)/2 (resp. 10(n-s)/7 with s <= 2) one exists by averaging;
// that guarantee is a tested property, not an assumption here.
inline std::optional<LightEdge> find_light_edge(const LinearThreeGraph& g, WeightScheme scheme) {
  const Rational threshold = scheme_threshold(scheme);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const Rational sum = edge_weight_sum(g, e, scheme);
    if (sum < threshold) {
      LightEdge light;
      light.edge_index = i;
      light.edge = e;
      std::array<std::pair<int, int>, 3> by_degree;  // (degree, vertex)
      for (int k = 0; k < 3; ++k)
        by_degree[static_cast<std::size_t>(k)] = {g.degree(e[static_cast<std::size_t>(k)]),
                                                  e[static_cast<std::size_t>(k)]};
      std::sort(by_degree.begin(), by_degree.end());
      for (int k = 0; k < 3; ++k) {
        light.roles[static_cast<std::size_t>(k)] = by_degree[static_cast<std::size_t>(k)].second;
        light.degrees[static_cast<std::size_t>(k)] = by_degree[static_cast<std::size_t>(k)].first;
      }
      light.weight_sum = sum;
      return light;
    }
  }
  return std::nullopt;
}

// The degree facts a light edge is forced to satisfy: d(x) >= 2 and
// d(y) >= 4 always, and degrees dominating (5,5,4) when no vertex of the
// edge has degree >= 6. Both schemes force the same facts; the scheme-2
// case is pinned down by an exhaustive rational scan in the tests.
struct LightEdgeFacts {
  DegreeTriple triple;        // descending, with vertex assignment
  bool all_degrees_at_most_5 = false;
  bool meets_554 = false;
};

inline LightEdgeFacts light_edge_degree_facts(const LinearThreeGraph& g, const Edge& e,
                                              WeightScheme scheme) {
  const Rational sum = edge_weight_sum(g, e, scheme);
  if (!(sum < scheme_threshold(scheme)))
    throw PreconditionViolated("edge " + edge_str(e) + " is not light under " +
                               scheme_name(scheme) + " (sum " + sum.str() + ")");
  LightEdgeFacts facts;
  facts.triple = g.degree_triple(e);
  const int dz = facts.triple.degrees[0];
  const int dy = facts.triple.degrees[1];
  const int dx = facts.triple.degrees[2];
  if (dx < 2)
    throw ContractViolation("light edge " + edge_str(e) + " has minimum degree " +
                            std::to_string(dx) + " < 2");
  if (dy < 4)
    throw ContractViolation("light edge " + edge_str(e) + " has middle degree " +
                            std::to_string(dy) + " < 4");
  facts.all_degrees_at_most_5 = dz <= 5;
  if (facts.all_degrees_at_most_5) {
    facts.meets_554 = facts.triple.meets(5, 5, 4);
    if (!facts.meets_554)
      throw ContractViolation("light edge " + edge_str(e) + " with max degree <= 5 misses (5,5,4)");
  }
  return facts;
}

}  // namespace crowns
