#pragma once

// Hand-built instances shared across the test suites. Vertex keys for the
// closed-component family: x=0 y=1 z=2 a=3 b=4 c=5 d=6 r=7 s=8 p=9 q=10.

#include <vector>

#include "crowns/graph.hpp"

namespace testsupport {

using crowns::Edge;
using crowns::LinearThreeGraph;

// The 9-vertex, 4-edge crown itself: central {0,1,2}, pendants at 0, 1, 2.
inline LinearThreeGraph crown_graph() {
  return LinearThreeGraph::build(9, {{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}});
}

// Fano plane: 7 points, 7 lines, any two lines meet in one point.
inline LinearThreeGraph fano_plane() {
  return LinearThreeGraph::build(
      7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// k edges through vertex 0, all other vertices fresh.
inline LinearThreeGraph star(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back(crowns::make_edge(0, 1 + 2 * i, 2 + 2 * i));
  return LinearThreeGraph::build(1 + 2 * k, edges);
}

// Affine plane of order 3 (the unique Steiner triple system on 9 points),
// points (r,c) -> 3r + c.
inline LinearThreeGraph sts9() {
  return LinearThreeGraph::build(9, {{0, 1, 2},
                                     {3, 4, 5},
                                     {6, 7, 8},
                                     {0, 3, 6},
                                     {1, 4, 7},
                                     {2, 5, 8},
                                     {0, 4, 8},
                                     {1, 5, 6},
                                     {2, 3, 7},
                                     {0, 5, 7},
                                     {1, 3, 8},
                                     {2, 4, 6}});
}

// Cyclic Steiner triple system on 13 points from base blocks {0,1,4} and
// {0,2,7}: 26 blocks, every vertex of degree 6.
inline LinearThreeGraph sts13() {
  std::vector<Edge> edges;
  for (int i = 0; i < 13; ++i) {
    edges.push_back(crowns::make_edge(i, (i + 1) % 13, (i + 4) % 13));
    edges.push_back(crowns::make_edge(i, (i + 2) % 13, (i + 7) % 13));
  }
  return LinearThreeGraph::build(13, edges);
}

// Edge list of the 11-vertex closed-component configuration: the base edge
// {x,y,z}, four z-edges and four y-edges paired as two 4-cycles, plus the
// selected diagonal x-edges.
inline std::vector<Edge> closed_component_edges(bool with_ad, bool with_bc, bool with_rq,
                                                bool with_sp) {
  std::vector<Edge> edges = {{0, 1, 2}, {2, 3, 4}, {2, 5, 6},  {2, 7, 8}, {2, 9, 10},
                             {1, 3, 5}, {1, 4, 6}, {1, 7, 9},  {1, 8, 10}};
  if (with_ad) edges.push_back({0, 3, 6});
  if (with_bc) edges.push_back({0, 4, 5});
  if (with_rq) edges.push_back({0, 7, 10});
  if (with_sp) edges.push_back({0, 8, 9});
  return edges;
}

inline LinearThreeGraph closed_component(int extra_vertices = 0) {
  return LinearThreeGraph::build(11 + extra_vertices,
                                 closed_component_edges(true, true, true, false));
}

// Same union of vertex sets, second graph relabeled above the first.
inline LinearThreeGraph disjoint_union(const LinearThreeGraph& a, const LinearThreeGraph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges())
    edges.push_back(crowns::make_edge(e[0] + a.vertex_count(), e[1] + a.vertex_count(),
                                      e[2] + a.vertex_count()));
  return LinearThreeGraph::build(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace testsupport
