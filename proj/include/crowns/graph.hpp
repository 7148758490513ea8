#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crowns/errors.hpp"

namespace crowns {

// An edge is a sorted triple of vertex indices.
using Edge = std::array<int, 3>;

inline Edge make_edge(int a, int b, int c) {
  Edge e{a, b, c};
  std::sort(e.begin(), e.end());
  return e;
}

inline bool edge_contains(const Edge& e, int v) {
  return e[0] == v || e[1] == v || e[2] == v;
}

inline int edge_intersection_size(const Edge& a, const Edge& b) {
  int count = 0;
  for (int v : a) count += edge_contains(b, v) ? 1 : 0;
  return count;
}

inline bool edges_disjoint(const Edge& a, const Edge& b) {
  return edge_intersection_size(a, b) == 0;
}

inline std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "}";
}

// Degrees of an edge's three vertices, largest first, with the owning
// vertex kept alongside each degree.
struct DegreeTriple {
  std::array<int, 3> degrees{};  // descending
  std::array<int, 3> vertices{};  // aligned with degrees

  // True iff the sorted degrees dominate (a, b, c) componentwise.
  bool meets(int a, int b, int c) const {
    std::array<int, 3> want{a, b, c};
    std::sort(want.begin(), want.end(), std::greater<int>());
    return degrees[0] >= want[0] && degrees[1] >= want[1] && degrees[2] >= want[2];
  }
};

// Immutable 3-uniform hypergraph in which any two edges share at most one
// vertex. Edges are stored sorted (each triple ascending, the list
// lexicographic), so iteration order is reproducible no matter how the
// graph was assembled. All mutation is "build a new graph".
class LinearThreeGraph {
 public:
  LinearThreeGraph() = default;

  // Validates and normalizes an edge list. Error messages refer to
  // positions in the input list, not the stored order.
  static LinearThreeGraph build(int n, const std::vector<Edge>& triples) {
    if (n < 0) throw GraphError(GraphError::Kind::OutOfRange, "vertex count must be non-negative");
    std::vector<Edge> sorted_triples;
    sorted_triples.reserve(triples.size());
    for (std::size_t i = 0; i < triples.size(); ++i) {
      Edge e = triples[i];
      std::sort(e.begin(), e.end());
      if (e[0] == e[1] || e[1] == e[2]) {
        throw GraphError(GraphError::Kind::NotThreeDistinct,
                         "edge #" + std::to_string(i) + " " + edge_str(triples[i]) +
                             " does not have three distinct vertices");
      }
      if (e[0] < 0 || e[2] >= n) {
        throw GraphError(GraphError::Kind::OutOfRange,
                         "edge #" + std::to_string(i) + " " + edge_str(e) +
                             " has a vertex outside [0, " + std::to_string(n) + ")");
      }
      sorted_triples.push_back(e);
    }
    // Duplicates are reported as such even though they also break
    // linearity; the distinction matters for error reporting only.
    {
      std::map<Edge, std::size_t> seen;
      for (std::size_t i = 0; i < sorted_triples.size(); ++i) {
        auto [it, inserted] = seen.emplace(sorted_triples[i], i);
        if (!inserted) {
          throw GraphError(GraphError::Kind::DuplicateEdge,
                           "edge #" + std::to_string(i) + " " + edge_str(sorted_triples[i]) +
                               " duplicates edge #" + std::to_string(it->second));
        }
      }
    }
    {
      std::map<std::pair<int, int>, std::size_t> pair_owner;
      for (std::size_t i = 0; i < sorted_triples.size(); ++i) {
        const Edge& e = sorted_triples[i];
        const std::pair<int, int> pairs[3] = {{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}};
        for (const auto& p : pairs) {
          auto [it, inserted] = pair_owner.emplace(p, i);
          if (!inserted) {
            throw GraphError(GraphError::Kind::LinearityViolation,
                             "edges #" + std::to_string(it->second) + " and #" + std::to_string(i) +
                                 " share the pair {" + std::to_string(p.first) + "," +
                                 std::to_string(p.second) + "}");
          }
        }
      }
    }
    LinearThreeGraph g;
    g.n_ = n;
    g.edges_ = std::move(sorted_triples);
    std::sort(g.edges_.begin(), g.edges_.end());
    g.incident_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
      for (int v : g.edges_[i]) g.incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
  }

  // Indices of the edges containing v, ascending.
  const std::vector<int>& edges_at(int v) const {
    check_vertex(v);
    return incident_[static_cast<std::size_t>(v)];
  }

  std::optional<int> edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return std::nullopt;
  }

  bool has_edge(const Edge& e) const { return edge_index(e).has_value(); }

  // s: the number of vertices of degree at least 6.
  int high_degree_count() const {
    int s = 0;
    for (const auto& inc : incident_) s += inc.size() >= 6 ? 1 : 0;
    return s;
  }

  DegreeTriple degree_triple(const Edge& e) const {
    if (!has_edge(e))
      throw GraphError(GraphError::Kind::EdgeNotInGraph, "edge " + edge_str(e) + " not in graph");
    DegreeTriple t;
    std::array<std::pair<int, int>, 3> by_degree;  // (degree, vertex)
    for (int i = 0; i < 3; ++i) by_degree[static_cast<std::size_t>(i)] = {degree(e[static_cast<std::size_t>(i)]), e[static_cast<std::size_t>(i)]};
    // Descending by degree, ascending vertex id on ties.
    std::sort(by_degree.begin(), by_degree.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    for (int i = 0; i < 3; ++i) {
      t.degrees[static_cast<std::size_t>(i)] = by_degree[static_cast<std::size_t>(i)].first;
      t.vertices[static_cast<std::size_t>(i)] = by_degree[static_cast<std::size_t>(i)].second;
    }
    return t;
  }

  // All vertices sharing an edge with p, except p itself and the vertices
  // of `excluded`. Ascending.
  std::vector<int> vertex_neighborhood(int p, const Edge& excluded) const {
    check_vertex(p);
    std::vector<int> out;
    for (int ei : edges_at(p)) {
      for (int v : edges_[static_cast<std::size_t>(ei)]) {
        if (v == p || edge_contains(excluded, v)) continue;
        out.push_back(v);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const LinearThreeGraph& a, const LinearThreeGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw GraphError(GraphError::Kind::OutOfRange,
                       "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Subgraph induced by `vertices` (need not be sorted), reindexed densely in
// ascending order of the original ids. Returns the graph and the map from
// new index to original vertex.
struct InducedSubgraph {
  LinearThreeGraph graph;
  std::vector<int> original_of_new;
};

inline InducedSubgraph induced_subgraph(const LinearThreeGraph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> new_of_old(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.vertex_count())
      throw GraphError(GraphError::Kind::OutOfRange, "induced vertex outside graph");
    new_of_old[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (new_of_old[static_cast<std::size_t>(e[0])] >= 0 && new_of_old[static_cast<std::size_t>(e[1])] >= 0 &&
        new_of_old[static_cast<std::size_t>(e[2])] >= 0) {
      kept.push_back(make_edge(new_of_old[static_cast<std::size_t>(e[0])], new_of_old[static_cast<std::size_t>(e[1])],
                               new_of_old[static_cast<std::size_t>(e[2])]));
    }
  }
  return {LinearThreeGraph::build(static_cast<int>(vertices.size()), kept), std::move(vertices)};
}

}  // namespace crowns
