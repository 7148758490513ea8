#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crowns/crown.hpp"
#include "crowns/graph.hpp"
#include "crowns/rational.hpp"

namespace crowns {

// How the edges at y relate to the edges at z around a (5,5,4)-or-better
// edge: pair them up when they intersect. The pairing is 2-regular on 4+4
// vertices once the two neighborhoods coincide, so it is either one
// 8-cycle or two 4-cycles.
enum class HClassification { C8, C4PlusC4, Irregular };

inline std::string h_classification_name(HClassification c) {
  switch (c) {
    case HClassification::C8: return "C8";
    case HClassification::C4PlusC4: return "C4_PLUS_C4";
    default: return "IRREGULAR";
  }
}

struct AuxiliaryBipartite {
  std::vector<int> y_side;  // edge indices at y other than the base edge
  std::vector<int> z_side;  // edge indices at z other than the base edge
  std::vector<std::pair<int, int>> links;  // intersecting (y_side, z_side) index pairs
  HClassification classification = HClassification::Irregular;
};

// The analyzed neighborhood of a base edge {x,y,z} with d(x) >= 4 and
// d(y) = d(z) = 5. Labels follow the fixed pattern
//   z-edges {z,a,b},{z,c,d},{z,r,s},{z,p,q}
//   y-edges {y,a,c},{y,b,d},{y,r,p},{y,s,q}
// with V1 = {a,b,c,d} and V2 = {r,s,p,q}.
struct NeighborhoodStructure {
  Edge base{};
  int x = -1, y = -1, z = -1;
  std::vector<int> s_vertices;       // S, ascending
  std::vector<Edge> edges_meeting_s; // E_S
  std::vector<Edge> outside_edges;   // F: edges meeting S \ {x,y,z} but not {x,y,z}
  std::array<int, 8> labels{};       // a,b,c,d,r,s,p,q
  std::vector<int> v1, v2;           // ascending
  AuxiliaryBipartite aux;
};

// One round of the decomposition loop. Coordinates refer to the graph as
// it exists at that step; `index_map` records the dense reindexing a peel
// performs (old index -> new index, -1 for deleted vertices).
struct TraceStep {
  int step = 0;
  int n = 0, m = 0, s = 0;
  Rational bound;
  Edge light_edge{};
  std::array<int, 3> light_roles{};    // ascending degree
  std::array<int, 3> light_degrees{};  // aligned with roles
  Rational weight_sum;
  std::string branch;
  std::vector<int> peeled_vertices;
  std::vector<Edge> removed_edges;
  std::vector<int> index_map;
};

// Result of the constructive analysis. analyze_554 yields Crown or
// ClosedComponent; decompose yields Crown or BoundSatisfied plus the trace
// of peel steps it took to get there.
struct AnalysisOutcome {
  enum class Kind { Crown, ClosedComponent, BoundSatisfied };

  Kind kind = Kind::BoundSatisfied;
  std::string branch;                           // "642", "554-1", ..., "554-closed"
  std::optional<CrownCertificate> certificate;  // Crown
  std::optional<NeighborhoodStructure> component;  // ClosedComponent
  std::vector<TraceStep> steps;

  // Final graph state, filled by decompose for BoundSatisfied.
  int final_n = 0, final_m = 0, final_s = 0;
  Rational final_bound;
};

inline std::string outcome_kind_name(AnalysisOutcome::Kind k) {
  switch (k) {
    case AnalysisOutcome::Kind::Crown: return "CROWN";
    case AnalysisOutcome::Kind::ClosedComponent: return "CLOSED_COMPONENT";
    default: return "BOUND_SATISFIED";
  }
}

}  // namespace crowns
