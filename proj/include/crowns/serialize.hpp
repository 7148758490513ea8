#pragma once

#include <string>

#include <json.hpp>

#include "crowns/analysis.hpp"
#include "crowns/crown.hpp"
#include "crowns/graph.hpp"
#include "crowns/search.hpp"
#include "crowns/weights.hpp"

namespace crowns {

// All machine-readable output goes through these helpers. Keys keep
// insertion order and rationals are rendered as "p/q" strings, so the
// serialized form of a deterministic computation is byte-stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const Edge& e) { return Json::array({e[0], e[1], e[2]}); }

inline Json to_json(const LinearThreeGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(to_json(e));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Json to_json(const CrownCertificate& cert) {
  Json pendants = Json::array();
  for (const Pendant& p : cert.pendants)
    pendants.push_back(Json{{"edge", to_json(p.edge)}, {"attach", p.attach}});
  return Json{{"central", to_json(cert.central)}, {"pendants", std::move(pendants)}};
}

inline Json to_json(const TraceStep& step) {
  Json removed = Json::array();
  for (const Edge& e : step.removed_edges) removed.push_back(to_json(e));
  return Json{{"step", step.step},
              {"n", step.n},
              {"m", step.m},
              {"s", step.s},
              {"bound", step.bound.str()},
              {"light_edge", Json::array({step.light_roles[0], step.light_roles[1], step.light_roles[2]})},
              {"degrees", Json::array({step.light_degrees[0], step.light_degrees[1], step.light_degrees[2]})},
              {"weight_sum", step.weight_sum.str()},
              {"branch", step.branch},
              {"peeled_vertices", step.peeled_vertices},
              {"removed_edges", std::move(removed)},
              {"index_map", step.index_map}};
}

// Trace format: the ordered list of steps followed by one outcome record.
inline Json trace_to_json(const AnalysisOutcome& outcome) {
  Json trace = Json::array();
  for (const TraceStep& step : outcome.steps) trace.push_back(to_json(step));
  Json final_record{{"outcome", outcome_kind_name(outcome.kind)}};
  if (outcome.kind == AnalysisOutcome::Kind::Crown) {
    final_record["branch"] = outcome.branch;
    final_record["certificate"] = to_json(*outcome.certificate);
  } else if (outcome.kind == AnalysisOutcome::Kind::BoundSatisfied) {
    final_record["n"] = outcome.final_n;
    final_record["m"] = outcome.final_m;
    final_record["s"] = outcome.final_s;
    final_record["bound"] = outcome.final_bound.str();
  }
  trace.push_back(std::move(final_record));
  return trace;
}

// Timing is reported only on request: the default rendering of a search
// result is byte-identical across reruns.
inline Json to_json(const SearchResult& result, bool include_timing = false) {
  Json out{{"n", result.n},
           {"best_count", result.best_count},
           {"exhaustive", result.exhaustive},
           {"nodes_explored", result.nodes_explored},
           {"seed", result.seed},
           {"single_threaded", result.single_threaded},
           {"witness", to_json(result.witness)}};
  if (include_timing) out["wall_time_seconds"] = result.wall_time_seconds;
  return out;
}

}  // namespace crowns
