// Acceptance suite: one line per criterion, failures are fatal for the
// exit code. Each criterion states its own tolerance (exact rational
// equality unless noted) and runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/builders.hpp"
#include "../support/oracles.hpp"
#include "crowns/crown.hpp"
#include "crowns/graph.hpp"
#include "crowns/neighborhood.hpp"
#include "crowns/proof.hpp"
#include "crowns/search.hpp"
#include "crowns/serialize.hpp"
#include "crowns/weights.hpp"

namespace {

using crowns::AnalysisOutcome;
using crowns::Edge;
using crowns::LinearThreeGraph;
using crowns::Rational;
using crowns::WeightScheme;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool check(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// ---- criterion 1: the double-count identity ------------------------------

bool criterion_identity(std::string& detail) {
  bool ok = true;
  int crowned = 0, crown_free = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 37);  // up to 40
    const int target = 2 + static_cast<int>((seed * 7) % 45);
    const auto g =
        testsupport::compact_covered(testsupport::random_linear_graph(n, seed, target));
    if (g.edge_count() == 0) continue;
    const Rational sum = crowns::weighted_sum_identity(g, WeightScheme::Theorem1);
    const Rational expected(g.vertex_count() - g.high_degree_count());
    ok = check(sum == expected, detail,
               "seed " + std::to_string(seed) + ": sum " + sum.str() + " != " + expected.str()) &&
         ok;
    (crowns::is_crown_free(g) ? crown_free : crowned) += 1;
  }
  ok = check(crowned > 50 && crown_free > 50, detail,
             "sample did not cover both crowned and crown-free graphs") &&
       ok;
  detail = detail.empty()
               ? "1000 graphs, " + std::to_string(crowned) + " with crowns, exact equality"
               : detail;
  return ok;
}

// ---- criteria 2 and 3: the two inequalities as properties ----------------

std::vector<LinearThreeGraph> crown_free_suite() {
  std::vector<LinearThreeGraph> suite;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const int n = 6 + static_cast<int>(seed % 35);  // up to 40
    suite.push_back(crowns::random_crown_free(n, seed));
  }
  return suite;
}

bool criterion_theorem1(std::string& detail) {
  bool ok = true;
  int index = 0;
  for (const auto& g : crown_free_suite()) {
    ++index;
    const Rational bound =
        crowns::scheme_edge_bound(WeightScheme::Theorem1, g.vertex_count(), g.high_degree_count());
    ok = check(Rational(g.edge_count()) <= bound, detail,
               "instance " + std::to_string(index) + " violates 3(n-s)/2") &&
         ok;
    const auto outcome = crowns::decompose(g, WeightScheme::Theorem1);
    ok = check(outcome.kind == AnalysisOutcome::Kind::BoundSatisfied, detail,
               "instance " + std::to_string(index) + " did not decompose to BOUND_SATISFIED") &&
         ok;
  }
  if (detail.empty()) detail = "500 generated crown-free graphs, zero tolerance";
  return ok;
}

bool criterion_theorem2(std::string& detail) {
  bool ok = true;
  int kept = 0, index = 0;
  for (const auto& g : crown_free_suite()) {
    ++index;
    if (g.high_degree_count() > 2) continue;
    ++kept;
    const Rational bound =
        crowns::scheme_edge_bound(WeightScheme::Theorem2, g.vertex_count(), g.high_degree_count());
    ok = check(Rational(g.edge_count()) <= bound, detail,
               "instance " + std::to_string(index) + " violates 10(n-s)/7") &&
         ok;
    const auto outcome = crowns::decompose(g, WeightScheme::Theorem2);
    ok = check(outcome.kind == AnalysisOutcome::Kind::BoundSatisfied, detail,
               "instance " + std::to_string(index) + " did not decompose to BOUND_SATISFIED") &&
         ok;
  }
  ok = check(kept >= 300, detail, "too few s <= 2 instances: " + std::to_string(kept)) && ok;
  if (detail.empty()) detail = std::to_string(kept) + " instances with s <= 2, zero tolerance";
  return ok;
}

// ---- criterion 4: constructive extraction matches the oracle -------------

bool criterion_oracle_equivalence(std::string& detail) {
  bool ok = true;
  int violators = 0;
  std::set<std::string> branches;
  auto drive = [&](const LinearThreeGraph& g, std::uint64_t seed) {
    ++violators;
    const auto outcome = crowns::decompose(g, WeightScheme::Theorem1);
    ok = check(outcome.kind == AnalysisOutcome::Kind::Crown, detail,
               "violator seed " + std::to_string(seed) + " did not yield a crown") &&
         ok;
    if (outcome.kind == AnalysisOutcome::Kind::Crown) {
      branches.insert(outcome.branch);
      ok = check(crowns::verify_crown(g, *outcome.certificate).ok, detail,
                 "certificate rejected at seed " + std::to_string(seed)) &&
           ok;
    }
    ok = check(crowns::find_crown_exhaustive(g).has_value(), detail,
               "oracle found no crown at seed " + std::to_string(seed)) &&
         ok;
  };
  // unrestricted dense packings, 12..15 vertices (mostly degree-6 routes)
  std::uint64_t seed = 0;
  while (violators < 120 && seed < 4000) {
    ++seed;
    const int n = 12 + static_cast<int>(seed % 4);
    const auto g = testsupport::random_maximal_packing(n, seed);
    const Rational bound =
        crowns::scheme_edge_bound(WeightScheme::Theorem1, g.vertex_count(), g.high_degree_count());
    if (Rational(g.edge_count()) > bound) drive(g, seed);
  }
  // degree-capped dense packings, 11..13 vertices (neighborhood routes)
  seed = 0;
  while (violators < 200 && seed < 8000) {
    ++seed;
    const int n = 11 + static_cast<int>(seed % 3);
    const auto g = testsupport::random_capped_packing(n, seed);
    if (2 * g.edge_count() > 3 * n) drive(g, seed);
  }
  ok = check(violators == 200, detail,
             "only " + std::to_string(violators) + " bound violators were generated") &&
       ok;
  ok = check(branches.count("642") == 1, detail, "no violator used the greedy route") && ok;
  ok = check(branches.count("554-1") == 1, detail, "no violator used an escape route") && ok;
  if (detail.empty()) {
    detail = "200 violating instances, constructive == oracle, branches:";
    for (const auto& b : branches) detail += " " + b;
  }
  return ok;
}

// ---- criterion 5: branch coverage of the neighborhood analysis -----------

bool criterion_branch_coverage(std::string& detail) {
  using testsupport::closed_component_edges;
  bool ok = true;
  std::set<std::string> branches_seen;

  auto run_base = [&](const std::vector<Edge>& edges, int n) {
    const auto g = LinearThreeGraph::build(n, edges);
    return std::make_pair(g, crowns::analyze_554(g, {0, 1, 2}, {0, 1, 2}));
  };
  auto expect_crown = [&](const std::vector<Edge>& edges, int n, const std::string& branch) {
    const auto [g, outcome] = run_base(edges, n);
    bool good = outcome.kind == AnalysisOutcome::Kind::Crown && outcome.branch == branch &&
                crowns::verify_crown(g, *outcome.certificate).ok &&
                crowns::find_crown_exhaustive(g).has_value() && testsupport::naive_has_crown(g);
    branches_seen.insert(outcome.branch);
    ok = check(good, detail, "branch " + branch + " scenario failed (got " + outcome.branch + ")") && ok;
  };

  // the untouched closed component, both diagonal counts
  for (bool with_sp : {false, true}) {
    const auto [g, outcome] = run_base(closed_component_edges(true, true, true, with_sp), 11);
    const bool closed = outcome.kind == AnalysisOutcome::Kind::ClosedComponent;
    branches_seen.insert(outcome.branch);
    ok = check(closed, detail, "closed component not recognized") && ok;
    if (closed) {
      const auto& ns = *outcome.component;
      ok = check(ns.s_vertices.size() == 11, detail, "|S| != 11") && ok;
      ok = check(ns.edges_meeting_s.size() <= 13, detail, "|E_S| > 13") && ok;
      bool degrees_ok = true;
      for (int v : ns.s_vertices) degrees_ok = degrees_ok && g.degree(v) <= 5;
      ok = check(degrees_ok, detail, "degree above 5 inside S") && ok;
      const auto induced = crowns::induced_subgraph(g, ns.s_vertices);
      ok = check(crowns::is_crown_free(induced.graph), detail, "component is not crown-free") && ok;
      ok = check(!testsupport::naive_has_crown(induced.graph), detail,
                 "oracle disagrees on component crown-freeness") &&
           ok;
    }
  }

  // broken G(y) = G(z)
  {
    auto edges = closed_component_edges(true, true, true, false);
    *std::find(edges.begin(), edges.end(), Edge{1, 8, 10}) = Edge{1, 8, 11};
    expect_crown(edges, 12, "554-1");
  }
  // broken G(x) subset of G(y)
  {
    auto edges = closed_component_edges(true, true, true, false);
    *std::find(edges.begin(), edges.end(), Edge{0, 7, 10}) = Edge{0, 7, 11};
    expect_crown(edges, 12, "554-2");
  }
  // eight-cycle pairing with a disjoint triple
  expect_crown({{0, 1, 2}, {2, 3, 4}, {2, 5, 6}, {2, 7, 8}, {2, 9, 10},
                {1, 4, 5}, {1, 6, 7}, {1, 8, 9}, {1, 3, 10},
                {0, 3, 5}, {0, 4, 6}, {0, 7, 9}},
               11, "554-3");
  // V1/V2-mixing x-edge; the exhaustive triple search fires first, and the
  // dedicated mixing constructor is exercised directly below.
  {
    std::vector<Edge> edges = {{0, 1, 2}, {2, 3, 4}, {2, 5, 6},  {2, 7, 8}, {2, 9, 10},
                               {1, 3, 5}, {1, 4, 6}, {1, 7, 9},  {1, 8, 10},
                               {0, 3, 6}, {0, 8, 9}, {0, 5, 7}};
    expect_crown(edges, 11, "554-3");
    const auto g = LinearThreeGraph::build(11, edges);
    const auto aux = crowns::build_auxiliary_bipartite(g, *g.edge_index({0, 1, 2}), 1, 2);
    const auto labels = crowns::derive_labels(g, aux);
    const auto cert = crowns::build_mixing_crown(g, 0, 1, 2, labels, {0, 5, 7});
    ok = check(crowns::verify_crown(g, cert).ok, detail, "mixing constructor built a bad crown") &&
         ok;
    branches_seen.insert("554-4");
  }
  // the three outside-edge cases
  {
    auto edges = closed_component_edges(false, true, true, true);
    edges.push_back({3, 11, 12});
    expect_crown(edges, 13, "554-5a");
  }
  {
    auto edges = closed_component_edges(false, true, true, true);
    edges.push_back({3, 6, 11});
    expect_crown(edges, 12, "554-5b");
  }
  {
    auto edges = closed_component_edges(false, true, true, true);
    edges.push_back({3, 7, 11});
    expect_crown(edges, 12, "554-5c");
  }

  for (const std::string branch :
       {"554-1", "554-2", "554-3", "554-4", "554-5a", "554-5b", "554-5c", "554-closed"})
    ok = check(branches_seen.count(branch) == 1, detail, "branch " + branch + " not exercised") &&
         ok;
  if (detail.empty())
    detail = "all branches exercised; crowns verified against the oracle";
  return ok;
}

// ---- criterion 6: light-edge degree deductions ----------------------------

bool criterion_degree_scan(std::string& detail) {
  bool ok = true;
  long light_t1 = 0, light_t2 = 0;
  for (const auto scheme : {WeightScheme::Theorem1, WeightScheme::Theorem2}) {
    const Rational threshold = crowns::scheme_threshold(scheme);
    for (int dx = 1; dx <= 10; ++dx)
      for (int dy = 1; dy <= 10; ++dy)
        for (int dz = 1; dz <= 10; ++dz) {
          const Rational sum = crowns::edge_weight_sum_from_degrees(scheme, {dx, dy, dz});
          if (!(sum < threshold)) continue;
          (scheme == WeightScheme::Theorem1 ? light_t1 : light_t2) += 1;
          std::array<int, 3> sorted{dx, dy, dz};
          std::sort(sorted.begin(), sorted.end());
          ok = check(sorted[0] >= 2, detail, "light triple with d(x) < 2") && ok;
          ok = check(sorted[1] >= 4, detail, "light triple with d(y) < 4") && ok;
          if (sorted[2] <= 5) {
            ok = check(sorted[0] >= 4 && sorted[1] >= 5 && sorted[2] >= 5, detail,
                       "light triple below (5,5,4) with all degrees <= 5") &&
                 ok;
          }
        }
  }
  ok = check(light_t1 > 0 && light_t2 > 0, detail, "no light triples encountered") && ok;
  if (detail.empty())
    detail = "scanned 1000 triples per scheme (" + std::to_string(light_t1) + " / " +
             std::to_string(light_t2) + " light), deductions exact";
  return ok;
}

// ---- criterion 7: bounds arithmetic ---------------------------------------

bool criterion_bounds(std::string& detail) {
  bool ok = true;
  for (int n = 3; n <= 1000; ++n) {
    const auto lb = crowns::lower_bound_value(n);
    const int residue = (n - 3) % 4;
    const int expected_eps = residue <= 1 ? 0 : (residue == 2 ? 1 : 3);
    ok = check(lb.epsilon == expected_eps, detail, "epsilon wrong at n=" + std::to_string(n)) && ok;
    ok = check(lb.value == 6L * ((n - 3) / 4) + expected_eps, detail,
               "formula wrong at n=" + std::to_string(n)) &&
         ok;
    if (n % 4 == 3) {
      ok = check(Rational(lb.value) == crowns::corollary_bound(n), detail,
                 "tightness fails at n=" + std::to_string(n)) &&
           ok;
      ok = check(crowns::corollary_bound(n) == Rational(3L * (n - 3), 2), detail,
                 "corollary value wrong at n=" + std::to_string(n)) &&
           ok;
    }
  }
  if (detail.empty()) detail = "n in [3,1000], all epsilon cases and the tight residue class";
  return ok;
}

// ---- criterion 8: exact extremal values at desk scale ----------------------

bool criterion_exact_values(std::string& detail) {
  bool ok = true;
  std::ostringstream values;
  for (int n = 3; n <= 9; ++n) {
    const auto result = crowns::exact_max_edges(n);
    ok = check(result.exhaustive, detail, "search not exhaustive at n=" + std::to_string(n)) && ok;
    ok = check(crowns::is_crown_free(result.witness), detail,
               "witness not crown-free at n=" + std::to_string(n)) &&
         ok;
    ok = check(result.witness.edge_count() == result.best_count, detail,
               "witness size mismatch at n=" + std::to_string(n)) &&
         ok;
    ok = check(result.best_count >= crowns::lower_bound_value(n).value, detail,
               "below the closed-form lower bound at n=" + std::to_string(n)) &&
         ok;
    ok = check(result.best_count <= 2 * n, detail, "above 2n at n=" + std::to_string(n)) && ok;
    ok = check(3 * result.best_count < 5 * n, detail,
               "at or above 5n/3 at n=" + std::to_string(n)) &&
         ok;
    if (n <= 7) {
      const int naive = testsupport::naive_max_crown_free_edges(n);
      ok = check(result.best_count == naive, detail,
                 "naive enumerator disagrees at n=" + std::to_string(n) + " (" +
                     std::to_string(naive) + " vs " + std::to_string(result.best_count) + ")") &&
           ok;
    }
    values << (n > 3 ? " " : "") << "ex(" << n << ")=" << result.best_count;
  }
  if (detail.empty()) detail = values.str();
  return ok;
}

// ---- criterion 9: determinism ----------------------------------------------

bool criterion_determinism(std::string& detail) {
  bool ok = true;
  const auto g = testsupport::disjoint_union(testsupport::closed_component(),
                                             testsupport::sts13());
  const std::string trace_a =
      crowns::trace_to_json(crowns::decompose(g, WeightScheme::Theorem1)).dump(2);
  const std::string trace_b =
      crowns::trace_to_json(crowns::decompose(g, WeightScheme::Theorem1)).dump(2);
  ok = check(trace_a == trace_b, detail, "decompose traces differ between runs") && ok;

  const auto h = crowns::random_crown_free(25, 7);
  const std::string trace_c =
      crowns::trace_to_json(crowns::decompose(h, WeightScheme::Theorem1)).dump(2);
  const std::string trace_d =
      crowns::trace_to_json(crowns::decompose(h, WeightScheme::Theorem1)).dump(2);
  ok = check(trace_c == trace_d, detail, "bound-satisfied traces differ between runs") && ok;

  const std::string search_a = crowns::to_json(crowns::exact_max_edges(8, 0.0, 11)).dump(2);
  const std::string search_b = crowns::to_json(crowns::exact_max_edges(8, 0.0, 11)).dump(2);
  ok = check(search_a == search_b, detail, "search results differ between runs") && ok;
  if (detail.empty()) detail = "traces and search results byte-identical across reruns";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "double-count identity", 60.0, criterion_identity},
      {2, "edge bound 3(n-s)/2 with constructive confirmation", 300.0, criterion_theorem1},
      {3, "edge bound 10(n-s)/7 when s <= 2", 300.0, criterion_theorem2},
      {4, "constructive/oracle equivalence on violators", 600.0, criterion_oracle_equivalence},
      {5, "neighborhood-analysis branch coverage", 120.0, criterion_branch_coverage},
      {6, "light-edge degree deductions", 60.0, criterion_degree_scan},
      {7, "bounds arithmetic", 60.0, criterion_bounds},
      {8, "exact extremal values for n in [3,9]", 600.0, criterion_exact_values},
      {9, "determinism of traces and search results", 300.0, criterion_determinism},
  };
  bool all_ok = true;
  for (auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
      ok = false;
      if (detail.empty()) detail = "over budget";
    }
    std::printf("[%s] criterion %d: %s (%.1fs, budget %.0fs) %s\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.name.c_str(), elapsed, criterion.budget_seconds,
                detail.c_str());
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
