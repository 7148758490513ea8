// crown-turan: validation, crown search, inequality checking, exact
// extremal search and bound tables for crown-free linear 3-graphs.
//
// Exit codes: 0 success / property holds, 1 property fails (e.g. no crown
// found, or a crown-free graph violating a bound), 2 input or usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crowns/crown.hpp"
#include "crowns/errors.hpp"
#include "crowns/graph.hpp"
#include "crowns/graph_io.hpp"
#include "crowns/proof.hpp"
#include "crowns/search.hpp"
#include "crowns/serialize.hpp"
#include "crowns/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInputError = 2;

crowns::LinearThreeGraph load_graph(const std::string& path) {
  if (path == "-") return crowns::read_text_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw crowns::ParseError(1, "cannot open '" + path + "'");
  return crowns::read_text_graph(in);
}

std::string rational_str(const crowns::Rational& r) { return r.str(); }

int cmd_validate(const std::string& path, bool as_json) {
  const crowns::LinearThreeGraph g = load_graph(path);
  std::map<int, int> histogram;
  for (int v = 0; v < g.vertex_count(); ++v) ++histogram[g.degree(v)];
  const int s = g.high_degree_count();
  if (as_json) {
    crowns::Json hist = crowns::Json::object();
    for (const auto& [degree, count] : histogram) hist[std::to_string(degree)] = count;
    crowns::Json out{{"valid", true},
                     {"n", g.vertex_count()},
                     {"m", g.edge_count()},
                     {"s", s},
                     {"degree_histogram", std::move(hist)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "valid, n=" << g.vertex_count() << " m=" << g.edge_count() << " s=" << s << '\n';
    std::cout << "degrees:";
    for (const auto& [degree, count] : histogram) std::cout << ' ' << degree << ':' << count;
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_find_crown(const std::string& path, const std::string& method, bool as_json) {
  const crowns::LinearThreeGraph g = load_graph(path);
  std::optional<crowns::CrownCertificate> cert;
  if (method == "exhaustive") {
    cert = crowns::find_crown_exhaustive(g);
  } else {
    const crowns::AnalysisOutcome outcome = crowns::decompose(g, crowns::WeightScheme::Theorem1);
    if (outcome.kind == crowns::AnalysisOutcome::Kind::Crown) cert = outcome.certificate;
  }
  if (!cert) {
    if (as_json)
      std::cout << crowns::Json{{"found", false}, {"method", method}}.dump(2) << '\n';
    else if (method == "constructive")
      std::cout << "no crown found (edge count within bound; graph may still contain one)\n";
    else
      std::cout << "no crown found\n";
    return kExitPropertyFails;
  }
  if (as_json) {
    // bare certificate object; found/not-found is the exit code
    std::cout << crowns::to_json(*cert).dump(2) << '\n';
  } else {
    std::cout << "crown found: central " << crowns::edge_str(cert->central);
    for (const auto& p : cert->pendants)
      std::cout << " pendant " << crowns::edge_str(p.edge) << " at " << p.attach;
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_verify_theorem(const std::string& path, int theorem, bool as_json) {
  const crowns::LinearThreeGraph g = load_graph(path);
  const crowns::WeightScheme scheme =
      theorem == 1 ? crowns::WeightScheme::Theorem1 : crowns::WeightScheme::Theorem2;
  const int s = g.high_degree_count();
  if (scheme == crowns::WeightScheme::Theorem2 && s > 2)
    throw crowns::SchemeInapplicable("theorem 2 requires s <= 2; got s = " + std::to_string(s));
  const auto cert = crowns::find_crown_exhaustive(g);
  if (cert) {
    if (as_json) {
      crowns::Json out{{"crown_free", false},
                       {"theorem", theorem},
                       {"holds", true},
                       {"note", "graph contains a crown; the bound is vacuous"},
                       {"certificate", crowns::to_json(*cert)}};
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "not crown-free; certificate emitted: central "
                << crowns::edge_str(cert->central) << '\n';
    }
    return kExitOk;
  }
  const crowns::Rational bound = crowns::scheme_edge_bound(scheme, g.vertex_count(), s);
  const crowns::Rational margin = bound - crowns::Rational(g.edge_count());
  const bool holds = crowns::Rational(g.edge_count()) <= bound;
  if (as_json) {
    crowns::Json out{{"crown_free", true}, {"theorem", theorem},   {"n", g.vertex_count()},
                     {"m", g.edge_count()}, {"s", s},               {"bound", rational_str(bound)},
                     {"margin", rational_str(margin)}, {"holds", holds}};
    std::cout << out.dump(2) << '\n';
  } else if (holds) {
    std::cout << "holds: m <= " << (theorem == 1 ? "3(n-s)/2" : "10(n-s)/7") << " (m="
              << g.edge_count() << ", bound=" << bound << ", margin=" << margin << ")\n";
  } else {
    std::cout << "VIOLATED: crown-free graph with m=" << g.edge_count() << " > bound=" << bound
              << " — this would falsify the inequality\n";
  }
  return holds ? kExitOk : kExitPropertyFails;
}

int cmd_decompose(const std::string& path, int scheme_id, const std::string& trace_path,
                  bool as_json) {
  const crowns::LinearThreeGraph g = load_graph(path);
  const crowns::WeightScheme scheme =
      scheme_id == 1 ? crowns::WeightScheme::Theorem1 : crowns::WeightScheme::Theorem2;
  const crowns::AnalysisOutcome outcome = crowns::decompose(g, scheme);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw crowns::ParseError(1, "cannot write '" + trace_path + "'");
    out << crowns::trace_to_json(outcome).dump(2) << '\n';
  }
  if (as_json) {
    std::cout << crowns::trace_to_json(outcome).dump(2) << '\n';
  } else if (outcome.kind == crowns::AnalysisOutcome::Kind::Crown) {
    std::cout << "CROWN via branch " << outcome.branch << " after " << outcome.steps.size() - 1
              << " peel(s): central " << crowns::edge_str(outcome.certificate->central) << '\n';
  } else {
    std::cout << "BOUND_SATISFIED after " << outcome.steps.size() << " peel(s): m="
              << outcome.final_m << " <= bound=" << outcome.final_bound << " (n=" << outcome.final_n
              << ", s=" << outcome.final_s << ")\n";
  }
  return kExitOk;
}

int cmd_search(int n, double time_limit, std::uint64_t seed, bool single_thread, bool as_json,
               bool timing, const std::string& witness_out) {
  const crowns::SearchResult result =
      crowns::exact_max_edges(n, time_limit, seed, !single_thread);
  if (!witness_out.empty()) {
    std::ofstream out(witness_out);
    if (!out) throw crowns::ParseError(1, "cannot write '" + witness_out + "'");
    crowns::write_text_graph(out, result.witness);
  }
  if (as_json) {
    std::cout << crowns::to_json(result, timing).dump(2) << '\n';
  } else {
    std::cout << "n=" << result.n << " best=" << result.best_count
              << (result.exhaustive ? " (exhaustive)" : " (time limit reached)")
              << " nodes=" << result.nodes_explored;
    if (timing) std::cout << " time=" << result.wall_time_seconds << "s";
    std::cout << "\nwitness:\n" << crowns::format_text_graph(result.witness);
  }
  return kExitOk;
}

int cmd_bounds(int from, int to, bool as_json) {
  if (from < 3 || to < from) throw crowns::ParseError(1, "need 3 <= from <= to");
  if (as_json) {
    crowns::Json rows = crowns::Json::array();
    for (int n = from; n <= to; ++n) {
      const auto lb = crowns::lower_bound_value(n);
      rows.push_back(crowns::Json{{"n", n},
                                  {"lower", lb.value},
                                  {"epsilon", lb.epsilon},
                                  {"corollary", crowns::corollary_bound(n).str()},
                                  {"upper_2n", 2L * n},
                                  {"upper_5n3", (5L * n + 2) / 3 - 1}});
    }
    std::cout << rows.dump(2) << '\n';
  } else {
    std::cout << "n\tlower\tcorollary\t2n\tceil(5n/3)-1\n";
    for (int n = from; n <= to; ++n) {
      const auto lb = crowns::lower_bound_value(n);
      std::cout << n << '\t' << lb.value << '\t' << crowns::corollary_bound(n) << '\t' << 2L * n
                << '\t' << (5L * n + 2) / 3 - 1 << '\n';
    }
  }
  return kExitOk;
}

int cmd_gen(int n, std::uint64_t seed, int target_edges) {
  const crowns::LinearThreeGraph g = crowns::random_crown_free(n, seed, target_edges);
  crowns::write_text_graph(std::cout, g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crown-free linear 3-graph toolkit"};
  app.require_subcommand(1);

  std::string path, trace_path, witness_out;
  std::string method = "exhaustive";
  int theorem = 1, scheme_id = 1;
  int n = 0, from = 3, to = 30, target_edges = -1;
  double time_limit = 0.0;
  std::uint64_t seed = 0;
  bool as_json = false, single_thread = false, timing = false;

  auto* validate = app.add_subcommand("validate", "parse and validate a graph file");
  validate->add_option("file", path, "input graph ('-' for stdin)")->required();
  validate->add_flag("--json", as_json, "machine-readable output");

  auto* find_crown = app.add_subcommand("find-crown", "search for a crown");
  find_crown->add_option("file", path)->required();
  find_crown->add_option("--method", method, "exhaustive|constructive")
      ->check(CLI::IsMember({"exhaustive", "constructive"}));
  find_crown->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify-theorem", "check the edge-count bound");
  verify->add_option("file", path)->required();
  verify->add_option("--theorem", theorem, "1 or 2")->required()->check(CLI::Range(1, 2));
  verify->add_flag("--json", as_json);

  auto* decompose = app.add_subcommand("decompose", "run the constructive decomposition");
  decompose->add_option("file", path)->required();
  decompose->add_option("--scheme", scheme_id, "1 or 2")->required()->check(CLI::Range(1, 2));
  decompose->add_option("--trace", trace_path, "write the trace JSON to this file");
  decompose->add_flag("--json", as_json);

  auto* search = app.add_subcommand("search", "exact maximum edge count at a given n");
  search->add_option("--n", n, "vertex count")->required()->check(CLI::Range(3, 64));
  search->add_option("--time-limit", time_limit, "seconds (0 = unlimited)");
  search->add_option("--seed", seed, "warm-start seed");
  search->add_flag("--single-thread", single_thread, "deterministic reference mode");
  search->add_flag("--timing", timing, "include wall time in output");
  search->add_option("--witness-out", witness_out, "write the witness graph here");
  search->add_flag("--json", as_json);

  auto* bounds = app.add_subcommand("bounds", "bound table over a range of n");
  bounds->add_option("--from", from)->required();
  bounds->add_option("--to", to)->required();
  bounds->add_flag("--json", as_json);

  auto* gen = app.add_subcommand("gen", "generate a crown-free graph");
  gen->add_option("--n", n, "vertex count")->required()->check(CLI::Range(3, 1000));
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--target-edges", target_edges, "stop at this many edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, as_json);
    if (find_crown->parsed()) return cmd_find_crown(path, method, as_json);
    if (verify->parsed()) return cmd_verify_theorem(path, theorem, as_json);
    if (decompose->parsed()) return cmd_decompose(path, scheme_id, trace_path, as_json);
    if (search->parsed()) return cmd_search(n, time_limit, seed, single_thread, as_json, timing, witness_out);
    if (bounds->parsed()) return cmd_bounds(from, to, as_json);
    if (gen->parsed()) return cmd_gen(n, seed, target_edges);
  } catch (const crowns::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const crowns::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const crowns::SchemeInapplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
