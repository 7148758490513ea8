#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "crowns/errors.hpp"
#include "crowns/graph.hpp"

namespace crowns {

// Text graph format:
//   n m
//   a b c        (m lines, 0-based vertex indices)
// Lines starting with '#' are comments; blank lines are ignored; the
// trailing newline is optional.

inline LinearThreeGraph read_text_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long m = -1;
  std::vector<Edge> triples;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      if (!(ss >> n >> m)) throw ParseError(line_no, "expected header 'n m'");
      std::string rest;
      if (ss >> rest) throw ParseError(line_no, "unexpected token '" + rest + "' after header");
      if (n < 0 || m < 0) throw ParseError(line_no, "header values must be non-negative");
      continue;
    }
    int a, b, c;
    if (!(ss >> a >> b >> c)) throw ParseError(line_no, "expected three vertex indices");
    std::string rest;
    if (ss >> rest) throw ParseError(line_no, "unexpected token '" + rest + "' on edge line");
    if (static_cast<long>(triples.size()) >= m)
      throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
    triples.push_back(Edge{a, b, c});
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n m'");
  if (static_cast<long>(triples.size()) != m)
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges but found " +
                                  std::to_string(triples.size()));
  return LinearThreeGraph::build(n, triples);
}

inline LinearThreeGraph parse_text_graph(const std::string& text) {
  std::istringstream in(text);
  return read_text_graph(in);
}

inline void write_text_graph(std::ostream& out, const LinearThreeGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

inline std::string format_text_graph(const LinearThreeGraph& g) {
  std::ostringstream out;
  write_text_graph(out, g);
  return out.str();
}

}  // namespace crowns
