#include <catch2/catch_amalgamated.hpp>

#include "../support/builders.hpp"
#include "../support/oracles.hpp"
#include "crowns/graph_io.hpp"

using crowns::ParseError;

TEST_CASE("text format round trip") {
  const auto g = testsupport::crown_graph();
  const std::string text = crowns::format_text_graph(g);
  CHECK(text == "9 4\n0 1 2\n0 3 4\n1 5 6\n2 7 8\n");
  CHECK(crowns::parse_text_graph(text) == g);
}

TEST_CASE("random graphs round trip through the text format") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto g = testsupport::random_linear_graph(14, seed, 11);
    CHECK(crowns::parse_text_graph(crowns::format_text_graph(g)) == g);
  }
}

TEST_CASE("comments, blank lines and a missing trailing newline are accepted") {
  const auto g = crowns::parse_text_graph("# crown\n9 4\n\n0 1 2\n# middle\n0 3 4\n1 5 6\n2 7 8");
  CHECK(g == testsupport::crown_graph());
}

TEST_CASE("empty edge list parses") {
  const auto g = crowns::parse_text_graph("5 0\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    crowns::parse_text_graph("abc\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    crowns::parse_text_graph("3 1\n0 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    crowns::parse_text_graph("3 2\n0 1 2\n");
    FAIL("expected ParseError on edge undercount");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(crowns::parse_text_graph(""), ParseError);
  CHECK_THROWS_AS(crowns::parse_text_graph("3 1\n0 1 2\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(crowns::parse_text_graph("3 1\n0 1 2 9\n"), ParseError);
}

TEST_CASE("validation failures surface as graph errors") {
  CHECK_THROWS_AS(crowns::parse_text_graph("4 2\n0 1 2\n0 1 3\n"), crowns::GraphError);
}
