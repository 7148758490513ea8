// Builds the 9-vertex crown, shows the certificate machinery, and prints
// the bound table rows around the first tight size.
#include <iostream>

#include "crowns/crown.hpp"
#include "crowns/graph.hpp"
#include "crowns/search.hpp"

int main() {
  const auto crown = crowns::LinearThreeGraph::build(
      9, {{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}});
  const auto cert = crowns::find_crown_exhaustive(crown);
  std::cout << "crown central edge: " << crowns::edge_str(cert->central) << "\n\n";
  std::cout << "n  lower  3(n-3)/2\n";
  for (int n = 60; n <= 67; ++n) {
    std::cout << n << "  " << crowns::lower_bound_value(n).value << "     "
              << crowns::corollary_bound(n) << "\n";
  }
  return 0;
}
