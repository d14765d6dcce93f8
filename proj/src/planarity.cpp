#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "pathex/graph.hpp"

namespace pathex {

bool is_planar(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  const int m = g.size();
  if (m > 3 * n - 6) return false;

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (auto [i, j] : g.edges()) boost::add_edge(i - 1, j - 1, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace pathex
