#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "linehyp/hypergraph.hpp"

namespace linehyp {

bool planarity_check(const Graph& g) {
  // Any simple graph with more than 3|V| - 6 edges is non-planar; skip the embedding.
  const auto v = static_cast<long long>(g.vertices.size());
  if (v >= 3 && static_cast<long long>(g.edges.size()) > 3 * v - 6) return false;

  std::map<int, int> index;
  for (int label : g.vertices) index.emplace(label, static_cast<int>(index.size()));
  for (const auto& [a, b] : g.edges) {
    index.emplace(a, static_cast<int>(index.size()));
    index.emplace(b, static_cast<int>(index.size()));
  }
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(index.size());
  for (const auto& [a, b] : g.edges) {
    if (a == b) continue;
    boost::add_edge(index.at(a), index.at(b), bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace linehyp
