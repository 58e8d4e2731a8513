#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pyramid/instance.hpp"

namespace helpers {

using namespace pyramid;

inline Graph graph(int n, std::initializer_list<std::pair<int, int>> es) {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  std::vector<Edge> e;
  for (auto [a, b] : es) e.push_back(make_edge(a, b));
  return Graph(vs, e);
}

inline std::map<Vertex, std::int64_t> ones(const Graph& g) {
  std::map<Vertex, std::int64_t> b;
  for (Vertex v : g.vertices()) b[v] = 1;
  return b;
}

// C4 with r, a, b, c = 0, 1, 2, 3 and unit demands.
inline Instance c4(std::vector<Rational> costs = {}) {
  Graph g = cycle_graph(4);
  if (costs.empty()) costs.assign(4, 1);
  return make_instance(g, 0, ones(g), costs, {{0, "r"}, {1, "a"}, {2, "b"}, {3, "c"}});
}

inline Routing routing(std::initializer_list<std::vector<Vertex>> paths) { return Routing{paths}; }

inline std::int64_t at(const Instance& inst, const EdgeVector& v, Vertex x, Vertex y) {
  return v[inst.graph.index_of(make_edge(x, y))];
}

}  // namespace helpers
