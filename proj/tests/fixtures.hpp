#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gtrunc/families.hpp"
#include "gtrunc/graph.hpp"

namespace fixtures {

inline gtrunc::Graph path_graph(int n) {
  gtrunc::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline gtrunc::Graph star(int leaves) {
  gtrunc::Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline gtrunc::Graph disjoint_union(const gtrunc::Graph& a, const gtrunc::Graph& b) {
  gtrunc::Graph g(a.order() + b.order());
  for (auto [u, w] : a.edges()) g.add_edge(u, w);
  for (auto [u, w] : b.edges()) g.add_edge(a.order() + u, a.order() + w);
  return g;
}

inline gtrunc::Graph cube() { return gtrunc::prism(4); }

// Heawood graph via LCF [5,-5]^7: a 14-cycle plus chords {i, i+5} for even i.
inline gtrunc::Graph heawood() {
  gtrunc::Graph g(14);
  for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

// Small corpus of named graphs for oracle comparisons.
inline std::vector<std::pair<std::string, gtrunc::Graph>> small_corpus() {
  using namespace gtrunc;
  std::vector<std::pair<std::string, Graph>> out;
  out.emplace_back("K2", complete_graph(2));
  out.emplace_back("P3", path_graph(3));
  out.emplace_back("P5", path_graph(5));
  out.emplace_back("K4", complete_graph(4));
  out.emplace_back("C4", cycle_graph(4));
  out.emplace_back("C5", cycle_graph(5));
  out.emplace_back("C6", cycle_graph(6));
  out.emplace_back("K5", complete_graph(5));
  out.emplace_back("K33", complete_bipartite(3, 3));
  out.emplace_back("K13", star(3));
  out.emplace_back("Pr3", prism(3));
  out.emplace_back("cube", cube());
  out.emplace_back("Ml4", moebius_ladder(4));
  out.emplace_back("2xC3", disjoint_union(cycle_graph(3), cycle_graph(3)));
  return out;
}

}  // namespace fixtures
