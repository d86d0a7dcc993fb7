#include "gtrunc/families.hpp"

#include <stdexcept>

namespace gtrunc {

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) g.add_edge(u, w);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle: k >= 3 required");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: parts must be nonempty");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int w = 0; w < b; ++w) g.add_edge(u, a + w);
  return g;
}

Graph prism(int n) {
  if (n < 3) throw std::invalid_argument("prism: n >= 3 required");
  Graph g(2 * n);
  for (int j = 0; j < n; ++j) {
    g.add_edge(j, (j + 1) % n);
    g.add_edge(n + j, n + (j + 1) % n);
    g.add_edge(j, n + j);
  }
  return g;
}

Graph moebius_ladder(int n) {
  if (n < 3) throw std::invalid_argument("moebius: n >= 3 required");
  return cayley_cyclic(2 * n, {1, n});
}

Graph generalized_prism(int n) {
  if (n < 2) throw std::invalid_argument("gen_prism: n >= 2 required");
  const int m = 2 * n;
  Graph g(2 * m);
  auto id = [m](int i, int j) { return i * m + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j) {
      g.add_edge(id(i, j), id(i, (j + 1) % m));
      if (j % 2 == 0) g.add_edge(id(i, j), id(1 - i, (j + 1) % m));
    }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph dodecahedron() {
  // generalized Petersen graph GP(10, 2)
  Graph g(20);
  for (int i = 0; i < 10; ++i) {
    g.add_edge(i, (i + 1) % 10);
    g.add_edge(10 + i, 10 + (i + 2) % 10);
    g.add_edge(i, 10 + i);
  }
  return g;
}

Graph cayley_cyclic(int m, const std::vector<int>& shifts) {
  if (m < 3) throw std::invalid_argument("cayley_cyclic: m >= 3 required");
  if (shifts.empty()) throw std::invalid_argument("cayley_cyclic: empty connection set");
  Graph g(m);
  for (int s : shifts) {
    int r = ((s % m) + m) % m;
    if (r == 0) throw std::invalid_argument("cayley_cyclic: shift divisible by m");
    for (int j = 0; j < m; ++j) g.add_edge(j, (j + r) % m);
  }
  return g;
}

Graph cayley_dihedral(int m, const std::vector<int>& exponents) {
  if (m < 3) throw std::invalid_argument("cayley_dihedral: m >= 3 required");
  if (exponents.empty()) throw std::invalid_argument("cayley_dihedral: empty connection set");
  Graph g(2 * m);
  for (int e : exponents) {
    int r = ((e % m) + m) % m;
    // s = t r^r is an involution; s * r^j = t r^(r+j), s * t r^j = r^(j-r)
    for (int j = 0; j < m; ++j) g.add_edge(j, m + (r + j) % m);
  }
  return g;
}

Graph make_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto want = [&](size_t k) {
    if (p.size() != k)
      throw std::invalid_argument("family '" + spec.name + "' expects " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (spec.name == "complete") {
    want(1);
    return complete_graph(p[0]);
  }
  if (spec.name == "cycle") {
    want(1);
    return cycle_graph(p[0]);
  }
  if (spec.name == "complete_bipartite") {
    want(2);
    return complete_bipartite(p[0], p[1]);
  }
  if (spec.name == "prism") {
    want(1);
    return prism(p[0]);
  }
  if (spec.name == "moebius") {
    want(1);
    return moebius_ladder(p[0]);
  }
  if (spec.name == "gen_prism") {
    want(1);
    return generalized_prism(p[0]);
  }
  if (spec.name == "petersen") {
    want(0);
    return petersen();
  }
  if (spec.name == "dodecahedron") {
    want(0);
    return dodecahedron();
  }
  if (spec.name == "cayley_cyclic") {
    if (p.size() < 2) throw std::invalid_argument("cayley_cyclic expects m,s1[,s2,...]");
    return cayley_cyclic(p[0], std::vector<int>(p.begin() + 1, p.end()));
  }
  if (spec.name == "cayley_dihedral") {
    if (p.size() < 2) throw std::invalid_argument("cayley_dihedral expects m,e1[,e2,...]");
    return cayley_dihedral(p[0], std::vector<int>(p.begin() + 1, p.end()));
  }
  throw std::invalid_argument("unknown family '" + spec.name + "'");
}

}  // namespace gtrunc
