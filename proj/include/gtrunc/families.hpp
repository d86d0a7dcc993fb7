#pragma once

#include <string>
#include <vector>

#include "gtrunc/graph.hpp"

namespace gtrunc {

struct FamilySpec {
  std::string name;
  std::vector<int> params;
};

Graph make_family(const FamilySpec& spec);  // throws std::invalid_argument

Graph complete_graph(int n);
Graph cycle_graph(int k);  // k >= 3
Graph complete_bipartite(int a, int b);
Graph prism(int n);             // Pr(n), n >= 3: two n-cycles joined by a perfect matching
Graph moebius_ladder(int n);    // Ml(n), n >= 3: Cay(Z_2n; {+-1, n})
Graph generalized_prism(int n); // GPr(n), n >= 2: vertex (i,j) flattened as i*2n+j
Graph petersen();
Graph dodecahedron();

// Circulant Cay(Z_m; {+-s : s in shifts}).
Graph cayley_cyclic(int m, const std::vector<int>& shifts);
// Cay(D_m; {t r^e : e in exponents}) with D_m of order 2m; rotations r^j are
// vertices j, reflections t r^j are vertices m+j.
Graph cayley_dihedral(int m, const std::vector<int>& exponents);

}  // namespace gtrunc
