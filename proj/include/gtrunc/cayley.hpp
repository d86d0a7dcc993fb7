#pragma once

#include <vector>

#include "gtrunc/graph.hpp"
#include "gtrunc/permgroup.hpp"

namespace gtrunc {

// Cayley graph on an explicit element list: vertex i (element g_i) is adjacent
// to the element s*g_i for every s in the connection set. The connection set
// must be inverse-closed, exclude the identity and lie inside the listed
// elements (checked).
Graph cayley_graph(const std::vector<Perm>& elements, const std::vector<Perm>& connection);

// Cayley graph of a group handed over as its regular representation (e.g. a
// todd_coxeter result): vertices are the points, the connection elements are
// given by their action on the points, and adjacency again follows
// h = s*g (left multiplication), recovered from the right coset action via
// BFS words.
Graph cayley_graph(const PermGroup& regular_rep, const std::vector<Perm>& connection);

}  // namespace gtrunc
