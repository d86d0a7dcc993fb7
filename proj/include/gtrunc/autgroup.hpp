#pragma once

#include <optional>
#include <string>

#include "gtrunc/graph.hpp"
#include "gtrunc/perm.hpp"
#include "gtrunc/permgroup.hpp"

namespace gtrunc {

struct CanonicalForm {
  std::string g6;    // canonical graph6 string
  Perm relabeling;   // input vertex -> canonical vertex; encode(apply_perm(g, relabeling)) == g6
};

struct GraphSymmetry {
  CanonicalForm canonical;
  PermGroup aut;
};

// One individualization-refinement search yields both the canonical form and
// generators of the full automorphism group.
GraphSymmetry analyze_graph(const Graph& g);

PermGroup automorphism_group(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

// Mapping a -> b verified edge-by-edge, or nullopt.
std::optional<Perm> are_isomorphic(const Graph& a, const Graph& b);

bool is_vertex_transitive(const Graph& g);

}  // namespace gtrunc
