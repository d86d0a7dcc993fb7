#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gtrunc/graph.hpp"
#include "gtrunc/permgroup.hpp"
#include "gtrunc/truncation.hpp"

namespace gtrunc {

// A union O_v of orbits of the vertex stabilizer G_v acting on 2-subsets of
// the neighborhood of v.
struct OrbitSelection {
  int v = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted, each (a,b) with a < b
  std::vector<int> orbit_ids;              // indices into orbits_on_pairs(G_v, N(v))
};

// Builds the truncation T(base, G; O_v): phi is the ascending-order bijection
// on N(v), the coset representative g_u is the deterministic BSGS transversal
// element carrying u to v, and rho(u,w) = phi(w^{g_u}).
Truncation orbit_truncation(const Graph& base, const PermGroup& G, const OrbitSelection& sel);

// All unions of G_v-orbits on 2-subsets of N(v) whose orbital graph is
// isomorphic to `target`.
std::vector<OrbitSelection> orbit_unions_matching(const Graph& base, const PermGroup& G, int v,
                                                  const Graph& target);

struct CandidateGroup {
  std::string name;
  PermGroup group;
};

// 2-transitive groups on n points of order n(n-1) or 2n(n-1), drawn from the
// built-in families AGL1(n), PSL2(n-1), PGL2(n-1) plus user-supplied extras.
std::vector<CandidateGroup> candidate_groups(int n, const std::vector<CandidateGroup>& extra = {});

struct TableRow {
  int n = 0;
  std::string group;
  unsigned long long group_order = 0;  // = order of the lifted subgroup
  int order = 0;                       // n(n-1)
  int girth = 0;
  unsigned long long aut_order = 0;
  bool aut_equals_lift = false;
  std::string canonical;
};

// Truncations of K_n by C_{n-1} from the orbit construction, for n in
// [n_lo, n_hi], deduplicated by canonical form. When several groups or
// selections produce the same graph the row keeps the producer with the
// largest lifted subgroup. n = 16 is skipped unless include_16 is set.
std::vector<TableRow> enumerate_table(int n_lo, int n_hi, bool include_16 = false,
                                      const std::vector<CandidateGroup>& extra = {}, int jobs = 1);

// h lifts to the orbit truncation iff sel.pairs is a union of <G,h>_v-orbits.
bool lift_criterion(const Graph& base, const PermGroup& G, const OrbitSelection& sel,
                    const Perm& h);

}  // namespace gtrunc
