#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtrunc/graph.hpp"
#include "gtrunc/perm.hpp"

namespace gtrunc {

// Finitely generated permutation group with a base and strong generating set.
// Construction is deterministic: base points are taken from the hint first,
// then in increasing point order, and transversals come from BFS over the
// generators in listed order, so coset representatives are reproducible.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(int degree);
  static PermGroup from_generators(std::vector<Perm> gens, int degree,
                                   std::vector<int> base_hint = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::vector<int> base() const;

  unsigned long long order() const;
  bool contains(const Perm& p) const;

  std::vector<int> orbit(int v) const;
  std::vector<std::vector<int>> orbits() const;

  // Generators of the stabilizer G_v. The returned group's base starts past v.
  PermGroup stabilizer(int v) const;

  // Transversal element t with base()[0]^t = u; u must lie in the first
  // fundamental orbit. Only meaningful when constructed with a base hint.
  const Perm& rep_from_base(int u) const;

  template <class F>
  void for_each_element(F&& f) const {
    Perm id = Perm::identity(degree_);
    enumerate_rec(0, id, f);
  }

 private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens;        // strong generators introduced at this level
    std::vector<int> orbit_list;   // BFS order, orbit_list[0] == base_point
    std::vector<int> orbit_pos;    // point -> index in orbit_list, or -1
    std::vector<Perm> transversal; // transversal[i]: base_point ^ t = orbit_list[i]
  };

  void add_level(int forced_point, const Perm* witness);
  void rebuild_orbit(int level);
  std::vector<const Perm*> gens_at_or_below(int level) const;
  // Strips g through levels from 'from'; returns (level, residue).
  std::pair<int, Perm> strip(Perm g, int from) const;
  void build(std::vector<int> base_hint);

  template <class F>
  void enumerate_rec(size_t level, const Perm& suffix, F&& f) const {
    if (level == levels_.size()) {
      f(suffix);
      return;
    }
    // element = (deeper factors) applied first, then suffix; recursion keeps
    // images of earlier base points fixed once chosen
    for (size_t i = 0; i < levels_[level].transversal.size(); ++i)
      enumerate_rec(level + 1, compose(levels_[level].transversal[i], suffix), f);
  }

  friend PermGroup partition_stabilizer_impl(const PermGroup&, const std::vector<int>&, bool);

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Orbits of the induced action on unordered 2-subsets of `domain`.
// Each orbit is a sorted vector of pairs (a,b), a < b; orbits are ordered by
// their smallest pair. Throws if `domain` is not invariant under the group.
std::vector<std::vector<std::pair<int, int>>> orbits_on_pairs(const PermGroup& g,
                                                              const std::vector<int>& domain);

struct Transitivity {
  bool transitive = false;
  bool two_transitive = false;
  std::optional<bool> arc_transitive_on_graph;
};

// When `graph` is given every generator must be one of its automorphisms
// (otherwise std::invalid_argument) and arc transitivity is reported.
Transitivity transitivity(const PermGroup& g, const Graph* graph = nullptr);

// Subgroup permuting the classes of the partition given by block_of[].
PermGroup partition_stabilizer(const PermGroup& g, const std::vector<int>& block_of);
// Subgroup fixing every class setwise.
PermGroup classwise_stabilizer(const PermGroup& g, const std::vector<int>& block_of);

}  // namespace gtrunc
