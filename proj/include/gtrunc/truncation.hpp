#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "gtrunc/graph.hpp"
#include "gtrunc/perm.hpp"
#include "gtrunc/permgroup.hpp"

namespace gtrunc {

// Vertex-neighborhood labeling: for each vertex u of a k-regular base graph,
// a bijection from the darts leaving u onto {1..k}. labels()[u][i] is the
// label of the dart towards the i-th neighbor of u in ascending vertex order.
class Labeling {
 public:
  Labeling() = default;
  Labeling(const Graph& base, std::vector<std::vector<int>> per_vertex_labels);

  int k() const { return k_; }
  const std::vector<std::vector<int>>& labels() const { return labels_; }

  int label_of_dart(const Graph& base, int u, int w) const;
  int neighbor_with_label(const Graph& base, int u, int label) const;

 private:
  int k_ = 0;
  std::vector<std::vector<int>> labels_;
};

// File format: header "base n k", then per vertex one line "u: w1->l1 w2->l2 ...".
Labeling parse_labeling(std::istream& in, const Graph& base);
void write_labeling(std::ostream& out, const Graph& base, const Labeling& rho);

Labeling random_labeling(const Graph& base, std::uint64_t seed);

// T(base, rho; inserted): vertex (u, v_i) of the truncation is flattened as
// u*k + (i-1). Red edges live inside the inserted copies, blue edges join
// copies along base edges and form a perfect matching.
struct Truncation {
  Graph result;
  Graph base;
  Graph inserted;
  Labeling rho;
  int k = 0;
  std::vector<std::pair<int, int>> blue_edges;

  int block_of(int x) const { return x / k; }
  std::vector<int> block_ids() const;
  bool is_blue(int a, int b) const;
};

Truncation truncate(const Graph& base, const Labeling& rho, const Graph& inserted);

// Minimum length of a cycle containing at least one blue edge.
std::optional<int> blue_girth(const Truncation& t);

// Unique candidate lift of a base automorphism; nullopt when the candidate
// fails to preserve red edges. Throws when g is not an automorphism of the
// base (a distinct condition from "does not lift").
std::optional<Perm> lift(const Truncation& t, const Perm& g);

// Projection of a truncation automorphism onto the base; nullopt for mixers.
// Throws when gt is not an automorphism of the truncation.
std::optional<Perm> project(const Truncation& t, const Perm& gt);

// Lifts of the subgroup of G consisting of all elements that lift. Fast path
// when every generator lifts; otherwise exhaustive element enumeration
// (requires |G| <= 10^6).
PermGroup lifted_subgroup(const Truncation& t, const PermGroup& G);

struct ProjectingInfo {
  PermGroup aut;         // full automorphism group of the truncation
  PermGroup projecting;  // subgroup permuting the natural partition
  bool has_mixers = false;
};
ProjectingInfo projecting_subgroup(const Truncation& t);

// Projections of the generators of a partition-preserving subgroup.
PermGroup project_group(const Truncation& t, const PermGroup& projecting);

}  // namespace gtrunc
