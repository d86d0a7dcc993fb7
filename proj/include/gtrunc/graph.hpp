#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gtrunc/perm.hpp"

namespace gtrunc {

// Undirected simple graph on vertices 0..n-1 with adjacency kept as bit rows,
// so neighborhood intersections are word-parallel.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int w);
  void remove_edge(int u, int w);
  bool has_edge(int u, int w) const;

  int degree(int u) const;
  int edge_count() const;

  const std::uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }

  std::vector<int> neighbors(int u) const;                // ascending
  std::vector<std::pair<int, int>> edges() const;         // u < w, lexicographic

  template <class F>
  void for_each_neighbor(int u, F&& f) const {
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int u) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

// Length of a shortest cycle through the edge {u,w}; nullopt when {u,w} is a
// bridge. Throws std::invalid_argument when {u,w} is not an edge.
std::optional<int> min_cycle_through_edge(const Graph& g, int u, int w);

struct BasicProps {
  bool connected = false;
  std::optional<int> regular_degree;
};
BasicProps basic_props(const Graph& g);

// Relabeled copy: vertex u of g becomes p.of(u).
Graph apply_perm(const Graph& g, const Perm& p);

bool is_automorphism(const Graph& g, const Perm& p);

}  // namespace gtrunc
