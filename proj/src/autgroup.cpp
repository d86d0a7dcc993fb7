#include "gtrunc/autgroup.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "gtrunc/graph6.hpp"

namespace gtrunc {

namespace {

using Cells = std::vector<std::vector<int>>;

struct Refiner {
  const Graph& g;
  int n;
  int words;
  std::vector<std::uint64_t> mask;  // scratch splitter mask

  explicit Refiner(const Graph& graph)
      : g(graph), n(graph.order()), words(graph.words()), mask(graph.words()) {}

  int count_in_mask(int u) const {
    const std::uint64_t* r = g.row(u);
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(r[i] & mask[i]);
    return c;
  }

  // Equitable refinement by neighbor counts against splitter cells. Splits
  // replace a cell in place, subcells ordered by ascending count, so the
  // partition order is deterministic.
  void refine(Cells& cells, std::vector<std::vector<int>> splitters) {
    while (!splitters.empty()) {
      std::vector<int> w = std::move(splitters.back());
      splitters.pop_back();
      std::fill(mask.begin(), mask.end(), 0);
      for (int x : w) mask[x / 64] |= std::uint64_t{1} << (x % 64);

      for (size_t c = 0; c < cells.size();) {
        if (cells[c].size() == 1) {
          ++c;
          continue;
        }
        std::map<int, std::vector<int>> by_count;
        for (int x : cells[c]) by_count[count_in_mask(x)].push_back(x);
        if (by_count.size() == 1) {
          ++c;
          continue;
        }
        Cells sub;
        for (auto& [cnt, pts] : by_count) sub.push_back(std::move(pts));
        cells.erase(cells.begin() + c);
        cells.insert(cells.begin() + c, sub.begin(), sub.end());
        for (auto& s : sub) splitters.push_back(s);
        c += sub.size();
      }
    }
  }

  Cells initial_partition() {
    // invariant: degree, then sorted multiset of neighbor degrees
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) deg[u] = g.degree(u);
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int u = 0; u < n; ++u) {
      std::vector<int> key{deg[u]};
      std::vector<int> nd;
      g.for_each_neighbor(u, [&](int w) { nd.push_back(deg[w]); });
      std::sort(nd.begin(), nd.end());
      key.insert(key.end(), nd.begin(), nd.end());
      groups[key].push_back(u);
    }
    Cells cells;
    for (auto& [key, pts] : groups) cells.push_back(std::move(pts));
    refine_all(cells);
    return cells;
  }

  void refine_all(Cells& cells) {
    std::vector<std::vector<int>> splitters(cells.begin(), cells.end());
    refine(cells, std::move(splitters));
  }
};

struct Leaf {
  Perm to_canonical;                // vertex -> position
  std::vector<std::uint64_t> cert;  // relabeled adjacency rows
};

struct Search {
  const Graph& g;
  Refiner refiner;
  int n;
  int words;
  std::vector<Perm> aut_gens;
  std::optional<Leaf> first, best;
  std::vector<int> prefix;  // individualized vertices root->current

  explicit Search(const Graph& graph) : g(graph), refiner(graph), n(graph.order()), words(graph.words()) {}

  std::vector<std::uint64_t> certificate(const Perm& to_pos) const {
    Perm from_pos = inverse(to_pos);
    std::vector<std::uint64_t> cert(static_cast<size_t>(n) * words, 0);
    for (int i = 0; i < n; ++i) {
      int u = from_pos.of(i);
      g.for_each_neighbor(u, [&](int w) {
        int j = to_pos.of(w);
        cert[static_cast<size_t>(i) * words + j / 64] |= std::uint64_t{1} << (j % 64);
      });
    }
    return cert;
  }

  void handle_leaf(const Cells& cells) {
    std::vector<int> img(n);
    for (size_t i = 0; i < cells.size(); ++i) img[cells[i][0]] = static_cast<int>(i);
    Perm to_pos(std::move(img));
    auto cert = certificate(to_pos);

    auto try_aut = [&](const Leaf& other) {
      // equal certificates: x -> other.to_canonical^-1(to_pos(x)) is an automorphism
      Perm a = compose(to_pos, inverse(other.to_canonical));
      if (!a.is_identity()) {
        for (const auto& have : aut_gens)
          if (have == a) return;
        aut_gens.push_back(std::move(a));
      }
    };

    if (!first) {
      first = Leaf{to_pos, cert};
      best = first;
      return;
    }
    if (cert == first->cert) {
      try_aut(*first);
      return;
    }
    if (best && cert == best->cert) {
      try_aut(*best);
      return;
    }
    if (cert < best->cert) best = Leaf{std::move(to_pos), std::move(cert)};
  }

  // orbit of already-tried siblings under discovered automorphisms fixing the
  // current prefix pointwise
  bool pruned(const std::vector<int>& tried, int v) const {
    if (tried.empty() || aut_gens.empty()) return false;
    std::vector<const Perm*> fixers;
    for (const auto& a : aut_gens) {
      bool fixes = true;
      for (int p : prefix)
        if (a.of(p) != p) {
          fixes = false;
          break;
        }
      if (fixes) fixers.push_back(&a);
    }
    if (fixers.empty()) return false;
    std::vector<bool> in_orbit(n, false);
    std::vector<int> stack;
    for (int t : tried) {
      in_orbit[t] = true;
      stack.push_back(t);
    }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == v) return true;
      for (const Perm* a : fixers) {
        for (int y : {a->of(x), inverse(*a).of(x)}) {
          if (!in_orbit[y]) {
            in_orbit[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    return in_orbit[v];
  }

  void explore(const Cells& cells) {
    // target: first smallest non-singleton cell
    int target = -1;
    size_t smallest = SIZE_MAX;
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && cells[i].size() < smallest) {
        smallest = cells[i].size();
        target = static_cast<int>(i);
      }
    if (target < 0) {
      handle_leaf(cells);
      return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
      if (pruned(tried, v)) continue;
      tried.push_back(v);
      Cells child = cells;
      std::vector<int> rest;
      for (int x : cells[target])
        if (x != v) rest.push_back(x);
      child[target] = {v};
      child.insert(child.begin() + target + 1, rest);
      prefix.push_back(v);
      refiner.refine(child, {{v}, rest});
      explore(child);
      prefix.pop_back();
    }
  }
};

}  // namespace

GraphSymmetry analyze_graph(const Graph& g) {
  Search search(g);
  if (g.order() == 0) {
    GraphSymmetry out;
    out.canonical = {encode_graph6(g), Perm::identity(0)};
    out.aut = PermGroup::trivial(0);
    return out;
  }
  Cells start = search.refiner.initial_partition();
  search.explore(start);

  GraphSymmetry out;
  out.canonical.relabeling = search.best->to_canonical;
  out.canonical.g6 = encode_graph6(apply_perm(g, out.canonical.relabeling));
  out.aut = PermGroup::from_generators(search.aut_gens, g.order());
  return out;
}

PermGroup automorphism_group(const Graph& g) { return analyze_graph(g).aut; }

CanonicalForm canonical_form(const Graph& g) { return analyze_graph(g).canonical; }

std::optional<Perm> are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto ca = canonical_form(a);
  auto cb = canonical_form(b);
  if (ca.g6 != cb.g6) return std::nullopt;
  Perm map = compose(ca.relabeling, inverse(cb.relabeling));
  for (int u = 0; u < a.order(); ++u) {
    bool ok = true;
    a.for_each_neighbor(u, [&](int w) {
      if (!b.has_edge(map.of(u), map.of(w))) ok = false;
    });
    if (!ok) return std::nullopt;
  }
  return map;
}

bool is_vertex_transitive(const Graph& g) {
  if (g.order() == 0) return true;
  PermGroup aut = automorphism_group(g);
  return static_cast<int>(aut.orbit(0).size()) == g.order();
}

}  // namespace gtrunc
