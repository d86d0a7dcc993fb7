#pragma once

// Independent reference implementations used only as test oracles. These
// deliberately avoid the code paths of the library routines they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gtrunc/graph.hpp"
#include "gtrunc/perm.hpp"

namespace oracle {

// graph6 built the slow way: bit characters into a string, then packed.
inline std::string encode_graph6_ref(const gtrunc::Graph& g) {
  const int n = g.order();
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.has_edge(i, j) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    std::string header;
    int v = n;
    for (int k = 0; k < 3; ++k) {
      header.insert(header.begin(), static_cast<char>((v & 63) + 63));
      v >>= 6;
    }
    out += static_cast<char>(126);
    out += header;
  }
  for (size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (size_t k = 0; k < 6; ++k) v = v * 2 + (bits[i + k] == '1');
    out += static_cast<char>(v + 63);
  }
  return out;
}

// Girth by exhaustive DFS over simple paths anchored at their smallest vertex.
inline std::optional<int> girth_ref(const gtrunc::Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<bool> used(n, false);
  std::vector<int> path;
  auto rec = [&](auto&& self, int start, int cur) -> void {
    if (static_cast<int>(path.size()) >= best) return;
    g.for_each_neighbor(cur, [&](int w) {
      if (w == start && path.size() >= 3) {
        best = std::min(best, static_cast<int>(path.size()));
        return;
      }
      if (w <= start || used[w]) return;
      used[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      used[w] = false;
    });
  };
  for (int v = 0; v < n; ++v) {
    path = {v};
    used.assign(n, false);
    used[v] = true;
    rec(rec, v, v);
  }
  if (best > n) return std::nullopt;
  return best;
}

inline std::vector<gtrunc::Perm> brute_automorphisms(const gtrunc::Graph& g) {
  const int n = g.order();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<gtrunc::Perm> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      g.for_each_neighbor(u, [&](int w) {
        if (ok && !g.has_edge(img[u], img[w])) ok = false;
      });
    if (ok) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline unsigned long long brute_automorphism_count(const gtrunc::Graph& g) {
  return brute_automorphisms(g).size();
}

// Closure of a generating set under composition, by plain BFS.
inline unsigned long long brute_closure_order(const std::vector<gtrunc::Perm>& gens) {
  if (gens.empty()) return 1;
  std::set<std::vector<int>> seen;
  std::vector<gtrunc::Perm> queue{gtrunc::Perm::identity(gens.front().degree())};
  seen.insert(queue.front().img);
  for (size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : gens) {
      gtrunc::Perm next = gtrunc::compose(queue[i], s);
      if (seen.insert(next.img).second) queue.push_back(next);
    }
  return seen.size();
}

}  // namespace oracle
