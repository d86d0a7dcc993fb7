#include "gtrunc/graph.hpp"

#include <bit>
#include <deque>
#include <stdexcept>

namespace gtrunc {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0 || n > 65535) throw std::invalid_argument("vertex count out of range");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) throw std::invalid_argument("vertex index out of range");
}

void Graph::add_edge(int u, int w) {
  check_vertex(u);
  check_vertex(w);
  if (u == w) throw std::invalid_argument("loops are not allowed");
  bits_[static_cast<size_t>(u) * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
  bits_[static_cast<size_t>(w) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(int u, int w) {
  check_vertex(u);
  check_vertex(w);
  bits_[static_cast<size_t>(u) * words_ + w / 64] &= ~(std::uint64_t{1} << (w % 64));
  bits_[static_cast<size_t>(w) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

bool Graph::has_edge(int u, int w) const {
  check_vertex(u);
  check_vertex(w);
  return (bits_[static_cast<size_t>(u) * words_ + w / 64] >> (w % 64)) & 1;
}

int Graph::degree(int u) const {
  check_vertex(u);
  int d = 0;
  const std::uint64_t* r = row(u);
  for (int i = 0; i < words_; ++i) d += std::popcount(r[i]);
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (int u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for_each_neighbor(u, [&](int w) { out.push_back(w); });
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](int w) {
      if (u < w) out.emplace_back(u, w);
    });
  return out;
}

namespace {

// Shortest cycle found by a BFS rooted at v; an upper bound on girth that is
// tight for some vertex of every shortest cycle.
int bfs_cycle_bound(const Graph& g, int v, int best) {
  const int n = g.order();
  std::vector<int> dist(n, -1), parent(n, -1);
  std::deque<int> queue;
  dist[v] = 0;
  queue.push_back(v);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (2 * dist[u] >= best) break;
    g.for_each_neighbor(u, [&](int w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u] && dist[w] >= dist[u]) {
        int len = dist[u] + dist[w] + 1;
        if (len < best) best = len;
      }
    });
  }
  return best;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  int best = g.order() + 1;
  for (int v = 0; v < g.order(); ++v) best = bfs_cycle_bound(g, v, best);
  if (best > g.order()) return std::nullopt;
  return best;
}

std::optional<int> min_cycle_through_edge(const Graph& g, int u, int w) {
  if (!g.has_edge(u, w)) throw std::invalid_argument("not an edge");
  // Shortest u-w path avoiding the edge itself, plus the edge.
  const int n = g.order();
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  dist[u] = 0;
  queue.push_back(u);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == w) return dist[w] + 1;
    bool done = false;
    g.for_each_neighbor(x, [&](int y) {
      if (done) return;
      if (x == u && y == w) return;  // skip the edge
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        if (y == w) done = true;
        queue.push_back(y);
      }
    });
    if (done) return dist[w] + 1;
  }
  return std::nullopt;
}

BasicProps basic_props(const Graph& g) {
  BasicProps props;
  const int n = g.order();
  if (n == 0) {
    props.connected = true;
    return props;
  }
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    g.for_each_neighbor(u, [&](int w) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    });
  }
  props.connected = (reached == n);
  int d = g.degree(0);
  bool regular = true;
  for (int u = 1; u < n && regular; ++u) regular = (g.degree(u) == d);
  if (regular) props.regular_degree = d;
  return props;
}

Graph apply_perm(const Graph& g, const Perm& p) {
  if (p.degree() != g.order()) throw std::invalid_argument("permutation degree mismatch");
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    g.for_each_neighbor(u, [&](int w) {
      if (u < w) h.add_edge(p.of(u), p.of(w));
    });
  return h;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    bool ok = true;
    g.for_each_neighbor(u, [&](int w) {
      if (!g.has_edge(p.of(u), p.of(w))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace gtrunc
