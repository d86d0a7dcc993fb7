#include "gtrunc/cayley.hpp"

#include <map>
#include <stdexcept>

namespace gtrunc {

namespace {

void check_connection(const std::vector<Perm>& connection) {
  if (connection.empty()) throw std::invalid_argument("empty connection set");
  for (const auto& s : connection) {
    if (s.is_identity()) throw std::invalid_argument("connection set contains the identity");
    bool has_inverse = false;
    Perm si = inverse(s);
    for (const auto& t : connection)
      if (t == si) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw std::invalid_argument("connection set not closed under inverses");
  }
}

}  // namespace

Graph cayley_graph(const std::vector<Perm>& elements, const std::vector<Perm>& connection) {
  check_connection(connection);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i].img, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate element in list");
  }
  Graph g(static_cast<int>(elements.size()));
  for (size_t i = 0; i < elements.size(); ++i)
    for (const auto& s : connection) {
      Perm h = compose(s, elements[i]);  // h = s*g, s applied first
      auto it = index.find(h.img);
      if (it == index.end())
        throw std::invalid_argument("element list not closed under the connection set");
      g.add_edge(static_cast<int>(i), it->second);
    }
  return g;
}

Graph cayley_graph(const PermGroup& regular_rep, const std::vector<Perm>& connection) {
  check_connection(connection);
  const int n = regular_rep.degree();
  if (regular_rep.order() != static_cast<unsigned long long>(n))
    throw std::invalid_argument("group is not given as a regular representation");
  for (const auto& s : connection)
    if (!regular_rep.contains(s))
      throw std::invalid_argument("connection element outside the group");

  // BFS word for every point: point x corresponds to the element carrying the
  // base point 0 to x, written over the group generators.
  const auto& gens = regular_rep.generators();
  std::vector<int> parent(n, -1), letter(n, -1);
  std::vector<int> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = gens[gi].of(x);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        letter[y] = static_cast<int>(gi);
        order.push_back(y);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("regular representation is not transitive");

  std::vector<std::vector<int>> word(n);
  for (int x : order) {
    if (parent[x] >= 0) {
      word[x] = word[parent[x]];
      word[x].push_back(letter[x]);
    }
  }

  // coset(s * g_x): start from coset(s) and retrace the word of x
  Graph g(n);
  for (const auto& s : connection) {
    int start = s.of(0);
    for (int x = 0; x < n; ++x) {
      int c = start;
      for (int l : word[x]) c = gens[l].of(c);
      g.add_edge(x, c);
    }
  }
  return g;
}

}  // namespace gtrunc
