#include "gtrunc/permgroup.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace gtrunc {

namespace {

unsigned long long mul_checked(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > ULLONG_MAX / a) throw std::overflow_error("group order exceeds 64 bits");
  return a * b;
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  return g;
}

PermGroup PermGroup::from_generators(std::vector<Perm> gens, int degree,
                                     std::vector<int> base_hint) {
  PermGroup g;
  g.degree_ = degree;
  for (auto& p : gens) {
    if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!p.is_identity()) g.gens_.push_back(std::move(p));
  }
  g.build(std::move(base_hint));
  return g;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

void PermGroup::add_level(int forced_point, const Perm* witness) {
  Level lv;
  if (forced_point >= 0) {
    lv.base_point = forced_point;
  } else {
    for (int x = 0; x < degree_; ++x)
      if (witness->img[x] != x) {
        lv.base_point = x;
        break;
      }
  }
  lv.orbit_pos.assign(degree_, -1);
  levels_.push_back(std::move(lv));
}

std::vector<const Perm*> PermGroup::gens_at_or_below(int level) const {
  std::vector<const Perm*> out;
  for (size_t j = level; j < levels_.size(); ++j)
    for (const auto& p : levels_[j].gens) out.push_back(&p);
  return out;
}

void PermGroup::rebuild_orbit(int level) {
  Level& lv = levels_[level];
  auto gens = gens_at_or_below(level);
  lv.orbit_list.clear();
  lv.orbit_pos.assign(degree_, -1);
  lv.transversal.clear();
  lv.orbit_list.push_back(lv.base_point);
  lv.orbit_pos[lv.base_point] = 0;
  lv.transversal.push_back(Perm::identity(degree_));
  for (size_t idx = 0; idx < lv.orbit_list.size(); ++idx) {
    int p = lv.orbit_list[idx];
    for (const Perm* s : gens) {
      int q = s->img[p];
      if (lv.orbit_pos[q] < 0) {
        lv.orbit_pos[q] = static_cast<int>(lv.orbit_list.size());
        lv.orbit_list.push_back(q);
        lv.transversal.push_back(compose(lv.transversal[idx], *s));
      }
    }
  }
}

std::pair<int, Perm> PermGroup::strip(Perm g, int from) const {
  for (size_t j = from; j < levels_.size(); ++j) {
    int p = g.img[levels_[j].base_point];
    int idx = levels_[j].orbit_pos[p];
    if (idx < 0) return {static_cast<int>(j), std::move(g)};
    g = compose(g, inverse(levels_[j].transversal[idx]));
  }
  return {static_cast<int>(levels_.size()), std::move(g)};
}

void PermGroup::build(std::vector<int> base_hint) {
  levels_.clear();
  std::vector<bool> hinted(degree_, false);
  for (int v : base_hint) {
    if (v < 0 || v >= degree_) throw std::invalid_argument("base hint point out of range");
    if (!hinted[v]) {
      hinted[v] = true;
      add_level(v, nullptr);
    }
  }
  if (gens_.empty()) {
    for (size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(static_cast<int>(i));
    return;
  }
  if (levels_.empty()) add_level(-1, &gens_.front());
  for (const auto& g : gens_) levels_[0].gens.push_back(g);

  // deterministic Schreier-Sims: rescan until every Schreier generator sifts.
  // The container is only mutated after a scan exits, so no references into
  // levels_ are held across an insertion.
  for (;;) {
    for (size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(static_cast<int>(i));
    int pending_level = -1;
    Perm pending;
    for (size_t i = 0; i < levels_.size() && pending_level < 0; ++i) {
      const Level& lv = levels_[i];
      auto gens = gens_at_or_below(static_cast<int>(i));
      for (size_t idx = 0; idx < lv.orbit_list.size() && pending_level < 0; ++idx) {
        int p = lv.orbit_list[idx];
        for (const Perm* s : gens) {
          int q = s->img[p];
          Perm schreier =
              compose(compose(lv.transversal[idx], *s), inverse(lv.transversal[lv.orbit_pos[q]]));
          auto [j, h] = strip(std::move(schreier), static_cast<int>(i) + 1);
          if (!h.is_identity()) {
            pending_level = j;
            pending = std::move(h);
            break;
          }
        }
      }
    }
    if (pending_level < 0) break;
    if (pending_level == static_cast<int>(levels_.size())) add_level(-1, &pending);
    levels_[pending_level].gens.push_back(std::move(pending));
  }
}

unsigned long long PermGroup::order() const {
  unsigned long long o = 1;
  for (const auto& lv : levels_) o = mul_checked(o, lv.orbit_list.size());
  return o;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [j, h] = strip(p, 0);
  (void)j;
  return h.is_identity();
}

std::vector<int> PermGroup::orbit(int v) const {
  if (v < 0 || v >= degree_) throw std::invalid_argument("point out of range");
  std::vector<int> out{v};
  std::vector<bool> seen(degree_, false);
  seen[v] = true;
  for (size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens_) {
      int q = g.img[out[i]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree_, false);
  for (int v = 0; v < degree_; ++v) {
    if (seen[v]) continue;
    auto orb = orbit(v);
    for (int x : orb) seen[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

PermGroup PermGroup::stabilizer(int v) const {
  if (v < 0 || v >= degree_) throw std::invalid_argument("point out of range");
  PermGroup rebased = from_generators(gens_, degree_, {v});
  std::vector<Perm> stab_gens;
  for (size_t i = 1; i < rebased.levels_.size(); ++i)
    for (const auto& p : rebased.levels_[i].gens) stab_gens.push_back(p);
  return from_generators(std::move(stab_gens), degree_);
}

const Perm& PermGroup::rep_from_base(int u) const {
  if (levels_.empty()) throw std::logic_error("group has no base");
  int idx = levels_[0].orbit_pos[u];
  if (idx < 0) throw std::invalid_argument("point not in the first fundamental orbit");
  return levels_[0].transversal[idx];
}

std::vector<std::vector<std::pair<int, int>>> orbits_on_pairs(const PermGroup& g,
                                                              const std::vector<int>& domain) {
  std::vector<bool> in_domain(g.degree(), false);
  for (int x : domain) {
    if (x < 0 || x >= g.degree()) throw std::invalid_argument("domain point out of range");
    in_domain[x] = true;
  }
  for (const auto& s : g.generators())
    for (int x : domain)
      if (!in_domain[s.of(x)]) throw std::invalid_argument("domain not invariant under group");

  std::vector<int> dom = domain;
  std::sort(dom.begin(), dom.end());
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < dom.size(); ++i)
    for (size_t j = i + 1; j < dom.size(); ++j) pairs.emplace_back(dom[i], dom[j]);
  std::map<std::pair<int, int>, int> index;
  for (size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);

  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<bool> seen(pairs.size(), false);
  for (size_t start = 0; start < pairs.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> stack{static_cast<int>(start)};
    std::vector<std::pair<int, int>> orb;
    seen[start] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      orb.push_back(pairs[cur]);
      for (const auto& s : g.generators()) {
        int a = s.of(pairs[cur].first), b = s.of(pairs[cur].second);
        if (a > b) std::swap(a, b);
        int nxt = index.at({a, b});
        if (!seen[nxt]) {
          seen[nxt] = true;
          stack.push_back(nxt);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

Transitivity transitivity(const PermGroup& g, const Graph* graph) {
  Transitivity t;
  const int n = g.degree();
  if (graph) {
    if (graph->order() != n) throw std::invalid_argument("graph order differs from group degree");
    for (const auto& s : g.generators())
      if (!is_automorphism(*graph, s))
        throw std::invalid_argument("generator is not an automorphism of the graph");
  }
  if (n == 0) {
    t.transitive = t.two_transitive = true;
    if (graph) t.arc_transitive_on_graph = true;
    return t;
  }
  t.transitive = (static_cast<int>(g.orbit(0).size()) == n);
  if (n < 2) {
    t.two_transitive = t.transitive;
  } else {
    t.two_transitive =
        t.transitive && (static_cast<int>(g.stabilizer(0).orbit(1).size()) == n - 1);
  }
  if (graph) {
    const int m = graph->edge_count();
    if (m == 0) {
      t.arc_transitive_on_graph = true;
    } else {
      auto first_edges = graph->edges();
      std::pair<int, int> start = first_edges.front();
      std::set<std::pair<int, int>> seen{start};
      std::deque<std::pair<int, int>> queue{start};
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (const auto& s : g.generators()) {
          std::pair<int, int> nxt{s.of(a), s.of(b)};
          if (seen.insert(nxt).second) queue.push_back(nxt);
        }
      }
      t.arc_transitive_on_graph = (static_cast<int>(seen.size()) == 2 * m);
    }
  }
  return t;
}

namespace {

struct PartitionSearch {
  const std::vector<int>& blk;
  bool classwise;
  int degree;
  unsigned long long goal_order;
  std::vector<int> blk_size;
  std::vector<int> blk_img, blk_pre;
  std::vector<Perm> found;
  PermGroup subgroup;
  bool full = false;

  PartitionSearch(const std::vector<int>& blocks, bool cw, int n, unsigned long long goal)
      : blk(blocks), classwise(cw), degree(n), goal_order(goal) {
    int nblocks = 0;
    for (int b : blk) nblocks = std::max(nblocks, b + 1);
    blk_size.assign(nblocks, 0);
    for (int b : blk) ++blk_size[b];
    blk_img.assign(nblocks, -1);
    blk_pre.assign(nblocks, -1);
    subgroup = PermGroup::trivial(n);
  }

  bool leaf_ok(const Perm& g) const {
    if (classwise) {
      for (int x = 0; x < degree; ++x)
        if (blk[g.img[x]] != blk[x]) return false;
      return true;
    }
    std::vector<int> img(blk_size.size(), -1), pre(blk_size.size(), -1);
    for (int x = 0; x < degree; ++x) {
      int b = blk[x], b2 = blk[g.img[x]];
      if (img[b] == -1) {
        if (pre[b2] != -1) return false;
        img[b] = b2;
        pre[b2] = b;
      } else if (img[b] != b2) {
        return false;
      }
    }
    return true;
  }

  void leaf(const Perm& g) {
    if (g.is_identity() || !leaf_ok(g) || subgroup.contains(g)) return;
    found.push_back(g);
    subgroup = PermGroup::from_generators(found, degree);
    if (subgroup.order() == goal_order) full = true;
  }
};

}  // namespace

PermGroup partition_stabilizer_impl(const PermGroup& g, const std::vector<int>& block_of,
                                    bool classwise) {
  if (static_cast<int>(block_of.size()) != g.degree())
    throw std::invalid_argument("block assignment size mismatch");
  PartitionSearch search(block_of, classwise, g.degree(), g.order());

  // DFS over the stabilizer chain; at depth d the images of the first d base
  // points are final, which is what the block pruning below relies on.
  struct Rec {
    const PermGroup& G;
    PartitionSearch& S;
    void operator()(size_t level, const Perm& suffix) {
      if (S.full) return;
      if (level == G.levels_.size()) {
        S.leaf(suffix);
        return;
      }
      const auto& lv = G.levels_[level];
      int b = lv.base_point;
      for (const auto& t : lv.transversal) {
        Perm next = compose(t, suffix);
        int image = next.img[b];
        int B = S.blk[b], B2 = S.blk[image];
        if (S.classwise) {
          if (B != B2) continue;
          (*this)(level + 1, next);
        } else {
          bool assigned = false;
          if (S.blk_img[B] == -1) {
            if (S.blk_pre[B2] != -1 || S.blk_size[B] != S.blk_size[B2]) continue;
            S.blk_img[B] = B2;
            S.blk_pre[B2] = B;
            assigned = true;
          } else if (S.blk_img[B] != B2) {
            continue;
          }
          (*this)(level + 1, next);
          if (assigned) {
            S.blk_img[B] = -1;
            S.blk_pre[B2] = -1;
          }
        }
        if (S.full) return;
      }
    }
  } rec{g, search};
  rec(0, Perm::identity(g.degree()));
  return PermGroup::from_generators(search.found, g.degree());
}

PermGroup partition_stabilizer(const PermGroup& g, const std::vector<int>& block_of) {
  return partition_stabilizer_impl(g, block_of, false);
}

PermGroup classwise_stabilizer(const PermGroup& g, const std::vector<int>& block_of) {
  return partition_stabilizer_impl(g, block_of, true);
}

}  // namespace gtrunc
