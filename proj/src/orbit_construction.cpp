#include "gtrunc/orbit_construction.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "gtrunc/autgroup.hpp"
#include "gtrunc/builtin_groups.hpp"
#include "gtrunc/families.hpp"
#include "gtrunc/gf.hpp"

namespace gtrunc {

namespace {

PermGroup rebase_at(const PermGroup& G, int v) {
  return PermGroup::from_generators(G.generators(), G.degree(), {v});
}

void check_vertex_transitive(const Graph& base, const PermGroup& G) {
  if (G.degree() != base.order())
    throw std::invalid_argument("group degree differs from graph order");
  for (const auto& g : G.generators())
    if (!is_automorphism(base, g))
      throw std::invalid_argument("group generator is not an automorphism of the base");
  if (base.order() > 0 && static_cast<int>(G.orbit(0).size()) != base.order())
    throw std::invalid_argument("group is not vertex-transitive on the base");
}

}  // namespace

Truncation orbit_truncation(const Graph& base, const PermGroup& G, const OrbitSelection& sel) {
  check_vertex_transitive(base, G);
  const int n = base.order();
  const int v = sel.v;
  auto nbv = base.neighbors(v);
  const int k = static_cast<int>(nbv.size());

  // validate that sel.pairs is a union of G_v-orbits
  PermGroup rebased = rebase_at(G, v);
  std::set<std::pair<int, int>> pair_set(sel.pairs.begin(), sel.pairs.end());
  PermGroup stab = rebased.stabilizer(v);
  for (const auto& pr : sel.pairs) {
    if (!base.has_edge(v, pr.first) || !base.has_edge(v, pr.second))
      throw std::invalid_argument("selection pair outside the neighborhood of v");
    for (const auto& s : stab.generators()) {
      int a = s.of(pr.first), b = s.of(pr.second);
      if (a > b) std::swap(a, b);
      if (!pair_set.count({a, b}))
        throw std::invalid_argument("selection is not a union of stabilizer orbits");
    }
  }

  // phi: N(v) -> {1..k} in ascending vertex order
  std::vector<int> phi(n, -1);
  for (int i = 0; i < k; ++i) phi[nbv[i]] = i + 1;

  Graph inserted(k);
  for (auto [a, b] : sel.pairs) inserted.add_edge(phi[a] - 1, phi[b] - 1);

  std::vector<std::vector<int>> rows(n);
  for (int u = 0; u < n; ++u) {
    Perm g_u = inverse(rebased.rep_from_base(u));  // u^{g_u} = v
    auto nb = base.neighbors(u);
    rows[u].resize(nb.size());
    for (size_t i = 0; i < nb.size(); ++i) {
      int image = g_u.of(nb[i]);
      if (phi[image] < 0) throw std::logic_error("coset representative is not an automorphism");
      rows[u][i] = phi[image];
    }
  }
  return truncate(base, Labeling(base, std::move(rows)), inserted);
}

std::vector<OrbitSelection> orbit_unions_matching(const Graph& base, const PermGroup& G, int v,
                                                  const Graph& target) {
  check_vertex_transitive(base, G);
  PermGroup rebased = rebase_at(G, v);
  PermGroup stab = rebased.stabilizer(v);
  auto nbv = base.neighbors(v);
  auto orbits = orbits_on_pairs(stab, nbv);
  const size_t norb = orbits.size();
  if (norb > 24) throw std::invalid_argument("too many stabilizer orbits to enumerate unions");

  const int want_edges = target.edge_count();
  std::vector<int> want_degrees;
  for (int u = 0; u < target.order(); ++u) want_degrees.push_back(target.degree(u));
  std::sort(want_degrees.begin(), want_degrees.end());

  std::vector<OrbitSelection> out;
  for (std::uint32_t mask = 1; mask < (1u << norb); ++mask) {
    int total = 0;
    for (size_t i = 0; i < norb; ++i)
      if (mask & (1u << i)) total += static_cast<int>(orbits[i].size());
    if (total != want_edges) continue;

    OrbitSelection sel;
    sel.v = v;
    for (size_t i = 0; i < norb; ++i)
      if (mask & (1u << i)) {
        sel.orbit_ids.push_back(static_cast<int>(i));
        sel.pairs.insert(sel.pairs.end(), orbits[i].begin(), orbits[i].end());
      }
    std::sort(sel.pairs.begin(), sel.pairs.end());

    // degree pruning before the isomorphism test
    std::map<int, int> deg;
    for (int w : nbv) deg[w] = 0;
    for (auto [a, b] : sel.pairs) {
      ++deg[a];
      ++deg[b];
    }
    std::vector<int> degs;
    for (auto& [w, d] : deg) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    if (degs != want_degrees) continue;

    std::vector<int> phi(base.order(), -1);
    for (size_t i = 0; i < nbv.size(); ++i) phi[nbv[i]] = static_cast<int>(i);
    Graph orbital(static_cast<int>(nbv.size()));
    for (auto [a, b] : sel.pairs) orbital.add_edge(phi[a], phi[b]);
    if (are_isomorphic(orbital, target)) out.push_back(std::move(sel));
  }
  return out;
}

std::vector<CandidateGroup> candidate_groups(int n, const std::vector<CandidateGroup>& extra) {
  if (n < 4 || n > 20) throw std::invalid_argument("candidate_groups: n must be in 4..20");
  std::vector<CandidateGroup> raw;
  if (GF::supported(n))
    raw.push_back({"AGL(1," + std::to_string(n) + ")", builtin_group(BuiltinKind::AGL1, n)});
  if (GF::supported(n - 1)) {
    raw.push_back({"PSL(2," + std::to_string(n - 1) + ")", builtin_group(BuiltinKind::PSL2, n - 1)});
    raw.push_back({"PGL(2," + std::to_string(n - 1) + ")", builtin_group(BuiltinKind::PGL2, n - 1)});
  }
  for (const auto& e : extra) raw.push_back(e);

  const unsigned long long small = static_cast<unsigned long long>(n) * (n - 1);
  std::vector<CandidateGroup> out;
  for (auto& cg : raw) {
    if (cg.group.degree() != n) continue;
    unsigned long long o = cg.group.order();
    if (o != small && o != 2 * small) continue;
    if (!transitivity(cg.group).two_transitive) continue;
    out.push_back(std::move(cg));
  }
  return out;
}

bool lift_criterion(const Graph& base, const PermGroup& G, const OrbitSelection& sel,
                    const Perm& h) {
  if (!is_automorphism(base, h))
    throw std::invalid_argument("lift_criterion: not an automorphism of the base");
  std::vector<Perm> gens = G.generators();
  gens.push_back(h);
  PermGroup K = PermGroup::from_generators(std::move(gens), base.order(), {sel.v});
  PermGroup Kv = K.stabilizer(sel.v);
  std::set<std::pair<int, int>> pair_set(sel.pairs.begin(), sel.pairs.end());
  for (const auto& pr : sel.pairs)
    for (const auto& s : Kv.generators()) {
      int a = s.of(pr.first), b = s.of(pr.second);
      if (a > b) std::swap(a, b);
      if (!pair_set.count({a, b})) return false;
    }
  return true;
}

namespace {

struct WorkItem {
  int n;
  std::string group_name;
  OrbitSelection sel;
  PermGroup group;
};

struct WorkResult {
  int n;
  std::string group_name;
  unsigned long long lift_order;
  int girth_value;
  unsigned long long aut_order;
  std::string canonical;
};

WorkResult process_item(const Graph& base, const WorkItem& item) {
  Truncation t = orbit_truncation(base, item.group, item.sel);
  GraphSymmetry sym = analyze_graph(t.result);
  PermGroup lifted = lifted_subgroup(t, item.group);
  WorkResult r;
  r.n = item.n;
  r.group_name = item.group_name;
  r.lift_order = lifted.order();
  auto gi = girth(t.result);
  r.girth_value = gi ? *gi : -1;
  r.aut_order = sym.aut.order();
  r.canonical = sym.canonical.g6;
  return r;
}

}  // namespace

std::vector<TableRow> enumerate_table(int n_lo, int n_hi, bool include_16,
                                      const std::vector<CandidateGroup>& extra, int jobs) {
  if (n_lo < 4 || n_hi > 20 || n_lo > n_hi)
    throw std::invalid_argument("enumerate_table: range must lie within 4..20");

  std::vector<WorkItem> items;
  std::map<int, Graph> bases;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (n == 16 && !include_16) continue;
    Graph base = complete_graph(n);
    Graph target = cycle_graph(n - 1);
    bases.emplace(n, base);
    for (auto& cg : candidate_groups(n, extra)) {
      auto sels = orbit_unions_matching(base, cg.group, 0, target);
      for (auto& sel : sels) items.push_back({n, cg.name, std::move(sel), cg.group});
    }
  }

  std::vector<WorkResult> results(items.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < items.size(); ++i)
      results[i] = process_item(bases.at(items[i].n), items[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        results[i] = process_item(bases.at(items[i].n), items[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // dedup by canonical form; keep the producer with the largest lifted group
  std::map<std::string, TableRow> dedup;
  std::vector<std::string> insertion_order;
  for (const auto& r : results) {
    auto it = dedup.find(r.canonical);
    if (it == dedup.end()) {
      TableRow row;
      row.n = r.n;
      row.group = r.group_name;
      row.group_order = r.lift_order;
      row.order = r.n * (r.n - 1);
      row.girth = r.girth_value;
      row.aut_order = r.aut_order;
      row.aut_equals_lift = (r.aut_order == r.lift_order);
      row.canonical = r.canonical;
      dedup.emplace(r.canonical, std::move(row));
      insertion_order.push_back(r.canonical);
    } else if (r.lift_order > it->second.group_order) {
      it->second.group = r.group_name;
      it->second.group_order = r.lift_order;
      it->second.aut_equals_lift = (it->second.aut_order == r.lift_order);
    }
  }

  std::vector<TableRow> rows;
  for (const auto& key : insertion_order) rows.push_back(dedup.at(key));
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.n, a.girth, a.aut_order, a.canonical) <
           std::tie(b.n, b.girth, b.aut_order, b.canonical);
  });
  return rows;
}

}  // namespace gtrunc
