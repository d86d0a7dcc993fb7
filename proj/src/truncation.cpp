#include "gtrunc/truncation.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gtrunc/autgroup.hpp"

namespace gtrunc {

Labeling::Labeling(const Graph& base, std::vector<std::vector<int>> per_vertex_labels)
    : labels_(std::move(per_vertex_labels)) {
  const int n = base.order();
  if (static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("labeling: one label row per vertex required");
  if (n == 0) return;
  k_ = base.degree(0);
  for (int u = 0; u < n; ++u) {
    if (base.degree(u) != k_) throw std::invalid_argument("labeling: base graph is not regular");
    if (static_cast<int>(labels_[u].size()) != k_)
      throw std::invalid_argument("labeling: wrong number of labels at a vertex");
    std::vector<bool> used(k_ + 1, false);
    for (int l : labels_[u]) {
      if (l < 1 || l > k_ || used[l])
        throw std::invalid_argument("labeling: labels at a vertex must be a bijection onto 1..k");
      used[l] = true;
    }
  }
}

int Labeling::label_of_dart(const Graph& base, int u, int w) const {
  int idx = 0;
  bool found = false;
  base.for_each_neighbor(u, [&](int x) {
    if (x < w) ++idx;
    if (x == w) found = true;
  });
  if (!found) throw std::invalid_argument("labeling: (u,w) is not a dart");
  return labels_[u][idx];
}

int Labeling::neighbor_with_label(const Graph& base, int u, int label) const {
  auto nb = base.neighbors(u);
  for (size_t i = 0; i < nb.size(); ++i)
    if (labels_[u][i] == label) return nb[i];
  throw std::invalid_argument("labeling: label not present at vertex");
}

Labeling parse_labeling(std::istream& in, const Graph& base) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("labeling file: missing header");
  std::istringstream head(line);
  std::string kw;
  int n = 0, k = 0;
  if (!(head >> kw >> n >> k) || kw != "base")
    throw std::invalid_argument("labeling file: header must be 'base n k'");
  if (n != base.order()) throw std::invalid_argument("labeling file: vertex count mismatch");
  std::vector<std::vector<int>> rows(n);
  int seen = 0;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos || line[a] == '#') continue;
    std::istringstream ls(line);
    int u;
    char colon;
    if (!(ls >> u >> colon) || colon != ':' || u < 0 || u >= n)
      throw std::invalid_argument("labeling file: bad vertex line");
    auto nb = base.neighbors(u);
    rows[u].assign(nb.size(), 0);
    std::string tok;
    size_t count = 0;
    while (ls >> tok) {
      size_t arrow = tok.find("->");
      if (arrow == std::string::npos)
        throw std::invalid_argument("labeling file: expected w->l entries");
      int w = std::stoi(tok.substr(0, arrow));
      int l = std::stoi(tok.substr(arrow + 2));
      auto it = std::lower_bound(nb.begin(), nb.end(), w);
      if (it == nb.end() || *it != w)
        throw std::invalid_argument("labeling file: entry for a non-neighbor");
      rows[u][it - nb.begin()] = l;
      ++count;
    }
    if (count != nb.size())
      throw std::invalid_argument("labeling file: vertex line must list every neighbor");
    ++seen;
  }
  if (seen != n) throw std::invalid_argument("labeling file: missing vertex lines");
  return Labeling(base, std::move(rows));
}

void write_labeling(std::ostream& out, const Graph& base, const Labeling& rho) {
  out << "base " << base.order() << ' ' << rho.k() << '\n';
  for (int u = 0; u < base.order(); ++u) {
    out << u << ':';
    auto nb = base.neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i) out << ' ' << nb[i] << "->" << rho.labels()[u][i];
    out << '\n';
  }
}

Labeling random_labeling(const Graph& base, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = base.order();
  std::vector<std::vector<int>> rows(n);
  for (int u = 0; u < n; ++u) {
    int k = base.degree(u);
    rows[u].resize(k);
    for (int i = 0; i < k; ++i) rows[u][i] = i + 1;
    std::shuffle(rows[u].begin(), rows[u].end(), rng);
  }
  return Labeling(base, std::move(rows));
}

std::vector<int> Truncation::block_ids() const {
  std::vector<int> ids(result.order());
  for (int x = 0; x < result.order(); ++x) ids[x] = x / k;
  return ids;
}

bool Truncation::is_blue(int a, int b) const { return a / k != b / k && result.has_edge(a, b); }

Truncation truncate(const Graph& base, const Labeling& rho, const Graph& inserted) {
  const int n = base.order();
  if (n == 0) throw std::invalid_argument("truncate: empty base");
  auto props = basic_props(base);
  if (!props.regular_degree) throw std::invalid_argument("truncate: base graph is not regular");
  const int k = *props.regular_degree;
  if (k < 1) throw std::invalid_argument("truncate: base must have positive degree");
  if (inserted.order() != k)
    throw std::invalid_argument("truncate: inserted graph order must equal base degree");
  if (rho.k() != k || static_cast<int>(rho.labels().size()) != n)
    throw std::invalid_argument("truncate: labeling does not fit the base graph");

  Truncation t;
  t.base = base;
  t.inserted = inserted;
  t.rho = rho;
  t.k = k;
  t.result = Graph(n * k);
  // red edges: one inserted copy per base vertex
  for (int u = 0; u < n; ++u)
    for (auto [a, b] : inserted.edges()) t.result.add_edge(u * k + a, u * k + b);
  // blue edges: (u, v_rho(u,w)) ~ (w, v_rho(w,u)) for each base edge uw
  for (auto [u, w] : base.edges()) {
    int x = u * k + rho.label_of_dart(base, u, w) - 1;
    int y = w * k + rho.label_of_dart(base, w, u) - 1;
    t.result.add_edge(x, y);
    t.blue_edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(t.blue_edges.begin(), t.blue_edges.end());
  return t;
}

std::optional<int> blue_girth(const Truncation& t) {
  std::optional<int> best;
  for (auto [a, b] : t.blue_edges) {
    auto len = min_cycle_through_edge(t.result, a, b);
    if (len && (!best || *len < *best)) best = len;
  }
  return best;
}

namespace {

// The only candidate for a lift: (u, v_rho(u,w)) -> (u^g, v_rho(u^g, w^g)).
Perm lift_candidate(const Truncation& t, const Perm& g) {
  const int k = t.k;
  std::vector<int> img(t.result.order());
  for (int u = 0; u < t.base.order(); ++u) {
    auto nb = t.base.neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i) {
      int label = t.rho.labels()[u][i];
      int gu = g.of(u), gw = g.of(nb[i]);
      img[u * k + label - 1] = gu * k + t.rho.label_of_dart(t.base, gu, gw) - 1;
    }
  }
  return Perm(std::move(img));
}

}  // namespace

std::optional<Perm> lift(const Truncation& t, const Perm& g) {
  if (!is_automorphism(t.base, g))
    throw std::invalid_argument("lift: not an automorphism of the base graph");
  Perm cand = lift_candidate(t, g);
  // blue edges are preserved by construction; red edges decide
  for (int u = 0; u < t.base.order(); ++u)
    for (auto [a, b] : t.inserted.edges())
      if (!t.result.has_edge(cand.of(u * t.k + a), cand.of(u * t.k + b))) return std::nullopt;
  return cand;
}

std::optional<Perm> project(const Truncation& t, const Perm& gt) {
  if (!is_automorphism(t.result, gt))
    throw std::invalid_argument("project: not an automorphism of the truncation");
  const int k = t.k;
  std::vector<int> img(t.base.order());
  for (int u = 0; u < t.base.order(); ++u) {
    int c = gt.of(u * k) / k;
    for (int i = 1; i < k; ++i)
      if (gt.of(u * k + i) / k != c) return std::nullopt;  // mixer
    img[u] = c;
  }
  return Perm(std::move(img));
}

PermGroup lifted_subgroup(const Truncation& t, const PermGroup& G) {
  std::vector<Perm> lifts;
  bool all = true;
  for (const auto& g : G.generators()) {
    auto lg = lift(t, g);
    if (lg) {
      lifts.push_back(std::move(*lg));
    } else {
      all = false;
      break;
    }
  }
  if (all) return PermGroup::from_generators(std::move(lifts), t.result.order());

  if (G.order() > 1000000ull)
    throw std::invalid_argument("lifted_subgroup: group too large for element enumeration");
  // grow the subgroup of lifting elements; elements already inside are skipped
  std::vector<Perm> base_gens;
  PermGroup lifting = PermGroup::trivial(G.degree());
  G.for_each_element([&](const Perm& g) {
    if (lifting.contains(g)) return;
    if (lift(t, g)) {
      base_gens.push_back(g);
      lifting = PermGroup::from_generators(base_gens, G.degree());
    }
  });
  lifts.clear();
  for (const auto& g : base_gens) lifts.push_back(*lift(t, g));
  PermGroup up = PermGroup::from_generators(std::move(lifts), t.result.order());
  if (up.order() != lifting.order())
    throw std::logic_error("lifted subgroup order mismatch");
  return up;
}

ProjectingInfo projecting_subgroup(const Truncation& t) {
  ProjectingInfo info;
  info.aut = automorphism_group(t.result);
  info.projecting = partition_stabilizer(info.aut, t.block_ids());
  info.has_mixers = info.aut.order() != info.projecting.order();
  return info;
}

PermGroup project_group(const Truncation& t, const PermGroup& projecting) {
  std::vector<Perm> gens;
  for (const auto& g : projecting.generators()) {
    auto p = project(t, g);
    if (!p) throw std::invalid_argument("project_group: subgroup contains a mixer");
    gens.push_back(std::move(*p));
  }
  return PermGroup::from_generators(std::move(gens), t.base.order());
}

}  // namespace gtrunc
