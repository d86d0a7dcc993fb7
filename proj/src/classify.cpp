#include "gtrunc/classify.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <set>
#include <thread>

#include "gtrunc/autgroup.hpp"
#include "gtrunc/families.hpp"
#include "gtrunc/graph6.hpp"

namespace gtrunc {

namespace {

// All simple cycles of length exactly len through v, each reported once
// (second vertex smaller than last).
std::vector<std::vector<int>> cycles_through(const Graph& g, int v, int len,
                                             const std::vector<bool>* allowed = nullptr) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{v};
  std::vector<bool> used(g.order(), false);
  used[v] = true;

  auto rec = [&](auto&& self, int cur) -> void {
    if (static_cast<int>(path.size()) == len) {
      if (g.has_edge(cur, v) && path[1] < path.back()) out.push_back(path);
      return;
    }
    g.for_each_neighbor(cur, [&](int w) {
      if (used[w] || (allowed && !(*allowed)[w])) return;
      used[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = false;
    });
  };
  rec(rec, v);
  return out;
}

bool block_is_induced_cycle(const Graph& g, const std::vector<int>& block) {
  int inside = 0;
  std::set<int> bs(block.begin(), block.end());
  for (int x : block)
    g.for_each_neighbor(x, [&](int w) {
      if (bs.count(w)) ++inside;
    });
  return inside == 2 * static_cast<int>(block.size());
}

// Checks the two block conditions and assembles quotient + labeling.
std::optional<Decomposition> finalize_blocks(const Graph& g,
                                             std::vector<std::vector<int>> blocks, int cycle_len) {
  const int n = g.order();
  std::vector<int> block_of(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) {
      if (block_of[x] != -1) return std::nullopt;
      block_of[x] = static_cast<int>(b);
    }
  for (int x = 0; x < n; ++x)
    if (block_of[x] < 0) return std::nullopt;

  // every vertex: exactly one neighbor outside its block; distinct vertices of
  // a block reach distinct other blocks
  const int nb = static_cast<int>(blocks.size());
  Graph quotient(nb);
  std::vector<int> exit_vertex(n, -1);  // vertex -> its outside neighbor
  for (size_t b = 0; b < blocks.size(); ++b) {
    std::set<int> seen_targets;
    for (int x : blocks[b]) {
      int outside = 0, target = -1;
      g.for_each_neighbor(x, [&](int w) {
        if (block_of[w] != static_cast<int>(b)) {
          ++outside;
          target = w;
        }
      });
      if (outside != 1) return std::nullopt;
      exit_vertex[x] = target;
      if (!seen_targets.insert(block_of[target]).second) return std::nullopt;
    }
    for (int t : seen_targets)
      if (t != static_cast<int>(b) && !quotient.has_edge(static_cast<int>(b), t))
        quotient.add_edge(static_cast<int>(b), t);
  }

  // rotate each block so it starts at its smallest vertex and runs towards
  // that vertex's smaller cycle neighbor, for a deterministic labeling
  for (auto& block : blocks) {
    std::set<int> bs(block.begin(), block.end());
    int start = *std::min_element(block.begin(), block.end());
    std::vector<int> inside;
    g.for_each_neighbor(start, [&](int w) {
      if (bs.count(w)) inside.push_back(w);
    });
    std::sort(inside.begin(), inside.end());
    std::vector<int> ordered{start, inside.front()};
    while (static_cast<int>(ordered.size()) < cycle_len) {
      int cur = ordered.back(), prev = ordered[ordered.size() - 2];
      int next = -1;
      g.for_each_neighbor(cur, [&](int w) {
        if (w != prev && bs.count(w)) next = w;
      });
      ordered.push_back(next);
    }
    block = std::move(ordered);
  }

  // labeling: the i-th vertex of block b (cycle order) carries label i+1 on
  // the dart towards the block it exits to
  std::vector<std::vector<int>> rows(nb);
  for (int b = 0; b < nb; ++b) {
    auto qnb = quotient.neighbors(b);
    rows[b].assign(qnb.size(), 0);
    for (int i = 0; i < cycle_len; ++i) {
      int tgt = block_of[exit_vertex[blocks[b][i]]];
      auto it = std::lower_bound(qnb.begin(), qnb.end(), tgt);
      rows[b][it - qnb.begin()] = i + 1;
    }
  }

  Decomposition d;
  d.blocks = std::move(blocks);
  d.block_of = std::move(block_of);
  d.quotient = std::move(quotient);
  d.inserted = cycle_graph(cycle_len);
  auto qprops = basic_props(d.quotient);
  if (!qprops.regular_degree || *qprops.regular_degree != cycle_len) return std::nullopt;
  d.labeling = Labeling(d.quotient, std::move(rows));

  // the decomposition must reproduce the input
  Truncation t = truncate(d.quotient, d.labeling, d.inserted);
  if (!are_isomorphic(t.result, g)) return std::nullopt;
  return d;
}

struct PartitionSearch {
  const Graph& g;
  int cycle_len;
  long budget = 1000000;
  std::vector<int> block_of;
  std::vector<std::vector<int>> blocks;
  std::optional<Decomposition> found;

  PartitionSearch(const Graph& graph, int len) : g(graph), cycle_len(len) {
    block_of.assign(g.order(), -1);
  }

  bool edges_between_ok(const std::vector<int>& block, int own_id) {
    // at most one edge between the new block and any placed block
    std::set<int> targets;
    for (int x : block) {
      bool ok = true;
      g.for_each_neighbor(x, [&](int w) {
        int b = block_of[w];
        if (b < 0 || b == own_id || !ok) return;
        if (!targets.insert(b).second) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  void rec() {
    if (found || --budget < 0) return;
    int v = -1;
    for (int x = 0; x < g.order(); ++x)
      if (block_of[x] < 0) {
        v = x;
        break;
      }
    if (v < 0) {
      auto d = finalize_blocks(g, blocks, cycle_len);
      if (d) found = std::move(d);
      return;
    }
    std::vector<bool> allowed(g.order(), false);
    for (int x = 0; x < g.order(); ++x) allowed[x] = (block_of[x] < 0);
    for (auto& cyc : cycles_through(g, v, cycle_len, &allowed)) {
      if (!block_is_induced_cycle(g, cyc)) continue;
      int id = static_cast<int>(blocks.size());
      for (int x : cyc) block_of[x] = id;
      if (edges_between_ok(cyc, id)) {
        blocks.push_back(cyc);
        rec();
        blocks.pop_back();
      }
      for (int x : cyc) block_of[x] = -1;
      if (found) return;
    }
  }
};

}  // namespace

std::optional<Decomposition> truncation_decomposition(const Graph& g, int cycle_len,
                                                      bool allow_partition_search) {
  if (g.order() == 0 || cycle_len < 3) return std::nullopt;
  auto props = basic_props(g);
  if (!props.connected || !props.regular_degree) return std::nullopt;
  if (g.order() % cycle_len != 0) return std::nullopt;

  // unique-cycle route
  bool unique = true;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> covered(g.order(), false);
  for (int v = 0; v < g.order() && unique; ++v) {
    auto cycles = cycles_through(g, v, cycle_len);
    if (cycles.size() != 1) {
      unique = false;
      break;
    }
    if (!covered[v]) {
      for (int x : cycles[0]) covered[x] = true;
      blocks.push_back(cycles[0]);
    }
  }
  if (unique) {
    for (auto& b : blocks)
      if (!block_is_induced_cycle(g, b)) return std::nullopt;
    return finalize_blocks(g, std::move(blocks), cycle_len);
  }

  if (!allow_partition_search) return std::nullopt;
  PartitionSearch search(g, cycle_len);
  search.rec();
  return std::move(search.found);
}

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::K4: return "K4";
    case ClassTag::Prism3: return "Prism3";
    case ClassTag::TruncC3: return "TruncC3";
    case ClassTag::K33_Ml3: return "K33_Ml3";
    case ClassTag::Prism: return "Prism";
    case ClassTag::Moebius: return "Moebius";
    case ClassTag::GenPrism: return "GenPrism";
    case ClassTag::TruncC4: return "TruncC4";
    case ClassTag::Petersen: return "Petersen";
    case ClassTag::Dodecahedron: return "Dodecahedron";
    case ClassTag::TruncC5: return "TruncC5";
    case ClassTag::NotCubicVTGirth345: return "NotCubicVTGirth345";
  }
  return "?";
}

namespace {

bool iso(const Graph& a, const Graph& b) { return are_isomorphic(a, b).has_value(); }

// quotient must admit an arc-transitive action for the Trunc tags
bool quotient_ok(const Graph& quotient) {
  auto aut = automorphism_group(quotient);
  auto t = transitivity(aut, &quotient);
  return t.arc_transitive_on_graph.value_or(false);
}

}  // namespace

ClassLabel classify_cubic_vt(const Graph& g) {
  ClassLabel label;
  const int n = g.order();
  if (n == 0) return label;
  GraphSymmetry sym = analyze_graph(g);
  label.aut_order = sym.aut.order();

  auto props = basic_props(g);
  if (!props.connected || !props.regular_degree || *props.regular_degree != 3) return label;
  if (static_cast<int>(sym.aut.orbit(0).size()) != n) return label;  // not vertex-transitive
  auto gi = girth(g);
  if (!gi || *gi < 3 || *gi > 5) return label;

  switch (*gi) {
    case 3: {
      if (n == 4 && iso(g, complete_graph(4))) {
        label.tag = ClassTag::K4;
        return label;
      }
      if (n == 6 && iso(g, prism(3))) {
        label.tag = ClassTag::Prism3;
        return label;
      }
      auto d = truncation_decomposition(g, 3);
      if (d && quotient_ok(d->quotient)) {
        label.tag = ClassTag::TruncC3;
        label.quotient = d->quotient;
      }
      return label;
    }
    case 4: {
      const int half = n / 2;
      if (n == 6 && iso(g, moebius_ladder(3))) {
        label.tag = ClassTag::K33_Ml3;
        return label;
      }
      if (half >= 3 && iso(g, moebius_ladder(half))) {
        label.tag = ClassTag::Moebius;
        return label;
      }
      if (half >= 4 && iso(g, prism(half))) {
        label.tag = ClassTag::Prism;
        return label;
      }
      if (n % 4 == 0 && n / 4 >= 2 && iso(g, generalized_prism(n / 4))) {
        label.tag = ClassTag::GenPrism;
        return label;
      }
      auto d = truncation_decomposition(g, 4);
      if (d && quotient_ok(d->quotient)) {
        label.tag = ClassTag::TruncC4;
        label.quotient = d->quotient;
      }
      return label;
    }
    case 5: {
      if (n == 10 && iso(g, petersen())) {
        label.tag = ClassTag::Petersen;
        return label;
      }
      if (n == 20 && iso(g, dodecahedron())) {
        label.tag = ClassTag::Dodecahedron;
        return label;
      }
      auto d = truncation_decomposition(g, 5);
      if (d && quotient_ok(d->quotient)) {
        label.tag = ClassTag::TruncC5;
        label.quotient = d->quotient;
      }
      return label;
    }
  }
  return label;
}

CorpusReport classify_corpus(std::istream& in, int jobs) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    lines.push_back(line);
  }

  CorpusReport report;
  report.lines.resize(lines.size());

  auto handle = [&](size_t i) {
    CorpusLine& out = report.lines[i];
    out.line_no = static_cast<int>(i) + 1;
    if (lines[i].empty()) {
      out.tag = "Empty";
      return;
    }
    try {
      Graph g = decode_graph6(lines[i]);
      ClassLabel cl = classify_cubic_vt(g);
      out.n = g.order();
      out.tag = to_string(cl.tag);
      out.aut_order = cl.aut_order;
      if (cl.quotient) out.quotient_canonical = canonical_form(*cl.quotient).g6;
    } catch (const std::exception& e) {
      out.tag = "Error";
      out.error = e.what();
    }
  };

  if (jobs <= 1) {
    for (size_t i = 0; i < lines.size(); ++i) handle(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= lines.size()) break;
        handle(i);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& l : report.lines) ++report.summary[l.tag];
  return report;
}

}  // namespace gtrunc
