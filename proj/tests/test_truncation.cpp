#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "gtrunc/autgroup.hpp"
#include "gtrunc/builtin_groups.hpp"
#include "gtrunc/families.hpp"
#include "gtrunc/orbit_construction.hpp"
#include "gtrunc/truncation.hpp"

using namespace gtrunc;

namespace {

Labeling identity_labeling(const Graph& base) {
  std::vector<std::vector<int>> rows(base.order());
  for (int u = 0; u < base.order(); ++u) {
    int k = base.degree(u);
    for (int i = 0; i < k; ++i) rows[u].push_back(i + 1);
  }
  return Labeling(base, rows);
}

Graph two_path() {  // P3: one edge plus a pendant, order 3
  return fixtures::path_graph(3);
}

Graph edge_plus_isolated() {
  Graph g(3);
  g.add_edge(0, 1);
  return g;
}

PermGroup graph_sym(const Graph& g) { return automorphism_group(g); }

}  // namespace

TEST_CASE("truncation of K4 by C3 is the truncated tetrahedron") {
  Graph k4 = complete_graph(4);
  Truncation t = truncate(k4, random_labeling(k4, 1), cycle_graph(3));
  CHECK(t.result.order() == 12);
  CHECK(basic_props(t.result).regular_degree == 3);
  CHECK(girth(t.result) == 3);
  CHECK(automorphism_group(t.result).order() == 24);
  CHECK(is_vertex_transitive(t.result));
  // the labeling is irrelevant for a complete inserted graph
  Truncation t2 = truncate(k4, random_labeling(k4, 99), cycle_graph(3));
  CHECK(are_isomorphic(t.result, t2.result).has_value());
}

TEST_CASE("edge audit: |E| = n|E(Y)| + |E(G)|, red degrees, one blue edge each") {
  std::mt19937_64 rng(5);
  std::vector<Graph> bases = {complete_graph(4), complete_bipartite(3, 3), fixtures::cube()};
  std::vector<Graph> inserts = {cycle_graph(3), two_path(), edge_plus_isolated()};
  for (const auto& base : bases)
    for (const auto& ins : inserts) {
      Truncation t = truncate(base, random_labeling(base, rng()), ins);
      CHECK(t.result.edge_count() ==
            base.order() * ins.edge_count() + base.edge_count());
      CHECK(static_cast<int>(t.blue_edges.size()) == base.edge_count());
      std::vector<int> blue_deg(t.result.order(), 0);
      for (auto [a, b] : t.blue_edges) {
        ++blue_deg[a];
        ++blue_deg[b];
      }
      for (int x = 0; x < t.result.order(); ++x) {
        CHECK(blue_deg[x] == 1);
        int local = x % t.k;
        CHECK(t.result.degree(x) == ins.degree(local) + 1);
      }
    }
}

TEST_CASE("truncation of K33 by C3") {
  Graph k33 = complete_bipartite(3, 3);
  Truncation t = truncate(k33, random_labeling(k33, 2), cycle_graph(3));
  CHECK(t.result.order() == 18);
  CHECK(t.result.edge_count() == 27);
  CHECK(t.blue_edges.size() == 9);
  CHECK(basic_props(t.result).regular_degree == 3);
}

TEST_CASE("truncation of C4 by K2 collapses to an 8-cycle") {
  // the inserted copies are single edges, so the result is 2-regular: a C8
  Graph c4 = cycle_graph(4);
  Graph k2 = complete_graph(2);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Truncation t = truncate(c4, random_labeling(c4, seed), k2);
    CHECK(t.result.order() == 8);
    CHECK(basic_props(t.result).regular_degree == 2);
    CHECK(are_isomorphic(t.result, cycle_graph(8)).has_value());
    CHECK(blue_girth(t) == 8);  // the bound 2*girth(C4) = 8 is attained
  }
}

TEST_CASE("truncate validates its inputs") {
  Graph k4 = complete_graph(4);
  CHECK_THROWS_AS(truncate(fixtures::star(3), identity_labeling(complete_graph(4)),
                           cycle_graph(3)),
                  std::invalid_argument);  // non-regular base
  CHECK_THROWS_AS(truncate(k4, random_labeling(k4, 0), cycle_graph(4)),
                  std::invalid_argument);  // order mismatch
  std::vector<std::vector<int>> bad(4, {1, 1, 2});
  CHECK_THROWS_AS(Labeling(k4, bad), std::invalid_argument);
}

TEST_CASE("labeling files round trip bit-exactly") {
  Graph base = fixtures::cube();
  Labeling rho = random_labeling(base, 77);
  std::ostringstream out;
  write_labeling(out, base, rho);
  std::istringstream in(out.str());
  Labeling back = parse_labeling(in, base);
  CHECK(back.labels() == rho.labels());
  std::ostringstream out2;
  write_labeling(out2, base, back);
  CHECK(out.str() == out2.str());
}

TEST_CASE("blue girth of the truncated tetrahedron is 6") {
  Graph k4 = complete_graph(4);
  Truncation t = truncate(k4, random_labeling(k4, 3), cycle_graph(3));
  CHECK(blue_girth(t) == 6);
}

TEST_CASE("blue girth is at least twice the base girth, randomized") {
  std::mt19937_64 rng(11);
  std::vector<Graph> bases = {complete_graph(4), complete_bipartite(3, 3), fixtures::cube(),
                              petersen()};
  std::vector<Graph> inserts = {cycle_graph(3), two_path(), edge_plus_isolated()};
  for (const auto& base : bases)
    for (const auto& ins : inserts)
      for (int trial = 0; trial < 3; ++trial) {
        Truncation t = truncate(base, random_labeling(base, rng()), ins);
        auto bg = blue_girth(t);
        if (bg) CHECK(*bg >= 2 * *girth(base));
      }
}

TEST_CASE("lift of the identity is the identity") {
  Graph k4 = complete_graph(4);
  Truncation t = truncate(k4, random_labeling(k4, 4), cycle_graph(3));
  auto l = lift(t, Perm::identity(4));
  REQUIRE(l.has_value());
  CHECK(l->is_identity());
}

TEST_CASE("complete inserted graph: every base automorphism lifts") {
  Graph k5 = complete_graph(5);
  Truncation t = truncate(k5, random_labeling(k5, 5), complete_graph(4));
  PermGroup s5 = graph_sym(k5);
  CHECK(s5.order() == 120);
  for (const auto& g : s5.generators()) {
    auto l = lift(t, g);
    REQUIRE(l.has_value());
    CHECK(is_automorphism(t.result, *l));
    // lifts project back: project(lift(g)) == g
    auto back = project(t, *l);
    REQUIRE(back.has_value());
    CHECK(*back == g);
  }
  CHECK(lifted_subgroup(t, s5).order() == 120);
}

TEST_CASE("lift rejects non-automorphisms of the base") {
  Graph pr3 = prism(3);
  Truncation t = truncate(pr3, random_labeling(pr3, 6), cycle_graph(3));
  CHECK_THROWS_AS(lift(t, parse_perm("(1 2)", 6)) && true, std::invalid_argument);
}

TEST_CASE("project rejects non-automorphisms of the truncation") {
  Graph k4 = complete_graph(4);
  Truncation t = truncate(k4, random_labeling(k4, 7), cycle_graph(3));
  CHECK_THROWS_AS(project(t, parse_perm("(1 2)", 12)) && true, std::invalid_argument);
}

TEST_CASE("lifted subgroup of Sym4 on the truncated tetrahedron has order 24") {
  Graph k4 = complete_graph(4);
  Truncation t = truncate(k4, random_labeling(k4, 8), cycle_graph(3));
  PermGroup s4 = graph_sym(k4);
  PermGroup lifted = lifted_subgroup(t, s4);
  CHECK(lifted.order() == 24);
  auto info = projecting_subgroup(t);
  CHECK(info.aut.order() == 24);
  CHECK(info.projecting.order() == 24);
  CHECK_FALSE(info.has_mixers);
}

TEST_CASE("kernel of the projection is trivial (classwise stabilizer)") {
  std::mt19937_64 rng(21);
  std::vector<Graph> bases = {complete_graph(4), complete_bipartite(3, 3), fixtures::cube()};
  for (const auto& base : bases) {
    Truncation t = truncate(base, random_labeling(base, rng()), cycle_graph(3));
    auto info = projecting_subgroup(t);
    CHECK(classwise_stabilizer(info.aut, t.block_ids()).order() == 1);
  }
}

TEST_CASE("the set of lifting automorphisms is closed under products and inverses") {
  std::mt19937_64 rng(31);
  Graph base = complete_graph(5);
  Truncation t = truncate(base, random_labeling(base, 1234), cycle_graph(4));
  PermGroup s5 = graph_sym(base);

  std::vector<Perm> lifting, elements;
  s5.for_each_element([&](const Perm& g) { elements.push_back(g); });
  for (const auto& g : elements)
    if (lift(t, g)) lifting.push_back(g);

  for (int trial = 0; trial < 200; ++trial) {
    const Perm& a = lifting[rng() % lifting.size()];
    const Perm& b = lifting[rng() % lifting.size()];
    CHECK(lift(t, compose(a, b)).has_value());
    CHECK(lift(t, inverse(a)).has_value());
  }
  // and the lifted subgroup order agrees with the direct count
  CHECK(lifted_subgroup(t, s5).order() == lifting.size());
}

TEST_CASE("central-element Cayley inserted graphs never allow mixers") {
  // C4 = Cay(Z4; {+-1}) and K4 = Cay(Z2xZ2; all involutions): 4-regular bases
  std::mt19937_64 rng(41);
  std::vector<Graph> bases = {complete_graph(5), complete_bipartite(4, 4)};
  std::vector<Graph> inserts = {cycle_graph(4), complete_graph(4)};
  for (const auto& base : bases)
    for (const auto& ins : inserts)
      for (int trial = 0; trial < 2; ++trial) {
        Truncation t = truncate(base, random_labeling(base, rng()), ins);
        // hypothesis check: every inserted edge on a cycle < 2 girth(base)
        bool hyp = true;
        for (auto [a, b] : ins.edges()) {
          auto c = min_cycle_through_edge(ins, a, b);
          if (!c || *c >= 2 * *girth(base)) hyp = false;
        }
        REQUIRE(hyp);
        auto info = projecting_subgroup(t);
        CHECK_FALSE(info.has_mixers);
      }
}

TEST_CASE("project composed with lift is the identity map on lifting elements") {
  std::mt19937_64 rng(51);
  Graph base = fixtures::cube();
  Truncation t = truncate(base, random_labeling(base, rng()), cycle_graph(3));
  PermGroup aut = graph_sym(base);
  aut.for_each_element([&](const Perm& g) {
    auto l = lift(t, g);
    if (l) {
      auto back = project(t, *l);
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
  });
}

TEST_CASE("lift composed with project is the identity on the projecting subgroup") {
  Graph base = complete_graph(4);
  Truncation t = truncate(base, random_labeling(base, 15), cycle_graph(3));
  auto info = projecting_subgroup(t);
  for (const auto& gt : info.projecting.generators()) {
    auto down = project(t, gt);
    REQUIRE(down.has_value());
    auto up = lift(t, *down);
    REQUIRE(up.has_value());
    CHECK(*up == gt);
  }
}
