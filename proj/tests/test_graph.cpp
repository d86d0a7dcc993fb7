#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "gtrunc/families.hpp"
#include "gtrunc/graph.hpp"
#include "gtrunc/graph6.hpp"

using namespace gtrunc;

TEST_CASE("graph6 known encodings") {
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  Graph k1(1);
  CHECK(encode_graph6(k1) == "@");
  Graph e2(2);
  CHECK(encode_graph6(e2) == "A?");

  Graph k4 = decode_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);
  Graph one = decode_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);
}

TEST_CASE("graph6 round trips against the reference encoder") {
  for (const auto& item : fixtures::small_corpus()) {
    const std::string& name = item.first;
    const Graph& g = item.second;
    CAPTURE(name);
    std::string mine = encode_graph6(g);
    CHECK(mine == oracle::encode_graph6_ref(g));
    CHECK(decode_graph6(mine) == g);
  }
  Graph pet = petersen();
  CHECK(decode_graph6(encode_graph6(pet)) == pet);
}

TEST_CASE("graph6 random graphs round trip, including n > 62") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 70);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w)
        if (rng() % 3 == 0) g.add_edge(u, w);
    std::string enc = encode_graph6(g);
    CHECK(enc == oracle::encode_graph6_ref(g));
    CHECK(decode_graph6(enc) == g);
  }
}

TEST_CASE("graph6 encoding is injective on distinct labeled graphs") {
  Graph a(4), b(4);
  a.add_edge(0, 1);
  b.add_edge(2, 3);
  CHECK(encode_graph6(a) != encode_graph6(b));
}

TEST_CASE("graph6 decoder errors name the byte offset") {
  CHECK_THROWS_WITH_AS(decode_graph6("C~X"), doctest::Contains("trailing garbage"), Graph6Error);
  CHECK_THROWS_WITH_AS(decode_graph6("C"), doctest::Contains("truncated"), Graph6Error);
  CHECK_THROWS_WITH_AS(decode_graph6("C\x01"), doctest::Contains("out of range"), Graph6Error);
  CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
  // nonzero padding: n=2 needs 1 bit; '_' = 63+32 sets a padding bit
  CHECK(decode_graph6("A_") == complete_graph(2));
  CHECK_THROWS_WITH_AS(decode_graph6("AO"), doctest::Contains("padding"), Graph6Error);
}

TEST_CASE("girth on named graphs and against the oracle") {
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(fixtures::heawood()) == 6);
  CHECK(girth(fixtures::path_graph(5)) == std::nullopt);
  CHECK(girth(cycle_graph(6)) == 6);
  for (const auto& item : fixtures::small_corpus()) {
    const std::string& name = item.first;
    const Graph& g = item.second;
    CAPTURE(name);
    CHECK(girth(g) == oracle::girth_ref(g));
  }
}

TEST_CASE("min_cycle_through_edge") {
  Graph pr3 = prism(3);
  CHECK(min_cycle_through_edge(pr3, 0, 1) == 3);   // triangle edge
  CHECK(min_cycle_through_edge(pr3, 0, 3) == 4);   // spoke
  Graph bridge = fixtures::path_graph(3);
  CHECK(min_cycle_through_edge(bridge, 0, 1) == std::nullopt);
  CHECK_THROWS_AS(min_cycle_through_edge(pr3, 0, 4) && false, std::invalid_argument);
}

TEST_CASE("girth equals the minimum over edges of min_cycle_through_edge") {
  for (const auto& item : fixtures::small_corpus()) {
    const std::string& name = item.first;
    const Graph& g = item.second;
    CAPTURE(name);
    std::optional<int> best;
    for (auto [u, w] : g.edges()) {
      auto c = min_cycle_through_edge(g, u, w);
      if (c && (!best || *c < *best)) best = c;
    }
    CHECK(girth(g) == best);
  }
}

TEST_CASE("basic_props") {
  auto p1 = basic_props(complete_graph(4));
  CHECK(p1.connected);
  CHECK(p1.regular_degree == 3);
  auto p2 = basic_props(fixtures::disjoint_union(cycle_graph(3), cycle_graph(3)));
  CHECK_FALSE(p2.connected);
  CHECK(p2.regular_degree == 2);
  auto p3 = basic_props(fixtures::star(3));
  CHECK(p3.connected);
  CHECK_FALSE(p3.regular_degree.has_value());
}

TEST_CASE("family invariants: order, size, degrees, girth") {
  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    Graph pr = prism(n);
    CHECK(pr.order() == 2 * n);
    CHECK(pr.edge_count() == 3 * n);
    CHECK(basic_props(pr).regular_degree == 3);
    CHECK(girth(pr) == std::min(n, 4));

    Graph ml = moebius_ladder(n);
    CHECK(ml.order() == 2 * n);
    CHECK(ml.edge_count() == 3 * n);
    CHECK(basic_props(ml).regular_degree == 3);
    CHECK(girth(ml) == 4);
  }
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    Graph gp = generalized_prism(n);
    CHECK(gp.order() == 4 * n);
    CHECK(gp.edge_count() == 6 * n);
    CHECK(basic_props(gp).regular_degree == 3);
    CHECK(girth(gp) == 4);
  }
  CHECK(girth(prism(3)) == 3);
  Graph pet = petersen();
  CHECK(pet.order() == 10);
  CHECK(basic_props(pet).regular_degree == 3);
  Graph dod = dodecahedron();
  CHECK(dod.order() == 20);
  CHECK(basic_props(dod).regular_degree == 3);
  CHECK(girth(dod) == 5);
}

TEST_CASE("make_family dispatch and parameter validation") {
  CHECK(make_family({"cycle", {6}}).order() == 6);
  CHECK(make_family({"complete_bipartite", {3, 3}}).edge_count() == 9);
  CHECK(make_family({"petersen", {}}).order() == 10);
  CHECK(make_family({"cayley_cyclic", {6, 1}}) == cycle_graph(6));
  CHECK_THROWS_AS(make_family({"prism", {2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family({"gen_prism", {1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family({"moebius", {2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family({"nosuch", {1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_family({"cayley_cyclic", {6, 6}}), std::invalid_argument);
}

TEST_CASE("moebius ladder is the circulant Cay(Z_2n; {+-1, n})") {
  CHECK(moebius_ladder(4) == cayley_cyclic(8, {1, 4}));
  CHECK(moebius_ladder(5) == cayley_cyclic(10, {1, 5}));
}

TEST_CASE("apply_perm relabels edges") {
  Graph g = fixtures::path_graph(3);
  Perm p = parse_perm("(1 3)", 3);
  Graph h = apply_perm(g, p);
  CHECK(h.has_edge(2, 1));
  CHECK(h.has_edge(0, 1));
  CHECK_FALSE(h.has_edge(0, 2));
}
TEST_CASE("graph6 n=0") { Graph g(0); CHECK(encode_graph6(g) == "?"); CHECK(decode_graph6("?").order() == 0); }
