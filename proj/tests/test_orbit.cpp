#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "gtrunc/autgroup.hpp"
#include "gtrunc/builtin_groups.hpp"
#include "gtrunc/classify.hpp"
#include "gtrunc/families.hpp"
#include "gtrunc/graph6.hpp"
#include "gtrunc/orbit_construction.hpp"

using namespace gtrunc;

namespace {

PermGroup sym_n(int n) {
  std::vector<Perm> gens;
  gens.push_back(parse_perm("(1 2)", n));
  std::string big = "(";
  for (int i = 1; i <= n; ++i) big += (i > 1 ? " " : "") + std::to_string(i);
  big += ")";
  gens.push_back(parse_perm(big, n));
  return PermGroup::from_generators(gens, n);
}

}  // namespace

TEST_CASE("selection counts for C_{n-1} targets") {
  CHECK(orbit_unions_matching(complete_graph(5), builtin_group(BuiltinKind::AGL1, 5), 0,
                              cycle_graph(4))
            .size() == 1);
  CHECK(orbit_unions_matching(complete_graph(6), builtin_group(BuiltinKind::PSL2, 5), 0,
                              cycle_graph(5))
            .size() == 2);
  // the symmetric group's stabilizer has a single pair orbit
  CHECK(orbit_unions_matching(complete_graph(7), sym_n(7), 0, cycle_graph(6)).empty());
}

TEST_CASE("K5 orbit truncation: 20 vertices, girth 4, vertex-transitive") {
  Graph k5 = complete_graph(5);
  PermGroup agl = builtin_group(BuiltinKind::AGL1, 5);
  auto sels = orbit_unions_matching(k5, agl, 0, cycle_graph(4));
  REQUIRE(sels.size() == 1);
  Truncation t = orbit_truncation(k5, agl, sels[0]);
  CHECK(t.result.order() == 20);
  CHECK(girth(t.result) == 4);
  CHECK(basic_props(t.result).regular_degree == 3);
  CHECK(is_vertex_transitive(t.result));
  CHECK(automorphism_group(t.result).order() == 20);
}

TEST_CASE("K4 with all pairs gives the truncated tetrahedron") {
  Graph k4 = complete_graph(4);
  PermGroup s4 = sym_n(4);
  auto sels = orbit_unions_matching(k4, s4, 0, cycle_graph(3));
  REQUIRE(sels.size() == 1);  // all pairs form one orbit and C3 = K3
  Truncation t = orbit_truncation(k4, s4, sels[0]);
  Truncation direct = truncate(k4, random_labeling(k4, 1), cycle_graph(3));
  CHECK(are_isomorphic(t.result, direct.result).has_value());
}

TEST_CASE("representative independence: rho built from transversals is a valid labeling") {
  Graph k6 = complete_graph(6);
  PermGroup psl = builtin_group(BuiltinKind::PSL2, 5);
  auto sels = orbit_unions_matching(k6, psl, 0, cycle_graph(5));
  REQUIRE(sels.size() == 2);
  for (const auto& sel : sels) {
    Truncation t = orbit_truncation(k6, psl, sel);
    CHECK(t.result.order() == 30);
    CHECK(girth(t.result) == 5);
    CHECK(is_vertex_transitive(t.result));
    CHECK(automorphism_group(t.result).order() == 60);
  }
}

TEST_CASE("both K6 selections give the same truncation up to isomorphism") {
  Graph k6 = complete_graph(6);
  PermGroup psl = builtin_group(BuiltinKind::PSL2, 5);
  auto sels = orbit_unions_matching(k6, psl, 0, cycle_graph(5));
  REQUIRE(sels.size() == 2);
  Truncation a = orbit_truncation(k6, psl, sels[0]);
  Truncation b = orbit_truncation(k6, psl, sels[1]);
  CHECK(are_isomorphic(a.result, b.result).has_value());
}

TEST_CASE("candidate groups per n") {
  auto c5 = candidate_groups(5);
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].name == "AGL(1,5)");
  CHECK(c5[0].group.order() == 20);

  auto c6 = candidate_groups(6);
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].name == "PSL(2,5)");
  CHECK(c6[0].group.order() == 60);

  CHECK(candidate_groups(10).empty());
  CHECK(candidate_groups(12).empty());
  CHECK(candidate_groups(14).empty());
  CHECK(candidate_groups(15).empty());

  auto c4 = candidate_groups(4);
  CHECK(c4.size() == 3);  // AGL1(4), PSL2(3), PGL2(3)

  auto c7 = candidate_groups(7);
  REQUIRE(c7.size() == 1);
  CHECK(c7[0].name == "AGL(1,7)");
}

TEST_CASE("user-supplied groups are filtered like builtins") {
  std::vector<CandidateGroup> extra;
  extra.push_back({"user:sym5", sym_n(5)});  // order 120, rejected
  extra.push_back({"user:agl5", builtin_group(BuiltinKind::AGL1, 5)});
  auto cands = candidate_groups(5, extra);
  CHECK(cands.size() == 2);  // builtin AGL1(5) plus the user copy
}

TEST_CASE("lift criterion") {
  Graph k5 = complete_graph(5);
  PermGroup agl = builtin_group(BuiltinKind::AGL1, 5);
  auto sels = orbit_unions_matching(k5, agl, 0, cycle_graph(4));
  REQUIRE(sels.size() == 1);
  const auto& sel = sels[0];

  // elements of G itself always lift
  for (const auto& g : agl.generators()) CHECK(lift_criterion(k5, agl, sel, g));
  // a transposition does not
  CHECK_FALSE(lift_criterion(k5, agl, sel, parse_perm("(1 2)", 5)));
  // the full pair set is invariant under everything
  OrbitSelection all;
  all.v = 0;
  for (int a = 1; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) all.pairs.emplace_back(a, b);
  CHECK(lift_criterion(k5, agl, all, parse_perm("(1 2)", 5)));
  CHECK_THROWS_AS(lift_criterion(k5, agl, sel, parse_perm("(1 2)", 4)) && true,
                  std::invalid_argument);
}

TEST_CASE("lift criterion agrees with the lift test on the constructed truncation") {
  Graph k5 = complete_graph(5);
  PermGroup agl = builtin_group(BuiltinKind::AGL1, 5);
  auto sels = orbit_unions_matching(k5, agl, 0, cycle_graph(4));
  Truncation t = orbit_truncation(k5, agl, sels[0]);
  PermGroup s5 = sym_n(5);
  s5.for_each_element([&](const Perm& h) {
    CHECK(lift_criterion(k5, agl, sels[0], h) == lift(t, h).has_value());
  });
}

TEST_CASE("table row for n = 5") {
  auto rows = enumerate_table(5, 5);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 5);
  CHECK(rows[0].order == 20);
  CHECK(rows[0].girth == 4);
  CHECK(rows[0].aut_order == 20);
  CHECK(rows[0].aut_equals_lift);
  CHECK(rows[0].group == "AGL(1,5)");
}

TEST_CASE("table rows for n = 4 merge producers and keep the largest lift") {
  auto rows = enumerate_table(4, 4);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].order == 12);
  CHECK(rows[0].girth == 3);
  CHECK(rows[0].aut_order == 24);
  CHECK(rows[0].aut_equals_lift);  // PGL(2,3) provides the order-24 lift
  CHECK(rows[0].group_order == 24);
}

TEST_CASE("table rows are deterministic and audit clean") {
  auto rows = enumerate_table(4, 7);
  auto rows2 = enumerate_table(4, 7);
  REQUIRE(rows.size() == rows2.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].canonical == rows2[i].canonical);
    CHECK(rows[i].n * (rows[i].n - 1) == rows[i].order);
  }
  // canonical strings are pairwise distinct
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j) CHECK(rows[i].canonical != rows[j].canonical);
}

TEST_CASE("emitted rows decompose back to the complete base") {
  for (const auto& row : enumerate_table(4, 6)) {
    Graph g = decode_graph6(row.canonical);
    auto dec = truncation_decomposition(g, row.n - 1);
    REQUIRE(dec.has_value());
    CHECK(are_isomorphic(dec->quotient, complete_graph(row.n)).has_value());
    CHECK(are_isomorphic(dec->inserted, cycle_graph(row.n - 1)).has_value());
  }
}

TEST_CASE("parallel enumeration matches the single-threaded result") {
  auto rows1 = enumerate_table(4, 8, false, {}, 1);
  auto rows4 = enumerate_table(4, 8, false, {}, 4);
  REQUIRE(rows1.size() == rows4.size());
  for (size_t i = 0; i < rows1.size(); ++i) {
    CHECK(rows1[i].canonical == rows4[i].canonical);
    CHECK(rows1[i].aut_order == rows4[i].aut_order);
    CHECK(rows1[i].group == rows4[i].group);
  }
}

TEST_CASE("n = 16 is skipped by default and enumerable on request") {
  CHECK(enumerate_table(16, 16).empty());
  auto rows = enumerate_table(16, 16, true);
  CHECK_FALSE(rows.empty());
  for (const auto& r : rows) CHECK(r.order == 240);
}
