#include <algorithm>
#include <numeric>
#include <random>

#include "cayb/cayley.hpp"
#include "cayb/parse.hpp"
#include "doctest.h"

using namespace cayb;

TEST_CASE("generating set validation") {
  auto d6 = FiniteGroup::dihedral(6);

  auto s = validate_generating_set(d6, parse_generators(d6, "a, a^5, b*a^2"));
  CHECK(s.generates);
  CHECK(s.elements == std::vector<int>{1, 5, 8});

  CHECK_THROWS_AS(
      validate_generating_set(d6, parse_generators(d6, "a^2")),
      NotSymmetricError);
  CHECK_THROWS_AS(
      validate_generating_set(d6, parse_generators(d6, "1, a, a^5")),
      InvalidSetError);

  try {
    validate_generating_set(d6, parse_generators(d6, "a^2, a^4, b"));
    CHECK(false);
  } catch (const NotGeneratingError& e) {
    CHECK(e.subgroup_order == 6);
  }

  // permissive mode keeps the set and reports the subgroup order
  auto sub = validate_generating_set(
      d6, parse_generators(d6, "a^2, a^4, b"), /*strict=*/false);
  CHECK(!sub.generates);
  CHECK(sub.subgroup_order == 6);
}

TEST_CASE("Cay(D_6; {a, a^5, ba^2})") {
  auto graph = build_dihedral_s1(6, 2);
  CHECK(graph.num_vertices() == 12);
  CHECK(graph.num_edges() == 18);
  CHECK(graph.degree() == 3);
  CHECK(graph.connected());
  for (int v = 0; v < 12; ++v)
    CHECK(graph.neighbors(v).size() == 3);
}

TEST_CASE("Cay(D_9; {a^3, a^6, b, ba^2, ba^3})") {
  auto d9 = FiniteGroup::dihedral(9);
  auto graph =
      build_cayley(d9, parse_generators(d9, "a^3, a^6, b, b*a^2, b*a^3"));
  CHECK(graph.num_vertices() == 18);
  CHECK(graph.degree() == 5);
  for (int v = 0; v < 18; ++v)
    CHECK(graph.neighbors(v).size() == 5);
}

TEST_CASE("K_2 from a table-backed C_2") {
  auto c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  auto graph = build_cayley(c2, {1});
  CHECK(graph.num_vertices() == 2);
  CHECK(graph.num_edges() == 1);
}

TEST_CASE("edge rule g^{-1}h in S") {
  auto graph = build_dihedral_s1(7, 3);
  const auto& g = graph.group();
  for (int u = 0; u < graph.num_vertices(); ++u)
    for (int v = 0; v < graph.num_vertices(); ++v) {
      bool in_s = std::binary_search(graph.gens().elements.begin(),
                                     graph.gens().elements.end(),
                                     g.mul(g.inverse(u), v));
      CHECK(graph.adjacent(u, v) == in_s);
    }
}

TEST_CASE("adjacency oracle fixed examples") {
  // S1, n=6, r=2: a^0 ~ {a^5, a^1, ba^2}
  CHECK(dihedral_adjacency_oracle(OracleKind::S1, 6, 2, 0, {0, 0}) ==
        std::vector<int>{1, 5, 8});
  // S1, n=6, r=2: ba^0 ~ {ba^5, ba^1, a^2}
  CHECK(dihedral_adjacency_oracle(OracleKind::S1, 6, 2, 0, {1, 0}) ==
        std::vector<int>{2, 7, 11});
  // S2, n=7, k=3, t=5: a^0 ~ {a^4, a^3, ba^5}
  CHECK(dihedral_adjacency_oracle(OracleKind::S2, 7, 5, 3, {0, 0}) ==
        std::vector<int>{3, 4, 12});
  CHECK_THROWS_AS(dihedral_adjacency_oracle(OracleKind::S2, 6, 1, 2, {0, 0}),
                  ParameterError);
}

TEST_CASE("oracle equals construction over a small sweep") {
  for (int n = 3; n <= 20; ++n) {
    for (int r = 0; r < n; ++r) {
      auto graph = build_dihedral_s1(n, r);
      for (int v = 0; v < 2 * n; ++v)
        CHECK(dihedral_adjacency_oracle(OracleKind::S1, n, r, 0,
                                        dihedral_at(v, n)) ==
              graph.neighbors(v));
    }
    for (int k = 1; 2 * k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      for (int t = 0; t < n; ++t) {
        auto graph = build_dihedral_s2(n, k, t);
        for (int v = 0; v < 2 * n; ++v)
          CHECK(dihedral_adjacency_oracle(OracleKind::S2, n, t, k,
                                          dihedral_at(v, n)) ==
                graph.neighbors(v));
      }
    }
  }
}

TEST_CASE("adjacency is symmetric") {
  auto d9 = FiniteGroup::dihedral(9);
  auto graph =
      build_cayley(d9, parse_generators(d9, "a^3, a^6, b, b*a^2, b*a^3"));
  for (int u = 0; u < graph.num_vertices(); ++u)
    for (int v : graph.neighbors(u)) CHECK(graph.adjacent(v, u));
}

TEST_CASE("left translation maps edges to edges") {
  std::mt19937 rng(3);
  auto graph = build_dihedral_s1(11, 4);
  const auto& g = graph.group();
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    int t = pick(rng);
    for (int u = 0; u < graph.num_vertices(); ++u)
      for (int v : graph.neighbors(u))
        CHECK(graph.adjacent(g.mul(t, u), g.mul(t, v)));
  }
}

TEST_CASE("strict mode rejects non-generating sets at build") {
  auto d6 = FiniteGroup::dihedral(6);
  CHECK_THROWS_AS(build_cayley(d6, parse_generators(d6, "a^2, a^4, b")),
                  NotGeneratingError);
  auto graph = build_cayley(d6, parse_generators(d6, "a^2, a^4, b"),
                            /*strict=*/false);
  CHECK(!graph.connected());
}

TEST_CASE("deterministic exports") {
  auto g1 = build_dihedral_s1(6, 2);
  auto g2 = build_dihedral_s1(6, 2);
  CHECK(g1.edge_list() == g2.edge_list());
  CHECK(g1.to_json() == g2.to_json());
  CHECK(g1.to_json()["labels"][8] == "ba^2");
}
