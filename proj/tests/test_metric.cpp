#include <random>

#include "cayb/metric.hpp"
#include "cayb/parse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cayb;

namespace {

CayleyGraph k4() {
  auto z4 = FiniteGroup::cyclic(4);
  return build_cayley(z4, {1, 2, 3});
}

CayleyGraph c6() {
  auto z6 = FiniteGroup::cyclic(6);
  return build_cayley(z6, {1, 5});
}

}  // namespace

TEST_CASE("bfs on K_4") {
  auto g = k4();
  for (int src = 0; src < 4; ++src) {
    auto row = bfs_from(g, src);
    int zeros = 0, ones = 0;
    for (auto v : row) (v == 0 ? zeros : ones) += 1;
    CHECK(zeros == 1);
    CHECK(ones == 3);
  }
}

TEST_CASE("bfs on C_6") {
  auto row = bfs_from(c6(), 0);
  CHECK(row == std::vector<std::uint16_t>{0, 1, 2, 3, 2, 1});
}

TEST_CASE("BFS matches Floyd-Warshall") {
  std::vector<CayleyGraph> corpus;
  corpus.push_back(build_dihedral_s1(6, 2));
  corpus.push_back(build_dihedral_s2(7, 3, 5));
  corpus.push_back(build_dihedral_s1(64, 17));  // 128 vertices
  {
    auto d9 = FiniteGroup::dihedral(9);
    corpus.push_back(
        build_cayley(d9, parse_generators(d9, "a^3, a^6, b, b*a^2, b*a^3")));
  }
  {
    auto s4 = FiniteGroup::permutation_closure(
        parse_permutations("(1 2), (2 4), (1 2)(3 4)"));
    std::vector<int> idx;
    for (auto& p : parse_permutations("(1 2), (2 4), (1 2)(3 4)"))
      idx.push_back(s4.index_of(p));
    corpus.push_back(build_cayley(s4, idx));
  }
  for (const auto& g : corpus) {
    auto d = all_pairs(g, 4);
    auto fw = testing::floyd_warshall(g);
    for (int u = 0; u < g.num_vertices(); ++u)
      for (int v = 0; v < g.num_vertices(); ++v)
        CHECK(d.at(u, v) == fw[u][v]);
  }
}

TEST_CASE("diameters of the named graphs") {
  {
    auto d9 = FiniteGroup::dihedral(9);
    auto g =
        build_cayley(d9, parse_generators(d9, "a^3, a^6, b, b*a^2, b*a^3"));
    CHECK(all_pairs(g).diameter == 3);
  }
  {
    auto s4 = FiniteGroup::permutation_closure(
        parse_permutations("(1 2), (2 4), (1 2)(3 4)"));
    std::vector<int> idx;
    for (auto& p : parse_permutations("(1 2), (2 4), (1 2)(3 4)"))
      idx.push_back(s4.index_of(p));
    CHECK(all_pairs(build_cayley(s4, idx)).diameter == 4);
  }
  {
    auto c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
    CHECK(all_pairs(build_cayley(c2, {1})).diameter == 1);
  }
}

TEST_CASE("distance matrix basics") {
  auto g = build_dihedral_s1(10, 3);
  auto d = all_pairs(g);
  CHECK(d.connected);
  for (int u = 0; u < d.n; ++u) {
    CHECK(d.at(u, u) == 0);
    for (int v = 0; v < d.n; ++v) {
      CHECK(d.at(u, v) == d.at(v, u));
      CHECK((d.at(u, v) == 1) == g.adjacent(u, v));
    }
  }
}

TEST_CASE("triangle inequality on random triples") {
  auto g = build_dihedral_s2(23, 5, 7);
  auto d = all_pairs(g);
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> pick(0, d.n - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    int u = pick(rng), v = pick(rng), w = pick(rng);
    CHECK(d.at(u, v) <= d.at(u, w) + d.at(w, v));
  }
}

TEST_CASE("vertex-transitive graphs have constant eccentricity") {
  for (int n : {5, 8, 13}) {
    for (int r = 0; r < n; ++r) {
      auto d = all_pairs(build_dihedral_s1(n, r));
      int ecc0 = 0;
      for (int v = 0; v < d.n; ++v) ecc0 = std::max<int>(ecc0, d.at(0, v));
      for (int u = 1; u < d.n; ++u) {
        int ecc = 0;
        for (int v = 0; v < d.n; ++v) ecc = std::max<int>(ecc, d.at(u, v));
        CHECK(ecc == ecc0);
      }
    }
  }
}

TEST_CASE("disconnected graphs are flagged, not fatal") {
  auto d6 = FiniteGroup::dihedral(6);
  auto g = build_cayley(d6, parse_generators(d6, "a^2, a^4, b"),
                        /*strict=*/false);
  auto d = all_pairs(g);
  CHECK(!d.connected);
  CHECK(d.at(0, 1) == DistanceMatrix::kInf);
}

TEST_CASE("all_pairs is independent of the worker count") {
  auto g = build_dihedral_s2(31, 4, 9);
  CHECK(all_pairs(g, 1).d == all_pairs(g, 8).d);
}
