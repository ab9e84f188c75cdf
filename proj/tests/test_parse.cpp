#include "cayb/parse.hpp"
#include "doctest.h"

using namespace cayb;

TEST_CASE("dihedral generator expressions") {
  auto g = FiniteGroup::dihedral(6);
  auto idx = parse_generators(g, "a, a^5, b*a^2");
  CHECK(idx == std::vector<int>{1, 5, 8});

  CHECK(parse_generators(g, "1") == std::vector<int>{0});
  CHECK(parse_generators(g, "b") == std::vector<int>{6});
  // whitespace-insensitive
  CHECK(parse_generators(g, "  b * a ^ 3 ") == std::vector<int>{9});
  // exponents reduced mod n on read, negatives included
  CHECK(parse_generators(g, "a^7") == std::vector<int>{1});
  CHECK(parse_generators(g, "a^-1") == std::vector<int>{5});
}

TEST_CASE("dihedral parse errors cite byte offsets") {
  auto g = FiniteGroup::dihedral(6);
  CHECK_THROWS_AS(parse_generators(g, "a^"), ParseError);
  CHECK_THROWS_AS(parse_generators(g, "c"), ParseError);
  CHECK_THROWS_AS(parse_generators(g, "a, , b"), ParseError);
  CHECK_THROWS_AS(parse_generators(g, "ba^2"), ParseError);  // needs b*a^2
  try {
    parse_generators(g, "a, x^2");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
  }
}

TEST_CASE("cycle notation") {
  auto perms = parse_permutations("(1 2 3), (1 3 2), (1 2)(3 4)");
  REQUIRE(perms.size() == 3);
  // all padded to the common domain {0..3}
  for (const auto& p : perms) CHECK(p.degree() == 4);
  CHECK(perms[0].images == std::vector<int>{1, 2, 0, 3});
  CHECK(perms[1].images == std::vector<int>{2, 0, 1, 3});
  CHECK(perms[2].images == std::vector<int>{1, 0, 3, 2});
  CHECK(perms[0].compose(perms[1]).is_identity());
}

TEST_CASE("cycle notation with commas inside cycles") {
  auto perms = parse_permutations("(1,2,3)(4,5)");
  REQUIRE(perms.size() == 1);
  CHECK(perms[0].cycle_string() == "(1 2 3)(4 5)");
}

TEST_CASE("cycle parse errors") {
  CHECK_THROWS_AS(parse_permutations("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_permutations("(1)"), ParseError);
  CHECK_THROWS_AS(parse_permutations("(0 1)"), ParseError);
  CHECK_THROWS_AS(parse_permutations("(1 2)(2 3)"), ParseError);
}

TEST_CASE("cyclic groups reject reflection tokens") {
  auto g = FiniteGroup::cyclic(6);
  CHECK(parse_generators(g, "a, a^5") == std::vector<int>{1, 5});
  CHECK_THROWS_AS(parse_generators(g, "b*a^2"), ParseError);
}

TEST_CASE("table groups take element indices") {
  std::vector<std::vector<int>> z2 = {{0, 1}, {1, 0}};
  auto g = FiniteGroup::from_table(z2);
  CHECK(parse_generators(g, "1") == std::vector<int>{1});
  CHECK_THROWS_AS(parse_generators(g, "5"), ParseError);
}
