#include <numeric>

#include "cayb/metric.hpp"
#include "cayb/verify.hpp"
#include "doctest.h"

using namespace cayb;

TEST_CASE("lemma identity sweep") {
  auto rep = check_lemma_identities(64);
  CHECK(rep.pass());
  long expected = 0;
  for (int n = 1; n <= 64; ++n) expected += n;
  CHECK(rep.cases_run == expected);
}

TEST_CASE("theorem 1 at n = 6 and the smallest n") {
  auto rep6 = check_theorem_1(6, 6);
  CHECK(rep6.cases_run == 6);
  CHECK(rep6.pass());
  auto rep3 = check_theorem_1(3, 3);
  CHECK(rep3.pass());
}

TEST_CASE("theorem 1 sweep up to 24") {
  auto rep = check_theorem_1(3, 24, 4);
  CHECK(rep.pass());
  long expected = 0;
  for (int n = 3; n <= 24; ++n) expected += n;
  CHECK(rep.cases_run == expected);
}

TEST_CASE("theorem 2") {
  // the Fig.-style instance (n=7, k=3, t=5) and the k=1 degenerate case
  auto rep = check_theorem_2(7, 7);
  CHECK(rep.pass());
  auto sweep = check_theorem_2(3, 20, 4);
  CHECK(sweep.pass());
  long expected = 0;
  for (int n = 3; n <= 20; ++n)
    for (int k = 1; 2 * k < n; ++k)
      if (std::gcd(k, n) == 1) expected += n;
  CHECK(sweep.cases_run == expected);
}

TEST_CASE("isomorphism theta") {
  CHECK(check_isomorphism_theta(7, 3, 5).pass());
  CHECK(check_isomorphism_theta(5, 1, 2).pass());
  CHECK_THROWS_AS(check_isomorphism_theta(6, 2, 1), ParameterError);
  CHECK(check_isomorphism_theta_sweep(3, 16, 4).pass());
}

TEST_CASE("isomorphic pairs share the same balance profile") {
  int n = 11, k = 3, t = 7;
  CHECK(check_isomorphism_theta(n, k, t).pass());
  int r = mod_reduce(static_cast<long long>(mod_inverse(k, n)) * t, n);
  auto p1 = full_profile(all_pairs(build_dihedral_s1(n, r)), 0);
  auto p2 = full_profile(all_pairs(build_dihedral_s2(n, k, t)), 0);
  REQUIRE(p1.per_ell.size() == p2.per_ell.size());
  for (std::size_t e = 0; e < p1.per_ell.size(); ++e) {
    CHECK(p1.per_ell[e].balanced == p2.per_ell[e].balanced);
    CHECK(p1.per_ell[e].pair_count == p2.per_ell[e].pair_count);
  }
}

TEST_CASE("claims A and B") {
  CHECK(check_claims_AB(6, 2, 5).pass());
  auto rep = check_claims_AB(9, 0, 4);
  CHECK(rep.pass());
  CHECK(rep.cases_run == 9);
  CHECK_THROWS_AS(check_claims_AB(6, 2, 2), OutOfCaseError);
  CHECK_THROWS_AS(check_claims_AB(6, 2, 1), OutOfCaseError);
  CHECK_THROWS_AS(check_claims_AB(6, 2, 3), OutOfCaseError);
  CHECK_THROWS_AS(check_claims_AB(6, 0, 5), OutOfCaseError);  // r-1 mod n
}

TEST_CASE("claims A/B imply equal W sizes at reflection pairs") {
  int n = 9, r = 0, s = 4;
  CHECK(check_claims_AB(n, r, s).pass());
  auto d = all_pairs(build_dihedral_s1(n, r));
  auto pb = w_set_sizes(d, 0, n + s);
  CHECK(pb.w_xy == pb.w_yx);
}

TEST_CASE("claims A/B sweep with exact grid size") {
  auto rep = check_claims_AB_sweep(3, 16, 4);
  CHECK(rep.pass());
  long expected = 0;
  for (int n = 3; n <= 16; ++n) expected += static_cast<long>(n) * (n - 3) * n;
  CHECK(rep.cases_run == expected);
}

TEST_CASE("claim 1 cycle reduction") {
  CHECK(check_claim1_cycle_reduction(6, 2, 3).pass());
  CHECK(check_claim1_cycle_reduction(4, 0, 2).pass());
  CHECK_THROWS_AS(check_claim1_cycle_reduction(6, 2, 0), ParameterError);
  auto sweep = check_claim1_sweep(3, 16, 4);
  CHECK(sweep.pass());
  long expected = 0;
  for (int n = 3; n <= 16; ++n) expected += static_cast<long>(n) * (n - 1);
  CHECK(sweep.cases_run == expected);
}

TEST_CASE("cases 1-3 exact W sets") {
  CHECK(check_cases_123(6, 2).pass());
  CHECK(check_cases_123(7, 3).pass());
  auto sweep = check_cases_123_sweep(3, 16, 4);
  CHECK(sweep.pass());
}

TEST_CASE("case 2 removes the stated half-window") {
  // n=6, r=2, s=1: W_{1(ba^1)} = V_1 - {a, a^2, a^3}
  auto d = all_pairs(build_dihedral_s1(6, 2));
  int n = 6, s = 1;
  std::vector<int> w1;
  for (int v = 0; v < 2 * n; ++v)
    if (d.at(v, 0) < d.at(v, n + s)) w1.push_back(v);
  CHECK(w1 == std::vector<int>{0, 4, 5});  // {1, a^4, a^5}
}

TEST_CASE("case 3 removes the stated half-window (odd n)") {
  // n=7, r=3, s=4: W_{1(ba^4)} = V_1 - {a^6, a^5, a^4}
  auto d = all_pairs(build_dihedral_s1(7, 3));
  int n = 7, s = 4;
  std::vector<int> w1;
  for (int v = 0; v < 2 * n; ++v)
    if (d.at(v, 0) < d.at(v, n + s)) w1.push_back(v);
  CHECK(w1 == std::vector<int>{0, 1, 2, 3});  // {1, a, a^2, a^3}
}

TEST_CASE("named examples") {
  auto rep = check_named_examples();
  CHECK(rep.cases_run == 3);
  CHECK(rep.pass());
}

TEST_CASE("abelian circulant sweep") {
  auto rep = check_abelian_highly_db(24, 20, 123);
  CHECK(rep.cases_run == 20);
  CHECK(rep.pass());
}

TEST_CASE("run_all_checks honors the only-filter") {
  VerifyOptions opts;
  opts.max_n = 8;
  opts.iso_max_n = 8;
  opts.lemma_max_n = 16;
  opts.abelian_max_n = 12;
  opts.abelian_samples = 5;
  opts.only = {"named-examples", "lemma-identities"};
  auto reports = run_all_checks(opts);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].name == "lemma-identities");
  CHECK(reports[1].name == "named-examples");
  for (const auto& r : reports) CHECK(r.pass());
}

TEST_CASE("report json omits elapsed by default") {
  auto rep = check_named_examples();
  auto j = report_to_json(rep);
  CHECK(!j.contains("elapsed_s"));
  CHECK(report_to_json(rep, true).contains("elapsed_s"));
}
