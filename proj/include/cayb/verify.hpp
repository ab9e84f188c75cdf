#pragma once

#include <string>
#include <vector>

#include "cayb/balance.hpp"
#include "cayb/cayley.hpp"
#include "json.hpp"

namespace cayb {

struct SweepFailure {
  std::string params;
  std::string witness;
};

struct SweepReport {
  std::string name;
  std::string ranges;
  long cases_run = 0;
  std::vector<SweepFailure> failures;
  double elapsed_s = 0.0;

  bool pass() const { return failures.empty(); }
};

// elapsed_s is omitted unless include_elapsed; byte-identical reruns need
// timing-free output.
nlohmann::json report_to_json(const SweepReport& report,
                              bool include_elapsed = false);

// Lemma identities: (a^i)^{-1} = a^{n-i}, (ba^i)^{-1} = ba^i, ba^i b = a^{-i},
// exhaustively for all i, 1 <= n <= max_n.
SweepReport check_lemma_identities(int max_n = 128);

// Closed-form adjacency rules vs. the generic Cayley construction, for every
// vertex of both cubic families, 3 <= n <= max_n.
SweepReport check_adjacency_oracle(int max_n = 64, int jobs = 1);

// Cay(D_n; {a, a^{n-1}, ba^r}) is highly distance-balanced for all r.
SweepReport check_theorem_1(int min_n, int max_n, int jobs = 1);

// Cay(D_n; {a^k, a^{n-k}, ba^t}) is highly distance-balanced for all
// admissible (k, t): 1 <= k < n/2, gcd(k, n) = 1.
SweepReport check_theorem_2(int min_n, int max_n, int jobs = 1);

// theta(a^i) = a^{ik}, theta(ba^i) = ba^{ik} is a full isomorphism between
// the S1(r = k^{-1} t) and S2(k, t) graphs.
SweepReport check_isomorphism_theta(int n, int k, int t);
SweepReport check_isomorphism_theta_sweep(int min_n, int max_n, int jobs = 1);

// Case-4 claims, both biconditionals, for every i in [n]_0.
// Throws OutOfCaseError when s is in {r, r-1, r+1} mod n.
SweepReport check_claims_AB(int n, int r, int s);
SweepReport check_claims_AB_sweep(int min_n, int max_n, int jobs = 1);

// Rotation-pair balance plus its decomposition into the two induced cycles.
SweepReport check_claim1_cycle_reduction(int n, int r, int s);
SweepReport check_claim1_sweep(int min_n, int max_n, int jobs = 1);

// Exact W sets at s = r (all of V1 / V2) and the half-window deletions at
// s = r -/+ 1, even and odd n variants, exponents reduced mod n.
SweepReport check_cases_123(int n, int r);
SweepReport check_cases_123_sweep(int min_n, int max_n, int jobs = 1);

// The three fixed fixtures: D_9, A_4, S_4 with their published profiles.
SweepReport check_named_examples();

// Random circulant graphs, all expected highly distance-balanced.
SweepReport check_abelian_highly_db(int max_n = 40, int sample_count = 50,
                                    std::uint64_t seed = 0x5eedULL);

struct VerifyOptions {
  int min_n = 3;
  int max_n = 64;
  int iso_max_n = 40;
  int lemma_max_n = 128;
  int abelian_max_n = 40;
  int abelian_samples = 50;
  std::uint64_t abelian_seed = 0x5eedULL;
  int jobs = 1;
  std::vector<std::string> only;  // empty = every check
};

// All checks, in a fixed order; `only` filters by check name.
std::vector<SweepReport> run_all_checks(const VerifyOptions& opts);

std::string render_report_table(const std::vector<SweepReport>& reports,
                                int max_failures_shown = 8);

}  // namespace cayb
