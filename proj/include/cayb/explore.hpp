#pragma once

#include <string>
#include <vector>

#include "cayb/cayley.hpp"
#include "json.hpp"

namespace cayb {

enum class Family { S1, S2, Half, Refl3, General };
enum class DedupeMode { None, Shift };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Families over dihedral groups:
//   S1(r)            {a, a^{n-1}, ba^r}
//   S2(k,t)          {a^k, a^{n-k}, ba^t}, 1 <= k < n/2, gcd(k,n)=1
//   Half(k1,k2)      {a^{n/2}, ba^{k1}, ba^{k2}}, even n only
//   Refl3(k1,k2,k3)  {ba^{k1}, ba^{k2}, ba^{k3}}, k1 < k2 < k3
//   General          every symmetric identity-free subset up to a size bound
struct FamilySpec {
  Family family = Family::S1;
  int n_min = 3;
  int n_max = 12;
  int general_max_size = 3;
  DedupeMode dedupe = DedupeMode::None;
};

struct EmittedSet {
  int n = 0;
  std::vector<int> gen_indices;  // sorted element indices in D_n
  std::string params;            // e.g. "r=2" or "k1=0,k2=3"
};

// Deterministic lexicographic emission for one n; duplicates under the
// reflection-shift automorphism b -> ba^c removed in Shift mode.
std::vector<EmittedSet> enumerate_family(const FamilySpec& spec, int n);

struct CensusRow {
  std::string family;
  int n = 0;
  std::string params;
  int order = 0;
  int diameter = 0;        // per-component diameter when disconnected
  std::string pattern;     // per-ell verdicts, or "disconnected"
  bool highly = false;
  bool generates = true;
  int subgroup_order = 0;
};

// One row per emitted graph across spec's n range, in emission order.
std::vector<CensusRow> census(const FamilySpec& spec, int jobs = 1);

// Stable column order: family,n,params,order,diameter,verdict_pattern,highly
std::string census_to_csv(const std::vector<CensusRow>& rows);
nlohmann::json census_to_json(const std::vector<CensusRow>& rows);

}  // namespace cayb
