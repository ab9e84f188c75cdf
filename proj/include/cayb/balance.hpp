#pragma once

#include <string>
#include <vector>

#include "cayb/metric.hpp"
#include "json.hpp"

namespace cayb {

// W-set sizes for one vertex pair. Equidistant vertices belong to neither
// W set (the definition uses strict <); they are counted separately.
struct PairBalance {
  int x = 0;
  int y = 0;
  int ell = 0;  // d(x, y)
  int w_xy = 0;
  int w_yx = 0;
  int equidistant = 0;

  bool balanced() const { return w_xy == w_yx; }
};

PairBalance w_set_sizes(const DistanceMatrix& d, int x, int y);

struct EllVerdict {
  int ell = 0;
  bool balanced = true;
  long pair_count = 0;        // pairs at distance exactly ell
  long unbalanced_pairs = 0;  // total, not capped
  std::vector<PairBalance> witnesses;  // up to cap, ordered by (x, y)
};

struct BalanceProfile {
  std::vector<EllVerdict> per_ell;  // index 0 holds ell = 1
  bool highly_distance_balanced = true;
};

constexpr int kDefaultWitnessCap = 16;
constexpr int kUnlimitedWitnesses = -1;

// Verdict for a single ell in [1, diameter].
EllVerdict is_ell_balanced(const DistanceMatrix& d, int ell,
                           int witness_cap = kDefaultWitnessCap);

// One verdict per ell in [1, diameter]; requires a connected graph.
BalanceProfile full_profile(const DistanceMatrix& d,
                            int witness_cap = kDefaultWitnessCap,
                            int jobs = 1);

// Sum over edges uv of | |W_uv| - |W_vu| |; zero iff 1-distance-balanced.
long mostar_index(const std::vector<std::vector<int>>& adjacency,
                  const DistanceMatrix& d);
long mostar_index(const CayleyGraph& graph, const DistanceMatrix& d);

nlohmann::json profile_to_json(const CayleyGraph& graph,
                               const BalanceProfile& profile);
// One row per ell: ell,pairs,unbalanced_pairs,balanced.
std::string profile_to_csv(const BalanceProfile& profile);
std::string profile_to_text(const CayleyGraph& graph,
                            const BalanceProfile& profile);

}  // namespace cayb
