#include "cayb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cayb/metric.hpp"
#include "cayb/parallel.hpp"
#include "cayb/parse.hpp"

namespace cayb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fn over every case index in parallel; failures are merged in case
// order so the report does not depend on the worker count.
template <class Fn>
void run_indexed(long case_count, int jobs, Fn&& fn, SweepReport& report) {
  std::vector<std::vector<SweepFailure>> slots(case_count);
  parallel_for(case_count, jobs, [&](long i) { slots[i] = fn(i); });
  for (auto& s : slots)
    report.failures.insert(report.failures.end(), s.begin(), s.end());
}

std::string fmt_params(std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ", ";
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

// Membership of vertex v in W_{xy} as computed from distances.
bool in_w(const DistanceMatrix& d, int v, int x, int y) {
  return d.at(v, x) < d.at(v, y);
}

std::string set_to_string(const CayleyGraph& g, const std::set<int>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ", ";
    os << g.label(v);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

nlohmann::json report_to_json(const SweepReport& report, bool include_elapsed) {
  nlohmann::json j;
  j["name"] = report.name;
  j["ranges"] = report.ranges;
  j["cases_run"] = report.cases_run;
  j["pass"] = report.pass();
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : report.failures)
    fails.push_back({{"params", f.params}, {"witness", f.witness}});
  j["failures"] = fails;
  if (include_elapsed) j["elapsed_s"] = report.elapsed_s;
  return j;
}

SweepReport check_lemma_identities(int max_n) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "lemma-identities";
  rep.ranges = "n in [1," + std::to_string(max_n) + "], i in [n]_0";
  for (int n = 1; n <= max_n; ++n) {
    FiniteGroup g = FiniteGroup::dihedral(n);
    for (int i = 0; i < n; ++i) {
      ++rep.cases_run;
      DihedralElement rot{0, i}, refl{1, i};
      DihedralElement b{1, 0};
      bool ok =
          dihedral_inverse(rot, n) == DihedralElement{0, mod_reduce(n - i, n)} &&
          dihedral_inverse(refl, n) == refl &&
          dihedral_mul(rot, dihedral_inverse(rot, n), n).is_identity() &&
          dihedral_mul(refl, refl, n).is_identity() &&
          dihedral_mul(dihedral_mul(b, rot, n), b, n) ==
              DihedralElement{0, conjugate_b(i, n)} &&
          g.inverse(g.index_of(rot)) ==
              g.index_of(DihedralElement{0, mod_reduce(n - i, n)});
      if (!ok)
        rep.failures.push_back({fmt_params({{"n", n}, {"i", i}}),
                                "dihedral identity violated"});
    }
  }
  rep.elapsed_s = seconds_since(start);
  return rep;
}

SweepReport check_adjacency_oracle(int max_n, int jobs) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "adjacency-oracle";
  rep.ranges =
      "n in [3," + std::to_string(max_n) + "], S1: all r; S2: all (k,t)";

  struct Case {
    OracleKind kind;
    int n, r_or_t, k;
  };
  std::vector<Case> cases;
  for (int n = 3; n <= max_n; ++n) {
    for (int r = 0; r < n; ++r) cases.push_back({OracleKind::S1, n, r, 0});
    for (int k = 1; 2 * k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      for (int t = 0; t < n; ++t) cases.push_back({OracleKind::S2, n, t, k});
    }
  }
  rep.cases_run = static_cast<long>(cases.size());

  run_indexed(
      static_cast<long>(cases.size()), jobs,
      [&](long idx) -> std::vector<SweepFailure> {
        const Case& c = cases[idx];
        CayleyGraph graph = c.kind == OracleKind::S1
                                ? build_dihedral_s1(c.n, c.r_or_t)
                                : build_dihedral_s2(c.n, c.k, c.r_or_t);
        for (int v = 0; v < graph.num_vertices(); ++v) {
          auto oracle = dihedral_adjacency_oracle(
              c.kind, c.n, c.r_or_t, c.k, dihedral_at(v, c.n));
          if (oracle != graph.neighbors(v)) {
            return {{fmt_params({{"n", c.n},
                                 {"r_or_t", c.r_or_t},
                                 {"k", c.k},
                                 {"vertex", v}}),
                     "oracle neighbors differ from built adjacency"}};
          }
        }
        return {};
      },
      rep);
  rep.elapsed_s = seconds_since(start);
  return rep;
}

namespace {

std::vector<SweepFailure> assert_highly(const CayleyGraph& graph,
                                        const std::string& params) {
  DistanceMatrix d = all_pairs(graph);
  BalanceProfile profile = full_profile(d, 1);
  std::vector<SweepFailure> out;
  for (const auto& v : profile.per_ell) {
    if (v.balanced) continue;
    const PairBalance& w = v.witnesses.front();
    std::ostringstream os;
    os << "ell=" << v.ell << " pair (" << graph.label(w.x) << ", "
       << graph.label(w.y) << ") |W_xy|=" << w.w_xy << " |W_yx|=" << w.w_yx;
    out.push_back({params, os.str()});
  }
  return out;
}

}  // namespace

SweepReport check_theorem_1(int min_n, int max_n, int jobs) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "theorem-1";
  rep.ranges = "n in [" + std::to_string(min_n) + "," + std::to_string(max_n) +
               "], r in [n]_0";
  std::vector<std::pair<int, int>> cases;
  for (int n = std::max(3, min_n); n <= max_n; ++n)
    for (int r = 0; r < n; ++r) cases.emplace_back(n, r);
  rep.cases_run = static_cast<long>(cases.size());
  run_indexed(
      static_cast<long>(cases.size()), jobs,
      [&](long idx) {
        auto [n, r] = cases[idx];
        return assert_highly(build_dihedral_s1(n, r),
                             fmt_params({{"n", n}, {"r", r}}));
      },
      rep);
  rep.elapsed_s = seconds_since(start);
  return rep;
}

SweepReport check_theorem_2(int min_n, int max_n, int jobs) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "theorem-2";
  rep.ranges = "n in [" + std::to_string(min_n) + "," + std::to_string(max_n) +
               "], 1<=k<n/2 with gcd(k,n)=1, t in [n]_0";
  struct Case {
    int n, k, t;
  };
  std::vector<Case> cases;
  for (int n = std::max(3, min_n); n <= max_n; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      for (int t = 0; t < n; ++t) cases.push_back({n, k, t});
    }
  rep.cases_run = static_cast<long>(cases.size());
  run_indexed(
      static_cast<long>(cases.size()), jobs,
      [&](long idx) {
        const Case& c = cases[idx];
        return assert_highly(
            build_dihedral_s2(c.n, c.k, c.t),
            fmt_params({{"n", c.n}, {"k", c.k}, {"t", c.t}}));
      },
      rep);
  rep.elapsed_s = seconds_since(start);
  return rep;
}

namespace {

std::vector<SweepFailure> isomorphism_failures(int n, int k, int t) {
  int r = mod_reduce(static_cast<long long>(mod_inverse(k, n)) * t, n);
  std::string params = fmt_params({{"n", n}, {"k", k}, {"t", t}, {"r", r}});
  std::vector<SweepFailure> out;

  // t = kr (mod n): the Lemma form b(a^k)^r and the Theorem form ba^t agree
  if (mod_reduce(static_cast<long long>(k) * r, n) != t) {
    out.push_back({params, "t != k*r mod n"});
    return out;
  }

  CayleyGraph g1 = build_dihedral_s1(n, r);
  CayleyGraph g2 = build_dihedral_s2(n, k, t);

  // theta over vertex indices
  std::vector<int> theta(2 * n);
  for (int i = 0; i < n; ++i) {
    int ik = mod_reduce(static_cast<long long>(i) * k, n);
    theta[i] = ik;
    theta[n + i] = n + ik;
  }
  std::vector<bool> hit(2 * n, false);
  for (int v : theta) {
    if (hit[v]) {
      out.push_back({params, "theta is not a bijection"});
      return out;
    }
    hit[v] = true;
  }
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u + 1; v < 2 * n; ++v)
      if (g1.adjacent(u, v) != g2.adjacent(theta[u], theta[v])) {
        std::ostringstream os;
        os << "edge/non-edge mismatch at (" << g1.label(u) << ", "
           << g1.label(v) << ")";
        out.push_back({params, os.str()});
        return out;
      }
  return out;
}

}  // namespace

SweepReport check_isomorphism_theta(int n, int k, int t) {
  auto start = Clock::now();
  if (std::gcd(k, n) != 1)
    throw ParameterError("check_isomorphism_theta requires gcd(k,n)=1");
  SweepReport rep;
  rep.name = "isomorphism-theta";
  rep.ranges = fmt_params({{"n", n}, {"k", k}, {"t", t}});
  rep.cases_run = 1;
  rep.failures = isomorphism_failures(n, k, t);
  rep.elapsed_s = seconds_since(start);
  return rep;
}

SweepReport check_isomorphism_theta_sweep(int min_n, int max_n, int jobs) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "isomorphism-theta";
  rep.ranges = "n in [" + std::to_string(min_n) + "," + std::to_string(max_n) +
               "], admissible (k,t)";
  struct Case {
    int n, k, t;
  };
  std::vector<Case> cases;
  for (int n = std::max(3, min_n); n <= max_n; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      for (int t = 0; t < n; ++t) cases.push_back({n, k, t});
    }
  rep.cases_run = static_cast<long>(cases.size());
  run_indexed(
      static_cast<long>(cases.size()), jobs,
      [&](long idx) {
        const Case& c = cases[idx];
        return isomorphism_failures(c.n, c.k, c.t);
      },
      rep);
  rep.elapsed_s = seconds_since(start);
  return rep;
}

namespace {

// Both Case-4 claims for one (n, r, s, i), given distances of the S1 graph.
// Identity vertex is 0; ba^j is vertex n + j.
std::vector<SweepFailure> claims_ab_failures(const DistanceMatrix& d, int n,
                                             int r, int s, int i) {
  int v_id = 0;
  int v_bas = n + s;
  int v_ai = i;
  int v_basi = n + mod_reduce(s + i, n);
  std::vector<SweepFailure> out;
  // Claim A: a^i in W_{1(ba^s)}  <=>  ba^{s+i} in W_{(ba^s)1}
  bool lhs_a = in_w(d, v_ai, v_id, v_bas);
  bool rhs_a = in_w(d, v_basi, v_bas, v_id);
  if (lhs_a != rhs_a)
    out.push_back({fmt_params({{"n", n}, {"r", r}, {"s", s}, {"i", i}}),
                   std::string("Claim A fails: lhs=") + (lhs_a ? "T" : "F") +
                       " rhs=" + (rhs_a ? "T" : "F")});
  // Claim B: a^i in W_{(ba^s)1}  <=>  ba^{s+i} in W_{1(ba^s)}
  bool lhs_b = in_w(d, v_ai, v_bas, v_id);
  bool rhs_b = in_w(d, v_basi, v_id, v_bas);
  if (lhs_b != rhs_b)
    out.push_back({fmt_params({{"n", n}, {"r", r}, {"s", s}, {"i", i}}),
                   std::string("Claim B fails: lhs=") + (lhs_b ? "T" : "F") +
                       " rhs=" + (rhs_b ? "T" : "F")});
  return out;
}

bool s_out_of_case4(int n, int r, int s) {
  return s == r || s == mod_reduce(r - 1, n) || s == mod_reduce(r + 1, n);
}

}  // namespace

SweepReport check_claims_AB(int n, int r, int s) {
  auto start = Clock::now();
  if (s_out_of_case4(n, r, s))
    throw OutOfCaseError("s in {r, r-1, r+1} mod n belongs to Cases 1-3");
  SweepReport rep;
  rep.name = "claims-ab";
  rep.ranges = fmt_params({{"n", n}, {"r", r}, {"s", s}}) + ", i in [n]_0";
  rep.cases_run = n;
  CayleyGraph graph = build_dihedral_s1(n, r);
  DistanceMatrix d = all_pairs(graph);
  for (int i = 0; i < n; ++i) {
    auto fails = claims_ab_failures(d, n, r, s, i);
    rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
  }
  rep.elapsed_s = seconds_since(start);
  return rep;
}

SweepReport check_claims_AB_sweep(int min_n, int max_n, int jobs) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "claims-ab";
  rep.ranges = "n in [" + std::to_string(min_n) + "," + std::to_string(max_n) +
               "], all r, s not in {r,r-1,r+1}, i in [n]_0";
  std::vector<std::pair<int, int>> graphs;  // (n, r)
  for (int n = std::max(3, min_n); n <= max_n; ++n)
    for (int r = 0; r < n; ++r) graphs.emplace_back(n, r);

  std::vector<long> counts(graphs.size(), 0);
  std::vector<std::vector<SweepFailure>> slots(graphs.size());
  parallel_for(static_cast<long>(graphs.size()), jobs, [&](long idx) {
    auto [n, r] = graphs[idx];
    CayleyGraph graph = build_dihedral_s1(n, r);
    DistanceMatrix d = all_pairs(graph);
    for (int s = 0; s < n; ++s) {
      if (s_out_of_case4(n, r, s)) continue;
      for (int i = 0; i < n; ++i) {
        ++counts[idx];
        auto fails = claims_ab_failures(d, n, r, s, i);
        slots[idx].insert(slots[idx].end(), fails.begin(), fails.end());
      }
    }
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    rep.cases_run += counts[i];
    rep.failures.insert(rep.failures.end(), slots[i].begin(), slots[i].end());
  }
  rep.elapsed_s = seconds_since(start);
  return rep;
}

namespace {

// Hop distance on the n-cycle measured on exponents.
int cycle_dist(int i, int j, int n) {
  int diff = mod_reduce(i - j, n);
  return std::min(diff, n - diff);
}

std::vector<SweepFailure> claim1_failures(const CayleyGraph& graph,
                                          const DistanceMatrix& d, int n,
                                          int r, int s) {
  std::string params = fmt_params({{"n", n}, {"r", r}, {"s", s}});
  std::vector<SweepFailure> out;
  PairBalance pb = w_set_sizes(d, 0, s);
  if (!pb.balanced())
    out.push_back({params, "rotation pair (1, a^s) unbalanced: " +
                               std::to_string(pb.w_xy) + " vs " +
                               std::to_string(pb.w_yx)});

  // decomposition: W_{1a^s}(Gamma) = W_{1a^s}(Gamma_1)
  //                                  u W_{(ba^r)(ba^{r-s})}(Gamma_2)
  int rs = mod_reduce(r - s, n);
  for (int i = 0; i < n; ++i) {
    bool actual_rot = in_w(d, i, 0, s);
    bool pred_rot = cycle_dist(0, i, n) < cycle_dist(s, i, n);
    if (actual_rot != pred_rot) {
      out.push_back({params, "rotation a^" + std::to_string(i) +
                                 " disagrees with the Gamma_1 prediction"});
      break;
    }
    bool actual_refl = in_w(d, n + i, 0, s);
    bool pred_refl = cycle_dist(r, i, n) < cycle_dist(rs, i, n);
    if (actual_refl != pred_refl) {
      out.push_back({params, "reflection ba^" + std::to_string(i) +
                                 " disagrees with the Gamma_2 prediction"});
      break;
    }
    // the mirrored decomposition for W_{a^s 1}
    bool actual_rot2 = in_w(d, i, s, 0);
    bool pred_rot2 = cycle_dist(s, i, n) < cycle_dist(0, i, n);
    bool actual_refl2 = in_w(d, n + i, s, 0);
    bool pred_refl2 = cycle_dist(rs, i, n) < cycle_dist(r, i, n);
    if (actual_rot2 != pred_rot2 || actual_refl2 != pred_refl2) {
      out.push_back({params, "mirrored decomposition disagrees at i=" +
                                 std::to_string(i)});
      break;
    }
  }
  (void)graph;
  return out;
}

}  // namespace

SweepReport check_claim1_cycle_reduction(int n, int r, int s) {
  auto start = Clock::now();
  if (s < 1 || s > n - 1)
    throw ParameterError("Claim 1 requires s in [n-1]");
  SweepReport rep;
  rep.name = "claim1-cycle-reduction";
  rep.ranges = fmt_params({{"n", n}, {"r", r}, {"s", s}});
  rep.cases_run = 1;
  CayleyGraph graph = build_dihedral_s1(n, r);
  DistanceMatrix d = all_pairs(graph);
  rep.failures = claim1_failures(graph, d, n, r, s);
  rep.elapsed_s = seconds_since(start);
  return rep;
}

SweepReport check_claim1_sweep(int min_n, int max_n, int jobs) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "claim1-cycle-reduction";
  rep.ranges = "n in [" + std::to_string(min_n) + "," + std::to_string(max_n) +
               "], all r, s in [n-1]";
  std::vector<std::pair<int, int>> graphs;
  for (int n = std::max(3, min_n); n <= max_n; ++n)
    for (int r = 0; r < n; ++r) graphs.emplace_back(n, r);
  std::vector<long> counts(graphs.size(), 0);
  std::vector<std::vector<SweepFailure>> slots(graphs.size());
  parallel_for(static_cast<long>(graphs.size()), jobs, [&](long idx) {
    auto [n, r] = graphs[idx];
    CayleyGraph graph = build_dihedral_s1(n, r);
    DistanceMatrix d = all_pairs(graph);
    for (int s = 1; s <= n - 1; ++s) {
      ++counts[idx];
      auto fails = claim1_failures(graph, d, n, r, s);
      slots[idx].insert(slots[idx].end(), fails.begin(), fails.end());
    }
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    rep.cases_run += counts[i];
    rep.failures.insert(rep.failures.end(), slots[i].begin(), slots[i].end());
  }
  rep.elapsed_s = seconds_since(start);
  return rep;
}

namespace {

std::vector<SweepFailure> cases_123_failures(const CayleyGraph& graph,
                                             const DistanceMatrix& d, int n,
                                             int r) {
  std::vector<SweepFailure> out;
  auto actual_w = [&](int s) {
    // (W_{1(ba^s)}, W_{(ba^s)1}) as vertex-index sets
    std::pair<std::set<int>, std::set<int>> w;
    for (int v = 0; v < 2 * n; ++v) {
      if (in_w(d, v, 0, n + s)) w.first.insert(v);
      if (in_w(d, v, n + s, 0)) w.second.insert(v);
    }
    return w;
  };
  auto check = [&](int s, const std::set<int>& expect1,
                   const std::set<int>& expect2, const char* which) {
    auto [w1, w2] = actual_w(s);
    std::string params = fmt_params({{"n", n}, {"r", r}, {"s", s}});
    if (w1 != expect1)
      out.push_back({params, std::string(which) + ": W_{1(ba^s)} is " +
                                 set_to_string(graph, w1) + ", expected " +
                                 set_to_string(graph, expect1)});
    if (w2 != expect2)
      out.push_back({params, std::string(which) + ": W_{(ba^s)1} is " +
                                 set_to_string(graph, w2) + ", expected " +
                                 set_to_string(graph, expect2)});
  };

  std::set<int> v1, v2;
  for (int i = 0; i < n; ++i) {
    v1.insert(i);
    v2.insert(n + i);
  }

  // Case 1: s = r, the W sets are exactly the two halves
  check(r, v1, v2, "case 1");

  int half = n / 2;  // n even: n/2 exponents removed; n odd: (n-1)/2
  if (n % 2) half = (n - 1) / 2;

  // Case 2: s = r-1; remove a^1..a^half and ba^r..ba^{r+half-1}
  {
    std::set<int> e1 = v1, e2 = v2;
    for (int i = 1; i <= half; ++i) e1.erase(i);
    for (int j = 0; j < half; ++j) e2.erase(n + mod_reduce(r + j, n));
    check(mod_reduce(r - 1, n), e1, e2, "case 2");
  }

  // Case 3: s = r+1; remove a^{n-1}..a^{n-half} and ba^r..ba^{r-half+1}
  {
    std::set<int> e1 = v1, e2 = v2;
    for (int i = 1; i <= half; ++i) e1.erase(mod_reduce(n - i, n));
    for (int j = 0; j < half; ++j) e2.erase(n + mod_reduce(r - j, n));
    check(mod_reduce(r + 1, n), e1, e2, "case 3");
  }
  return out;
}

}  // namespace

SweepReport check_cases_123(int n, int r) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "cases-123";
  rep.ranges = fmt_params({{"n", n}, {"r", r}}) + ", s in {r, r-1, r+1}";
  rep.cases_run = 3;
  CayleyGraph graph = build_dihedral_s1(n, r);
  DistanceMatrix d = all_pairs(graph);
  rep.failures = cases_123_failures(graph, d, n, r);
  rep.elapsed_s = seconds_since(start);
  return rep;
}

SweepReport check_cases_123_sweep(int min_n, int max_n, int jobs) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "cases-123";
  rep.ranges = "n in [" + std::to_string(min_n) + "," + std::to_string(max_n) +
               "], all r, s in {r, r-1, r+1}";
  std::vector<std::pair<int, int>> graphs;
  for (int n = std::max(3, min_n); n <= max_n; ++n)
    for (int r = 0; r < n; ++r) graphs.emplace_back(n, r);
  rep.cases_run = 3 * static_cast<long>(graphs.size());
  run_indexed(
      static_cast<long>(graphs.size()), jobs,
      [&](long idx) {
        auto [n, r] = graphs[idx];
        CayleyGraph graph = build_dihedral_s1(n, r);
        DistanceMatrix d = all_pairs(graph);
        return cases_123_failures(graph, d, n, r);
      },
      rep);
  rep.elapsed_s = seconds_since(start);
  return rep;
}

namespace {

struct Fixture {
  std::string name;
  int expected_diameter;
  std::vector<bool> expected_balanced;  // index 0 = ell 1
};

std::vector<SweepFailure> check_fixture(const CayleyGraph& graph,
                                        const Fixture& fx) {
  std::vector<SweepFailure> out;
  DistanceMatrix d = all_pairs(graph);
  if (d.diameter != fx.expected_diameter) {
    out.push_back({fx.name, "diameter " + std::to_string(d.diameter) +
                                ", expected " +
                                std::to_string(fx.expected_diameter)});
    return out;
  }
  BalanceProfile profile = full_profile(d, 1);
  for (std::size_t e = 0; e < fx.expected_balanced.size(); ++e) {
    if (profile.per_ell[e].balanced != fx.expected_balanced[e])
      out.push_back(
          {fx.name, "ell=" + std::to_string(e + 1) + " is " +
                        (profile.per_ell[e].balanced ? "balanced"
                                                     : "unbalanced") +
                        ", expected the opposite"});
  }
  return out;
}

}  // namespace

SweepReport check_named_examples() {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "named-examples";
  rep.ranges = "D_9, A_4, S_4 fixtures";
  rep.cases_run = 3;

  {
    FiniteGroup d9 = FiniteGroup::dihedral(9);
    auto gens = parse_generators(d9, "a^3, a^6, b, b*a^2, b*a^3");
    auto fails = check_fixture(build_cayley(d9, gens),
                               {"D_9 {a^3,a^6,b,ba^2,ba^3}", 3,
                                {true, false, false}});
    rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
  }
  {
    auto gens = parse_permutations("(1 2 3), (1 3 2), (1 2)(3 4)");
    FiniteGroup a4 = FiniteGroup::permutation_closure(gens);
    std::vector<int> idx;
    for (const auto& p : gens) idx.push_back(a4.index_of(p));
    auto fails = check_fixture(build_cayley(a4, idx),
                               {"A_4 {(123),(132),(12)(34)}", 3,
                                {true, false, true}});
    rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
  }
  {
    auto gens = parse_permutations("(1 2), (2 4), (1 2)(3 4)");
    FiniteGroup s4 = FiniteGroup::permutation_closure(gens);
    std::vector<int> idx;
    for (const auto& p : gens) idx.push_back(s4.index_of(p));
    auto fails = check_fixture(build_cayley(s4, idx),
                               {"S_4 {(12),(24),(12)(34)}", 4,
                                {true, true, false, false}});
    rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
  }
  rep.elapsed_s = seconds_since(start);
  return rep;
}

SweepReport check_abelian_highly_db(int max_n, int sample_count,
                                    std::uint64_t seed) {
  auto start = Clock::now();
  SweepReport rep;
  rep.name = "abelian-circulants";
  rep.ranges = std::to_string(sample_count) + " circulants, n <= " +
               std::to_string(max_n);
  rep.cases_run = sample_count;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(3, max_n);
  for (int sample = 0; sample < sample_count; ++sample) {
    int n = 0;
    std::vector<int> steps;
    // resample until the connection set generates Z_n
    for (;;) {
      n = pick_n(rng);
      steps.clear();
      int g = n;
      for (int c = 1; 2 * c <= n; ++c) {
        if (rng() & 1) {
          steps.push_back(c);
          g = std::gcd(g, c);
        }
      }
      if (!steps.empty() && g == 1) break;
    }
    FiniteGroup zn = FiniteGroup::cyclic(n);
    std::vector<int> s;
    for (int c : steps) {
      s.push_back(c);
      s.push_back(mod_reduce(n - c, n));
    }
    CayleyGraph graph = build_cayley(zn, s);
    std::ostringstream params;
    params << "n=" << n << ", steps={";
    for (std::size_t i = 0; i < steps.size(); ++i)
      params << (i ? "," : "") << steps[i];
    params << "}";
    auto fails = assert_highly(graph, params.str());
    rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
  }
  rep.elapsed_s = seconds_since(start);
  return rep;
}

std::vector<SweepReport> run_all_checks(const VerifyOptions& opts) {
  auto wanted = [&](const std::string& name) {
    return opts.only.empty() ||
           std::find(opts.only.begin(), opts.only.end(), name) !=
               opts.only.end();
  };
  std::vector<SweepReport> out;
  if (wanted("lemma-identities"))
    out.push_back(check_lemma_identities(opts.lemma_max_n));
  if (wanted("adjacency-oracle"))
    out.push_back(check_adjacency_oracle(opts.max_n, opts.jobs));
  if (wanted("theorem-1"))
    out.push_back(check_theorem_1(opts.min_n, opts.max_n, opts.jobs));
  if (wanted("theorem-2"))
    out.push_back(check_theorem_2(opts.min_n, opts.max_n, opts.jobs));
  if (wanted("isomorphism-theta"))
    out.push_back(
        check_isomorphism_theta_sweep(opts.min_n, opts.iso_max_n, opts.jobs));
  if (wanted("claim1-cycle-reduction"))
    out.push_back(check_claim1_sweep(opts.min_n, opts.max_n, opts.jobs));
  if (wanted("cases-123"))
    out.push_back(check_cases_123_sweep(opts.min_n, opts.max_n, opts.jobs));
  if (wanted("claims-ab"))
    out.push_back(check_claims_AB_sweep(opts.min_n, opts.max_n, opts.jobs));
  if (wanted("named-examples")) out.push_back(check_named_examples());
  if (wanted("abelian-circulants"))
    out.push_back(check_abelian_highly_db(opts.abelian_max_n,
                                          opts.abelian_samples,
                                          opts.abelian_seed));
  return out;
}

std::string render_report_table(const std::vector<SweepReport>& reports,
                                int max_failures_shown) {
  std::ostringstream os;
  for (const auto& rep : reports) {
    os << (rep.pass() ? "PASS" : "FAIL") << "  " << rep.name << "  ("
       << rep.cases_run << " cases; " << rep.ranges << ")\n";
    int shown = 0;
    for (const auto& f : rep.failures) {
      if (shown++ >= max_failures_shown) {
        os << "      ... " << rep.failures.size() - max_failures_shown
           << " more failures\n";
        break;
      }
      os << "      " << f.params << ": " << f.witness << "\n";
    }
  }
  return os.str();
}

}  // namespace cayb
