#include "cayb/explore.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cayb/balance.hpp"
#include "cayb/metric.hpp"
#include "cayb/parallel.hpp"

namespace cayb {

std::string family_name(Family f) {
  switch (f) {
    case Family::S1: return "s1";
    case Family::S2: return "s2";
    case Family::Half: return "half";
    case Family::Refl3: return "refl3";
    case Family::General: return "general";
  }
  return {};
}

Family family_from_name(const std::string& name) {
  if (name == "s1") return Family::S1;
  if (name == "s2") return Family::S2;
  if (name == "half") return Family::Half;
  if (name == "refl3") return Family::Refl3;
  if (name == "general") return Family::General;
  throw ParameterError("unknown family '" + name + "'");
}

namespace {

// Canonical key under the automorphism a -> a, b -> ba^c, which shifts all
// reflection exponents by c and fixes rotations.
std::vector<int> shift_canonical_key(const std::vector<int>& gens, int n) {
  std::vector<int> rot, refl;
  for (int g : gens) {
    if (g < n)
      rot.push_back(g);
    else
      refl.push_back(g - n);
  }
  std::sort(rot.begin(), rot.end());
  std::sort(refl.begin(), refl.end());
  std::vector<int> best;
  for (int c = 0; c < n; ++c) {
    std::vector<int> shifted;
    shifted.reserve(refl.size());
    for (int j : refl) shifted.push_back(mod_reduce(j + c, n));
    std::sort(shifted.begin(), shifted.end());
    if (c == 0 || shifted < best) best = shifted;
  }
  std::vector<int> key = rot;
  key.push_back(-1);  // separator
  key.insert(key.end(), best.begin(), best.end());
  return key;
}

int rot_index(int i, int n) { return mod_reduce(i, n); }
int refl_index(int j, int n) { return n + mod_reduce(j, n); }

void emit_general(int n, int max_size, std::vector<EmittedSet>& out) {
  // inverse-closed units: rotation pairs {a^i, a^{n-i}}, the involution
  // a^{n/2} for even n, and single reflections ba^j
  struct Unit {
    std::vector<int> members;
    std::string desc;
  };
  std::vector<Unit> units;
  for (int i = 1; 2 * i < n; ++i)
    units.push_back({{rot_index(i, n), rot_index(n - i, n)},
                     "a^" + std::to_string(i) + "+-"});
  if (n % 2 == 0 && n >= 2)
    units.push_back({{rot_index(n / 2, n)}, "a^" + std::to_string(n / 2)});
  for (int j = 0; j < n; ++j)
    units.push_back({{refl_index(j, n)}, "ba^" + std::to_string(j)});

  std::vector<int> chosen;
  auto flush = [&]() {
    EmittedSet e;
    e.n = n;
    std::ostringstream params;
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      const Unit& u = units[chosen[c]];
      e.gen_indices.insert(e.gen_indices.end(), u.members.begin(),
                           u.members.end());
      params << (c ? "+" : "") << u.desc;
    }
    std::sort(e.gen_indices.begin(), e.gen_indices.end());
    e.params = params.str();
    out.push_back(std::move(e));
  };
  // lexicographic subset enumeration over unit indices
  auto recurse = [&](auto&& self, int start, int budget) -> void {
    for (int u = start; u < static_cast<int>(units.size()); ++u) {
      int size = static_cast<int>(units[u].members.size());
      if (size > budget) continue;
      chosen.push_back(u);
      flush();
      self(self, u + 1, budget - size);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, max_size);
}

}  // namespace

std::vector<EmittedSet> enumerate_family(const FamilySpec& spec, int n) {
  std::vector<EmittedSet> raw;
  switch (spec.family) {
    case Family::S1:
      for (int r = 0; r < n; ++r)
        raw.push_back({n,
                       {rot_index(1, n), rot_index(n - 1, n), refl_index(r, n)},
                       "r=" + std::to_string(r)});
      break;
    case Family::S2:
      for (int k = 1; 2 * k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        for (int t = 0; t < n; ++t)
          raw.push_back(
              {n,
               {rot_index(k, n), rot_index(n - k, n), refl_index(t, n)},
               "k=" + std::to_string(k) + ",t=" + std::to_string(t)});
      }
      break;
    case Family::Half:
      if (n % 2 != 0)
        throw ParameterError("HALF family requires even n (uses a^{n/2})");
      for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = k1 + 1; k2 < n; ++k2)
          raw.push_back(
              {n,
               {rot_index(n / 2, n), refl_index(k1, n), refl_index(k2, n)},
               "k1=" + std::to_string(k1) + ",k2=" + std::to_string(k2)});
      break;
    case Family::Refl3:
      for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = k1 + 1; k2 < n; ++k2)
          for (int k3 = k2 + 1; k3 < n; ++k3)
            raw.push_back({n,
                           {refl_index(k1, n), refl_index(k2, n),
                            refl_index(k3, n)},
                           "k1=" + std::to_string(k1) + ",k2=" +
                               std::to_string(k2) + ",k3=" +
                               std::to_string(k3)});
      break;
    case Family::General:
      emit_general(n, spec.general_max_size, raw);
      break;
  }
  for (auto& e : raw) {
    std::sort(e.gen_indices.begin(), e.gen_indices.end());
    e.gen_indices.erase(
        std::unique(e.gen_indices.begin(), e.gen_indices.end()),
        e.gen_indices.end());
  }
  if (spec.dedupe == DedupeMode::None) return raw;
  std::vector<EmittedSet> out;
  std::set<std::vector<int>> seen;
  for (auto& e : raw)
    if (seen.insert(shift_canonical_key(e.gen_indices, n)).second)
      out.push_back(std::move(e));
  return out;
}

std::vector<CensusRow> census(const FamilySpec& spec, int jobs) {
  std::vector<EmittedSet> emitted;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    if (spec.family == Family::Half && n % 2 != 0) continue;
    auto batch = enumerate_family(spec, n);
    emitted.insert(emitted.end(), batch.begin(), batch.end());
  }

  std::vector<CensusRow> rows(emitted.size());
  parallel_for(static_cast<long>(emitted.size()), jobs, [&](long idx) {
    const EmittedSet& e = emitted[idx];
    CensusRow& row = rows[idx];
    row.family = family_name(spec.family);
    row.n = e.n;
    row.params = e.params;
    FiniteGroup g = FiniteGroup::dihedral(e.n);
    row.order = g.order();
    GeneratingSet s =
        validate_generating_set(g, e.gen_indices, /*strict=*/false);
    row.generates = s.generates;
    row.subgroup_order = s.subgroup_order;
    CayleyGraph graph(g, s);
    if (!s.generates) {
      // components are isomorphic (cosets of <S>); one BFS suffices
      auto dist = bfs_from(graph, 0);
      int comp_diam = 0;
      for (auto v : dist)
        if (v != DistanceMatrix::kInf) comp_diam = std::max<int>(comp_diam, v);
      row.diameter = comp_diam;
      row.pattern = "disconnected";
      row.highly = false;
      return;
    }
    DistanceMatrix d = all_pairs(graph);
    BalanceProfile profile = full_profile(d, 0);
    row.diameter = d.diameter;
    std::string pattern;
    for (const auto& v : profile.per_ell)
      pattern += v.balanced ? "✓" : "✗";
    row.pattern = pattern;
    row.highly = profile.highly_distance_balanced;
  });
  return rows;
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "family,n,params,order,diameter,verdict_pattern,highly\n";
  for (const auto& r : rows)
    os << r.family << ',' << r.n << ',' << '"' << r.params << '"' << ','
       << r.order << ',' << r.diameter << ',' << r.pattern << ','
       << (r.highly ? "true" : "false") << '\n';
  return os.str();
}

nlohmann::json census_to_json(const std::vector<CensusRow>& rows) {
  nlohmann::json j;
  j["schema_version"] = 1;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"family", r.family},
                   {"n", r.n},
                   {"params", r.params},
                   {"order", r.order},
                   {"diameter", r.diameter},
                   {"verdict_pattern", r.pattern},
                   {"highly", r.highly},
                   {"generates", r.generates},
                   {"subgroup_order", r.subgroup_order}});
  }
  j["rows"] = arr;
  return j;
}

}  // namespace cayb
