#include "cayb/balance.hpp"

#include <cstdlib>
#include <sstream>

#include "cayb/parallel.hpp"

namespace cayb {

PairBalance w_set_sizes(const DistanceMatrix& d, int x, int y) {
  if (x == y) throw DegeneratePairError("w_set_sizes requires x != y");
  std::uint16_t dxy = d.at(x, y);
  if (dxy == DistanceMatrix::kInf)
    throw UnreachablePairError("pair at infinite distance");
  PairBalance out;
  out.x = x;
  out.y = y;
  out.ell = dxy;
  for (int w = 0; w < d.n; ++w) {
    std::uint16_t dwx = d.at(w, x);
    std::uint16_t dwy = d.at(w, y);
    if (dwx == DistanceMatrix::kInf || dwy == DistanceMatrix::kInf)
      throw UnreachablePairError("vertex unreachable from the pair");
    if (dwx < dwy)
      ++out.w_xy;
    else if (dwy < dwx)
      ++out.w_yx;
    else
      ++out.equidistant;
  }
  return out;
}

EllVerdict is_ell_balanced(const DistanceMatrix& d, int ell, int witness_cap) {
  if (ell < 1 || ell > d.diameter)
    throw RangeError("ell " + std::to_string(ell) + " outside [1, " +
                     std::to_string(d.diameter) + "]");
  EllVerdict out;
  out.ell = ell;
  for (int x = 0; x < d.n; ++x) {
    for (int y = x + 1; y < d.n; ++y) {
      if (d.at(x, y) != ell) continue;
      ++out.pair_count;
      PairBalance pb = w_set_sizes(d, x, y);
      if (!pb.balanced()) {
        ++out.unbalanced_pairs;
        if (witness_cap == kUnlimitedWitnesses ||
            static_cast<int>(out.witnesses.size()) < witness_cap)
          out.witnesses.push_back(pb);
      }
    }
  }
  out.balanced = out.unbalanced_pairs == 0;
  return out;
}

namespace {

struct EllAccum {
  long pair_count = 0;
  long unbalanced = 0;
  std::vector<PairBalance> witnesses;
};

}  // namespace

BalanceProfile full_profile(const DistanceMatrix& d, int witness_cap,
                            int jobs) {
  if (!d.connected)
    throw UnreachablePairError("full_profile requires a connected graph");
  int diam = d.diameter;
  BalanceProfile out;
  out.per_ell.resize(diam);
  for (int ell = 1; ell <= diam; ++ell) out.per_ell[ell - 1].ell = ell;
  if (diam == 0) return out;

  // one partial accumulator per source vertex; merged in x order below so
  // witness order and caps do not depend on the worker count
  std::vector<std::vector<EllAccum>> partial(
      d.n, std::vector<EllAccum>(diam));
  parallel_for(d.n, jobs, [&](long xi) {
    int x = static_cast<int>(xi);
    auto& acc = partial[x];
    for (int y = x + 1; y < d.n; ++y) {
      int ell = d.at(x, y);
      auto& slot = acc[ell - 1];
      ++slot.pair_count;
      PairBalance pb = w_set_sizes(d, x, y);
      if (!pb.balanced()) {
        ++slot.unbalanced;
        if (witness_cap == kUnlimitedWitnesses ||
            static_cast<int>(slot.witnesses.size()) < witness_cap)
          slot.witnesses.push_back(pb);
      }
    }
  });

  for (int x = 0; x < d.n; ++x) {
    for (int e = 0; e < diam; ++e) {
      auto& v = out.per_ell[e];
      auto& slot = partial[x][e];
      v.pair_count += slot.pair_count;
      v.unbalanced_pairs += slot.unbalanced;
      for (auto& pb : slot.witnesses) {
        if (witness_cap == kUnlimitedWitnesses ||
            static_cast<int>(v.witnesses.size()) < witness_cap)
          v.witnesses.push_back(pb);
      }
    }
  }
  for (auto& v : out.per_ell) {
    v.balanced = v.unbalanced_pairs == 0;
    if (!v.balanced) out.highly_distance_balanced = false;
  }
  return out;
}

long mostar_index(const std::vector<std::vector<int>>& adjacency,
                  const DistanceMatrix& d) {
  if (!d.connected)
    throw UnreachablePairError("mostar_index requires a connected graph");
  long total = 0;
  for (int u = 0; u < static_cast<int>(adjacency.size()); ++u) {
    for (int v : adjacency[u]) {
      if (u >= v) continue;
      PairBalance pb = w_set_sizes(d, u, v);
      total += std::abs(pb.w_xy - pb.w_yx);
    }
  }
  return total;
}

long mostar_index(const CayleyGraph& graph, const DistanceMatrix& d) {
  std::vector<std::vector<int>> adjacency;
  adjacency.reserve(graph.num_vertices());
  for (int u = 0; u < graph.num_vertices(); ++u)
    adjacency.push_back(graph.neighbors(u));
  return mostar_index(adjacency, d);
}

nlohmann::json profile_to_json(const CayleyGraph& graph,
                               const BalanceProfile& profile) {
  nlohmann::json j;
  j["schema_version"] = 1;
  nlohmann::json graph_j;
  graph_j["order"] = graph.num_vertices();
  graph_j["degree"] = graph.degree();
  if (graph.group().kind() == FiniteGroup::Kind::Dihedral ||
      graph.group().kind() == FiniteGroup::Kind::Cyclic)
    graph_j["n"] = graph.group().modulus();
  nlohmann::json gens = nlohmann::json::array();
  for (int s : graph.gens().elements) gens.push_back(graph.label(s));
  graph_j["generators"] = gens;
  j["graph"] = graph_j;
  j["diameter"] = profile.per_ell.size();
  nlohmann::json per_ell = nlohmann::json::array();
  for (const auto& v : profile.per_ell) {
    nlohmann::json vj;
    vj["ell"] = v.ell;
    vj["balanced"] = v.balanced;
    vj["pairs"] = v.pair_count;
    vj["unbalanced_pairs"] = v.unbalanced_pairs;
    nlohmann::json wits = nlohmann::json::array();
    for (const auto& pb : v.witnesses) {
      wits.push_back({{"x", graph.label(pb.x)},
                      {"y", graph.label(pb.y)},
                      {"w_xy", pb.w_xy},
                      {"w_yx", pb.w_yx},
                      {"equidistant", pb.equidistant}});
    }
    vj["witnesses"] = wits;
    per_ell.push_back(vj);
  }
  j["per_ell"] = per_ell;
  j["highly_distance_balanced"] = profile.highly_distance_balanced;
  return j;
}

std::string profile_to_csv(const BalanceProfile& profile) {
  std::ostringstream os;
  os << "ell,pairs,unbalanced_pairs,balanced\n";
  for (const auto& v : profile.per_ell)
    os << v.ell << ',' << v.pair_count << ',' << v.unbalanced_pairs << ','
       << (v.balanced ? "true" : "false") << '\n';
  return os.str();
}

std::string profile_to_text(const CayleyGraph& graph,
                            const BalanceProfile& profile) {
  std::ostringstream os;
  os << "graph: " << graph.num_vertices() << " vertices, "
     << graph.num_edges() << " edges, degree " << graph.degree() << "\n";
  os << "diameter: " << profile.per_ell.size() << "\n";
  for (const auto& v : profile.per_ell) {
    os << "  ell=" << v.ell << ": "
       << (v.balanced ? "balanced" : "UNBALANCED") << " (" << v.pair_count
       << " pairs";
    if (!v.balanced) os << ", " << v.unbalanced_pairs << " unbalanced";
    os << ")\n";
    for (const auto& pb : v.witnesses)
      os << "    witness (" << graph.label(pb.x) << ", " << graph.label(pb.y)
         << "): |W_xy|=" << pb.w_xy << " |W_yx|=" << pb.w_yx << "\n";
  }
  os << "highly distance-balanced: "
     << (profile.highly_distance_balanced ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace cayb
