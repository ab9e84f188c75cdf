#include "cayb/cayley.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace cayb {

GeneratingSet validate_generating_set(const FiniteGroup& g,
                                      std::vector<int> elements,
                                      bool strict) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty()) throw InvalidSetError("empty generating set");
  for (int s : elements) {
    if (s < 0 || s >= g.order())
      throw InvalidSetError("element index " + std::to_string(s) +
                            " outside group of order " +
                            std::to_string(g.order()));
    if (s == FiniteGroup::kIdentity)
      throw InvalidSetError("generating set contains the identity");
  }
  for (int s : elements) {
    int si = g.inverse(s);
    if (!std::binary_search(elements.begin(), elements.end(), si))
      throw NotSymmetricError("inverse of " + g.label(s) + " (" + g.label(si) +
                              ") missing from S");
  }

  GeneratingSet out;
  out.elements = std::move(elements);
  out.subgroup_order =
      static_cast<int>(subgroup_closure(g, out.elements).size());
  out.generates = out.subgroup_order == g.order();
  if (strict && !out.generates)
    throw NotGeneratingError(
        "S generates a proper subgroup of order " +
            std::to_string(out.subgroup_order) + " < " +
            std::to_string(g.order()),
        out.subgroup_order);
  return out;
}

CayleyGraph::CayleyGraph(FiniteGroup group, GeneratingSet gens)
    : group_(std::move(group)), gens_(std::move(gens)) {
  adj_.resize(group_.order());
  for (int v = 0; v < group_.order(); ++v) {
    auto& row = adj_[v];
    row.reserve(gens_.elements.size());
    for (int s : gens_.elements) row.push_back(group_.mul(v, s));
    std::sort(row.begin(), row.end());
    assert(std::adjacent_find(row.begin(), row.end()) == row.end());
  }
}

long CayleyGraph::num_edges() const {
  long total = 0;
  for (const auto& row : adj_) total += static_cast<long>(row.size());
  return total / 2;
}

bool CayleyGraph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::string CayleyGraph::edge_list() const {
  std::ostringstream os;
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) os << u << ' ' << v << '\n';
  return os.str();
}

nlohmann::json CayleyGraph::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["order"] = group_.order();
  if (group_.kind() == FiniteGroup::Kind::Dihedral ||
      group_.kind() == FiniteGroup::Kind::Cyclic)
    j["n"] = group_.modulus();
  nlohmann::json gens = nlohmann::json::array();
  for (int s : gens_.elements) gens.push_back(group_.label(s));
  j["generators"] = gens;
  j["connected"] = connected();
  nlohmann::json labels = nlohmann::json::array();
  for (int v = 0; v < num_vertices(); ++v) labels.push_back(label(v));
  j["labels"] = labels;
  j["adjacency"] = adj_;
  return j;
}

CayleyGraph build_cayley(const FiniteGroup& g, std::vector<int> elements,
                         bool strict) {
  GeneratingSet s = validate_generating_set(g, std::move(elements), strict);
  return CayleyGraph(g, std::move(s));
}

CayleyGraph build_dihedral_s1(int n, int r) {
  FiniteGroup g = FiniteGroup::dihedral(n);
  std::vector<int> s = {g.index_of(DihedralElement{0, mod_reduce(1, n)}),
                        g.index_of(DihedralElement{0, mod_reduce(n - 1, n)}),
                        g.index_of(DihedralElement{1, mod_reduce(r, n)})};
  return build_cayley(g, std::move(s));
}

CayleyGraph build_dihedral_s2(int n, int k, int t) {
  if (!(k >= 1 && 2 * k < n))
    throw ParameterError("S2 requires 1 <= k < n/2");
  if (std::gcd(k, n) != 1) throw ParameterError("S2 requires gcd(k,n)=1");
  FiniteGroup g = FiniteGroup::dihedral(n);
  std::vector<int> s = {g.index_of(DihedralElement{0, mod_reduce(k, n)}),
                        g.index_of(DihedralElement{0, mod_reduce(n - k, n)}),
                        g.index_of(DihedralElement{1, mod_reduce(t, n)})};
  return build_cayley(g, std::move(s));
}

std::vector<int> dihedral_adjacency_oracle(OracleKind kind, int n, int r_or_t,
                                           int k, DihedralElement v) {
  std::set<int> out;
  if (kind == OracleKind::S1) {
    int r = mod_reduce(r_or_t, n);
    if (!v.reflect) {
      out.insert(dihedral_index({0, mod_reduce(v.exp - 1, n)}, n));
      out.insert(dihedral_index({0, mod_reduce(v.exp + 1, n)}, n));
      out.insert(dihedral_index({1, mod_reduce(r - v.exp, n)}, n));
    } else {
      out.insert(dihedral_index({1, mod_reduce(v.exp - 1, n)}, n));
      out.insert(dihedral_index({1, mod_reduce(v.exp + 1, n)}, n));
      out.insert(dihedral_index({0, mod_reduce(r - v.exp, n)}, n));
    }
  } else {
    if (std::gcd(k, n) != 1)
      throw ParameterError("S2 oracle requires gcd(k,n)=1");
    int t = mod_reduce(r_or_t, n);
    // the stated rule is in terms of i with vertex exponent j = ik; the
    // reflection neighbor exponent (r-i)k reduces to t - j via t = kr mod n
    if (!v.reflect) {
      out.insert(dihedral_index({0, mod_reduce(v.exp - k, n)}, n));
      out.insert(dihedral_index({0, mod_reduce(v.exp + k, n)}, n));
      out.insert(dihedral_index({1, mod_reduce(t - v.exp, n)}, n));
    } else {
      out.insert(dihedral_index({1, mod_reduce(v.exp - k, n)}, n));
      out.insert(dihedral_index({1, mod_reduce(v.exp + k, n)}, n));
      out.insert(dihedral_index({0, mod_reduce(t - v.exp, n)}, n));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace cayb
