#pragma once

#include <string>
#include <vector>

#include "cayb/group.hpp"
#include "json.hpp"

namespace cayb {

// Symmetric, identity-free connection set, stored as sorted element indices.
struct GeneratingSet {
  std::vector<int> elements;
  bool generates = true;
  int subgroup_order = 0;  // order of <S>
};

// Checks identity exclusion and S = S^{-1}; computes <S> by closure.
// strict: throws NotGeneratingError when <S> != G.
// permissive: returns the set with generates = false instead.
GeneratingSet validate_generating_set(const FiniteGroup& g,
                                      std::vector<int> elements,
                                      bool strict = true);

// Cay(G;S): vertex g adjacent to h iff g^{-1} h in S, equivalently the
// neighbors of g are { g*s : s in S }. Immutable after construction.
class CayleyGraph {
 public:
  CayleyGraph(FiniteGroup group, GeneratingSet gens);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  long num_edges() const;
  int degree() const { return static_cast<int>(gens_.elements.size()); }
  bool connected() const { return gens_.generates; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;

  const FiniteGroup& group() const { return group_; }
  const GeneratingSet& gens() const { return gens_; }
  std::string label(int v) const { return group_.label(v); }

  // `u v` per line, u < v, lexicographic; deterministic byte-for-byte.
  std::string edge_list() const;
  nlohmann::json to_json() const;

 private:
  FiniteGroup group_;
  GeneratingSet gens_;
  std::vector<std::vector<int>> adj_;
};

CayleyGraph build_cayley(const FiniteGroup& g, std::vector<int> elements,
                         bool strict = true);

// Convenience builders for the two cubic dihedral families.
// S1 = {a, a^{n-1}, ba^r}; S2 = {a^k, a^{n-k}, ba^t} with gcd(k,n) = 1.
CayleyGraph build_dihedral_s1(int n, int r);
CayleyGraph build_dihedral_s2(int n, int k, int t);

enum class OracleKind { S1, S2 };

// Neighbor list straight from the closed-form adjacency rules:
//   S1: a^i ~ a^{i-1}, a^{i+1}, ba^{r-i};  ba^i ~ ba^{i-1}, ba^{i+1}, a^{r-i}
//   S2: a^j ~ a^{j-k}, a^{j+k}, ba^{t-j};  ba^j ~ ba^{j-k}, ba^{j+k}, a^{t-j}
// Independent of build_cayley; vertex indices, sorted, deduplicated.
// r_or_t is r for S1, t for S2; k is ignored for S1.
std::vector<int> dihedral_adjacency_oracle(OracleKind kind, int n, int r_or_t,
                                           int k, DihedralElement v);

}  // namespace cayb
