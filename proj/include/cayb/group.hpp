#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cayb/errors.hpp"

namespace cayb {

// Element of the dihedral group D_n in canonical form: rotations a^i have
// reflect = 0, reflections ba^i have reflect = 1, with 0 <= exp < n.
struct DihedralElement {
  int reflect = 0;
  int exp = 0;

  bool operator==(const DihedralElement&) const = default;
  bool is_identity() const { return reflect == 0 && exp == 0; }
};

// Product under a^n = b^2 = 1, bab = a^{-1}:
//   b^{e1} a^{i1} . b^{e2} a^{i2} = b^{e1 xor e2} a^{(-1)^{e2} i1 + i2 mod n}
DihedralElement dihedral_mul(DihedralElement x, DihedralElement y, int n);

// (a^i)^{-1} = a^{n-i}, (ba^i)^{-1} = ba^i.
DihedralElement dihedral_inverse(DihedralElement x, int n);

// Rotation exponent of b a^i b, i.e. (n - i) mod n.
int conjugate_b(int i, int n);

// Canonical vertex index: rotations occupy [0, n), reflections [n, 2n).
inline int dihedral_index(DihedralElement x, int n) {
  return x.reflect * n + x.exp;
}
inline DihedralElement dihedral_at(int index, int n) {
  return {index / n, index % n};
}

// Reduces any integer (possibly negative) into [0, n).
inline int mod_reduce(long long v, int n) {
  long long m = v % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

// Inverse of k modulo n; throws ParameterError when gcd(k, n) != 1.
int mod_inverse(int k, int n);

// Bijection on {0, ..., m-1}, stored as the image array.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int m);
  int degree() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
  bool is_valid() const;

  // Applies `other` first, then this.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  // 1-based cycle notation, e.g. "(1 2)(3 4)"; "id" for the identity.
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
};

// Finite group with a canonical element indexing (index 0 = identity).
// Multiplication is structural for the dihedral and cyclic realizations,
// table lookups for permutation-closure and table-backed groups.
class FiniteGroup {
 public:
  enum class Kind { Dihedral, Cyclic, Permutation, Table };

  static constexpr int kIdentity = 0;

  static FiniteGroup dihedral(int n);
  static FiniteGroup cyclic(int n);

  // Closure of the generators under composition; elements ordered with the
  // identity first, then lexicographically by image array.
  static FiniteGroup permutation_closure(const std::vector<Permutation>& gens,
                                         std::size_t size_cap = 100000);

  // Validates eagerly: row/column 0 must realize the identity, every element
  // needs an inverse, and the table must be a Latin square. Associativity is
  // exhaustive up to order 64 and sampled above that.
  static FiniteGroup from_table(std::vector<std::vector<int>> table);

  Kind kind() const { return kind_; }
  int order() const { return order_; }

  // Modulus n for the dihedral (order 2n) and cyclic (order n) realizations.
  int modulus() const { return n_; }

  int mul(int x, int y) const;
  int inverse(int x) const;
  std::string label(int x) const;

  const Permutation& permutation_at(int x) const { return elems_[x]; }
  int index_of(const Permutation& p) const;
  int index_of(DihedralElement e) const { return dihedral_index(e, n_); }
  DihedralElement dihedral_element_at(int x) const {
    return dihedral_at(x, n_);
  }

 private:
  FiniteGroup() = default;

  Kind kind_ = Kind::Table;
  int order_ = 0;
  int n_ = 0;
  std::vector<Permutation> elems_;
  std::map<std::vector<int>, int> perm_index_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

// Orbit of the identity index under right multiplication by `gens`;
// returns the sorted member indices of the subgroup <gens>.
std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& gens);

}  // namespace cayb
