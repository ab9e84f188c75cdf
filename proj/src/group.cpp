#include "cayb/group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace cayb {

DihedralElement dihedral_mul(DihedralElement x, DihedralElement y, int n) {
  assert(n >= 1);
  int i1 = y.reflect ? mod_reduce(-x.exp, n) : x.exp;
  return {x.reflect ^ y.reflect, mod_reduce(i1 + y.exp, n)};
}

DihedralElement dihedral_inverse(DihedralElement x, int n) {
  if (x.reflect) return x;
  return {0, mod_reduce(-x.exp, n)};
}

int conjugate_b(int i, int n) { return mod_reduce(-i, n); }

int mod_inverse(int k, int n) {
  // extended Euclid
  long long old_r = mod_reduce(k, n), r = n;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw ParameterError("no modular inverse: gcd(" + std::to_string(k) +
                         ", " + std::to_string(n) + ") != 1");
  return mod_reduce(old_s, n);
}

Permutation Permutation::identity(int m) {
  Permutation p;
  p.images.resize(m);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= degree() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  assert(degree() == other.degree());
  Permutation out;
  out.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) out.images[i] = images[other.images[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) out.images[images[i]] = i;
  return out;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images[i] == i) continue;
    os << '(' << i + 1;
    seen[i] = true;
    for (int j = images[i]; j != i; j = images[j]) {
      os << ' ' << j + 1;
      seen[j] = true;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "id";
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw ParameterError("dihedral modulus must be >= 1");
  FiniteGroup g;
  g.kind_ = Kind::Dihedral;
  g.n_ = n;
  g.order_ = 2 * n;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ParameterError("cyclic order must be >= 1");
  FiniteGroup g;
  g.kind_ = Kind::Cyclic;
  g.n_ = n;
  g.order_ = n;
  return g;
}

FiniteGroup FiniteGroup::permutation_closure(
    const std::vector<Permutation>& gens, std::size_t size_cap) {
  if (gens.empty()) throw ParameterError("empty generator list");
  int m = gens.front().degree();
  for (const auto& p : gens) {
    if (p.degree() != m)
      throw ParameterError("generators act on different domain sizes");
    if (!p.is_valid()) throw ParameterError("not a permutation");
  }

  std::set<std::vector<int>> seen;
  std::queue<Permutation> pending;
  Permutation id = Permutation::identity(m);
  seen.insert(id.images);
  pending.push(id);
  while (!pending.empty()) {
    Permutation cur = pending.front();
    pending.pop();
    for (const auto& gen : gens) {
      Permutation next = cur.compose(gen);
      if (seen.insert(next.images).second) {
        if (seen.size() > size_cap)
          throw SizeLimitError("permutation closure exceeds size cap " +
                               std::to_string(size_cap));
        pending.push(next);
      }
    }
  }

  FiniteGroup g;
  g.kind_ = Kind::Permutation;
  g.order_ = static_cast<int>(seen.size());
  g.elems_.reserve(seen.size());
  g.elems_.push_back(id);
  for (const auto& images : seen) {
    Permutation p{images};
    if (!p.is_identity()) g.elems_.push_back(std::move(p));
  }
  for (int i = 0; i < g.order_; ++i) g.perm_index_[g.elems_[i].images] = i;
  g.inv_.resize(g.order_);
  for (int i = 0; i < g.order_; ++i)
    g.inv_[i] = g.perm_index_.at(g.elems_[i].inverse().images);
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  int m = static_cast<int>(table.size());
  if (m == 0) throw MalformedGroupError("empty table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != m)
      throw MalformedGroupError("table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= m) throw MalformedGroupError("table entry out of range");

  for (int i = 0; i < m; ++i)
    if (table[0][i] != i || table[i][0] != i)
      throw MalformedGroupError("index 0 is not the identity");

  // Latin square
  for (int i = 0; i < m; ++i) {
    std::vector<bool> row_seen(m, false), col_seen(m, false);
    for (int j = 0; j < m; ++j) {
      if (row_seen[table[i][j]] || col_seen[table[j][i]])
        throw MalformedGroupError("table is not a Latin square");
      row_seen[table[i][j]] = true;
      col_seen[table[j][i]] = true;
    }
  }

  std::vector<int> inv(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (table[i][j] == 0 && table[j][i] == 0) {
        inv[i] = j;
        break;
      }
    }
    if (inv[i] < 0) throw MalformedGroupError("element " + std::to_string(i) +
                                              " has no two-sided inverse");
  }

  auto assoc = [&](int x, int y, int z) {
    return table[table[x][y]][z] == table[x][table[y][z]];
  };
  if (m <= 64) {
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z)
          if (!assoc(x, y, z))
            throw MalformedGroupError("table is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int trial = 0; trial < 10000; ++trial)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw MalformedGroupError("table is not associative");
  }

  FiniteGroup g;
  g.kind_ = Kind::Table;
  g.order_ = m;
  g.table_ = std::move(table);
  g.inv_ = std::move(inv);
  return g;
}

int FiniteGroup::mul(int x, int y) const {
  switch (kind_) {
    case Kind::Dihedral:
      return dihedral_index(
          dihedral_mul(dihedral_at(x, n_), dihedral_at(y, n_), n_), n_);
    case Kind::Cyclic:
      return mod_reduce(x + y, n_);
    case Kind::Permutation:
      return perm_index_.at(elems_[x].compose(elems_[y]).images);
    case Kind::Table:
      return table_[x][y];
  }
  return 0;
}

int FiniteGroup::inverse(int x) const {
  switch (kind_) {
    case Kind::Dihedral:
      return dihedral_index(dihedral_inverse(dihedral_at(x, n_), n_), n_);
    case Kind::Cyclic:
      return mod_reduce(-x, n_);
    case Kind::Permutation:
    case Kind::Table:
      return inv_[x];
  }
  return 0;
}

namespace {
std::string rotation_label(int i) {
  if (i == 0) return "1";
  if (i == 1) return "a";
  return "a^" + std::to_string(i);
}
}  // namespace

std::string FiniteGroup::label(int x) const {
  switch (kind_) {
    case Kind::Dihedral: {
      DihedralElement e = dihedral_at(x, n_);
      if (!e.reflect) return rotation_label(e.exp);
      if (e.exp == 0) return "b";
      if (e.exp == 1) return "ba";
      return "ba^" + std::to_string(e.exp);
    }
    case Kind::Cyclic:
      return rotation_label(x);
    case Kind::Permutation:
      return elems_[x].cycle_string();
    case Kind::Table:
      return "g" + std::to_string(x);
  }
  return {};
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = perm_index_.find(p.images);
  if (it == perm_index_.end())
    throw ParameterError("permutation not in group: " + p.cycle_string());
  return it->second;
}

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& gens) {
  std::vector<bool> seen(g.order(), false);
  seen[FiniteGroup::kIdentity] = true;
  std::queue<int> pending;
  pending.push(FiniteGroup::kIdentity);
  while (!pending.empty()) {
    int cur = pending.front();
    pending.pop();
    for (int s : gens) {
      int next = g.mul(cur, s);
      if (!seen[next]) {
        seen[next] = true;
        pending.push(next);
      }
    }
  }
  std::vector<int> members;
  for (int i = 0; i < g.order(); ++i)
    if (seen[i]) members.push_back(i);
  return members;
}

}  // namespace cayb
