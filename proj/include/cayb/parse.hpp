#pragma once

#include <string_view>
#include <vector>

#include "cayb/group.hpp"

namespace cayb {

// Comma-separated dihedral words: `1`, `a`, `a^i`, `b`, `b*a^i`.
// Whitespace-insensitive; exponents (negative allowed) reduced mod n.
std::vector<DihedralElement> parse_dihedral_words(std::string_view text, int n);

// Comma-separated permutations in 1-based cycle notation, e.g.
// "(1 2 3), (1 3 2), (1 2)(3 4)". The domain size is the largest point
// mentioned anywhere in the list. `id` denotes the identity.
std::vector<Permutation> parse_permutations(std::string_view text);

// Comma-separated element indices (table-backed groups).
std::vector<int> parse_indices(std::string_view text);

// Dispatches on the group realization and returns element indices in g.
std::vector<int> parse_generators(const FiniteGroup& g, std::string_view text);

}  // namespace cayb
