#pragma once

#include <cstdint>
#include <vector>

#include "cayb/cayley.hpp"

namespace cayb {

// Dense all-pairs hop-count matrix. kInf marks unreachable pairs; arithmetic
// on kInf is forbidden by contract (asserted in debug builds via at()).
struct DistanceMatrix {
  static constexpr std::uint16_t kInf = 0xFFFF;

  int n = 0;
  std::vector<std::uint16_t> d;  // row-major, n*n
  std::uint16_t diameter = 0;    // max finite entry
  bool connected = true;

  std::uint16_t at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

// Single-source BFS distance row; kInf for unreachable vertices.
std::vector<std::uint16_t> bfs_from(const CayleyGraph& graph, int source);

// BFS from every source; parallelizes across sources (disjoint rows).
DistanceMatrix all_pairs(const CayleyGraph& graph, int jobs = 1);

}  // namespace cayb
