#include "cayb/metric.hpp"

#include <algorithm>
#include <cassert>

#include "cayb/parallel.hpp"

namespace cayb {

std::vector<std::uint16_t> bfs_from(const CayleyGraph& graph, int source) {
  int n = graph.num_vertices();
  assert(source >= 0 && source < n);
  std::vector<std::uint16_t> dist(n, DistanceMatrix::kInf);
  std::vector<int> frontier = {source};
  std::vector<int> next;
  dist[source] = 0;
  std::uint16_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (int u : frontier) {
      for (int v : graph.neighbors(u)) {
        if (dist[v] == DistanceMatrix::kInf) {
          dist[v] = level;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

DistanceMatrix all_pairs(const CayleyGraph& graph, int jobs) {
  DistanceMatrix out;
  out.n = graph.num_vertices();
  out.d.resize(static_cast<std::size_t>(out.n) * out.n);
  parallel_for(out.n, jobs, [&](long src) {
    auto row = bfs_from(graph, static_cast<int>(src));
    std::copy(row.begin(), row.end(),
              out.d.begin() + src * out.n);
  });
  out.diameter = 0;
  out.connected = true;
  for (std::uint16_t v : out.d) {
    if (v == DistanceMatrix::kInf)
      out.connected = false;
    else
      out.diameter = std::max(out.diameter, v);
  }
  return out;
}

}  // namespace cayb
