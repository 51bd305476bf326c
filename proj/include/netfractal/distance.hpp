#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "netfractal/graph.hpp"
#include "netfractal/parallel.hpp"

namespace netfractal {

// Dense hop-count matrix. Covering scans whole rows, so a flat uint16 array
// beats any sparse form at the sizes this tool targets (n up to a few
// thousand).
struct DistanceMatrix {
  int n = 0;
  int diameter = 0;
  std::vector<std::uint16_t> d;

  std::uint16_t at(int i, int j) const {
    return d[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
  const std::uint16_t* row(int i) const {
    return d.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
  }
};

// Exact unweighted shortest paths via one BFS per source. Rows are
// independent, so sources fan out across threads without affecting the
// result. Throws on disconnected input.
inline DistanceMatrix all_pairs_distances(const Graph& g, int threads = 0) {
  constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();
  DistanceMatrix dm;
  dm.n = g.n;
  dm.d.assign(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n), kUnreached);

  std::vector<char> complete(static_cast<std::size_t>(g.n), 0);
  run_tasks(g.n, threads, [&](int s) {
    auto* row = dm.d.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(g.n);
    std::vector<int> frontier{s};
    std::vector<int> next;
    row[s] = 0;
    int reached = 1;
    std::uint16_t depth = 0;
    while (!frontier.empty()) {
      ++depth;
      next.clear();
      for (int v : frontier) {
        for (int u : g.adj[static_cast<std::size_t>(v)]) {
          if (row[u] != kUnreached) continue;
          row[u] = depth;
          next.push_back(u);
          ++reached;
        }
      }
      frontier.swap(next);
    }
    complete[static_cast<std::size_t>(s)] = reached == g.n ? 1 : 0;
  });

  for (int s = 0; s < g.n; ++s) {
    if (!complete[static_cast<std::size_t>(s)])
      throw GraphError(
          "graph is disconnected; reduce it with largest_connected_component first");
  }

  int diameter = 0;
  for (const auto dist : dm.d)
    if (static_cast<int>(dist) > diameter) diameter = dist;
  dm.diameter = diameter;
  return dm;
}

}  // namespace netfractal
