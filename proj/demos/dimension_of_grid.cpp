// Minimal library walkthrough: build a 20x20 grid, run the randomized
// box covering a few hundred times, and print both dimension estimates.
// A 2-d lattice should land near d_b = 2.

#include <iostream>

#include "netfractal/netfractal.hpp"

int main() {
  using namespace netfractal;

  const Graph g = grid_graph(20, 20);
  const DistanceMatrix dist = all_pairs_distances(g);
  std::cout << "grid 20x20: n=" << g.n << " m=" << g.m << " diameter=" << dist.diameter
            << "\n";

  EstimateParams params;
  params.runs = 200;
  params.base_seed = 7;
  const DimensionEstimate est = estimate_dimensions(dist, params);

  std::cout << "box-counting dimension d_b = " << est.box_fit.dimension
            << " (Q = " << est.box_fit.sse_Q << ")\n";
  std::cout << "information dimension d_i = " << est.info_fit.dimension
            << " (Q = " << est.info_fit.sse_Q << ")\n";

  std::cout << "\n l  mean boxes  mean entropy\n";
  const ScalingSeries& s = est.series;
  for (std::size_t i = 0; i < s.l_values.size(); ++i)
    std::cout << ' ' << s.l_values[i] << "  " << s.mean_Nb[i] << "  " << s.mean_I[i] << "\n";
  return 0;
}
