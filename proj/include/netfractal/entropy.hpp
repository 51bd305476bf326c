#pragma once

#include <cmath>
#include <stdexcept>

#include "netfractal/cover.hpp"

namespace netfractal {

// Box-occupancy entropy -sum (n_i/n) ln(n_i/n) in nats. The two degenerate
// partitions short-circuit to their closed forms, which keeps the
// identities I(1) = ln n and I(diameter+1) = 0 exact in floating point.
inline double information_entropy(const BoxCover& cover, int n) {
  if (n <= 0) throw std::invalid_argument("node count must be positive");
  long long total = 0;
  bool all_singletons = true;
  for (const auto& box : cover.boxes) {
    total += static_cast<long long>(box.size());
    if (box.size() != 1) all_singletons = false;
  }
  if (total != n) throw std::invalid_argument("cover does not partition the node set");

  if (cover.boxes.size() == 1) return 0.0;
  if (all_singletons) return std::log(static_cast<double>(n));

  double sum = 0.0;
  for (const auto& box : cover.boxes) {
    if (box.empty()) continue;  // empty boxes contribute nothing
    const double p = static_cast<double>(box.size()) / static_cast<double>(n);
    sum += p * std::log(p);
  }
  return sum == 0.0 ? 0.0 : -sum;
}

}  // namespace netfractal
