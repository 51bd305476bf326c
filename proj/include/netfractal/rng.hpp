#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace netfractal {

// Seeded random source for node orderings. Wraps std::mt19937_64, whose raw
// output sequence is pinned by the standard, and does its own bounded draws
// (mask + reject) instead of std::uniform_int_distribution, so the same seed
// yields the same permutations on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Unbiased draw from [0, bound).
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    std::uint64_t x;
    do {
      x = eng_() & mask;
    } while (x >= bound);
    return x;
  }

 private:
  std::mt19937_64 eng_;
};

// Fisher-Yates shuffle of the identity, high index down.
inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

}  // namespace netfractal
