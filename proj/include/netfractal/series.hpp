#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "netfractal/cover.hpp"
#include "netfractal/entropy.hpp"
#include "netfractal/parallel.hpp"

namespace netfractal {

// Monte-Carlo scaling data: per box size, mean and sample std of the box
// count N_b(l) and of the occupancy entropy I(l) over `runs` randomized
// coverings. The raw per-run values are kept for per-run fits.
struct ScalingSeries {
  std::vector<int> l_values;
  int runs = 0;
  std::vector<double> mean_Nb, std_Nb;
  std::vector<double> mean_I, std_I;
  std::vector<double> run_Nb, run_I;  // runs x l_values.size(), row per run

  double nb(int run, std::size_t li) const {
    return run_Nb[static_cast<std::size_t>(run) * l_values.size() + li];
  }
  double entropy(int run, std::size_t li) const {
    return run_I[static_cast<std::size_t>(run) * l_values.size() + li];
  }
};

inline std::vector<int> default_l_values(const DistanceMatrix& dist) {
  std::vector<int> ls;
  ls.reserve(static_cast<std::size_t>(dist.diameter) + 1);
  for (int l = 1; l <= dist.diameter + 1; ++l) ls.push_back(l);
  return ls;
}

// R independent randomized covering runs per box size; run r draws its
// permutations from a generator seeded with base_seed + r. Runs land in
// preallocated slots and aggregation walks them in run order, so the output
// is identical for any worker count.
inline ScalingSeries compute_series(const DistanceMatrix& dist, int runs,
                                    std::uint64_t base_seed,
                                    const std::vector<int>& l_values,
                                    PermutationPolicy policy = PermutationPolicy::redraw_per_l,
                                    int threads = 0) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (l_values.empty()) throw std::invalid_argument("l_values must be non-empty");

  ScalingSeries series;
  series.l_values = l_values;
  series.runs = runs;
  const std::size_t L = l_values.size();
  series.run_Nb.assign(static_cast<std::size_t>(runs) * L, 0.0);
  series.run_I.assign(static_cast<std::size_t>(runs) * L, 0.0);

  run_tasks(runs, threads, [&](int r) {
    const auto covers =
        cover_series(dist, l_values, base_seed + static_cast<std::uint64_t>(r), policy);
    for (std::size_t li = 0; li < L; ++li) {
      series.run_Nb[static_cast<std::size_t>(r) * L + li] =
          static_cast<double>(covers[li].boxes.size());
      series.run_I[static_cast<std::size_t>(r) * L + li] =
          information_entropy(covers[li], dist.n);
    }
  });

  series.mean_Nb.resize(L);
  series.std_Nb.resize(L);
  series.mean_I.resize(L);
  series.std_I.resize(L);
  for (std::size_t li = 0; li < L; ++li) {
    long double sum_nb = 0.0L, sum_i = 0.0L;
    for (int r = 0; r < runs; ++r) {
      sum_nb += series.nb(r, li);
      sum_i += series.entropy(r, li);
    }
    const double mean_nb = static_cast<double>(sum_nb / runs);
    const double mean_i = static_cast<double>(sum_i / runs);
    long double var_nb = 0.0L, var_i = 0.0L;
    for (int r = 0; r < runs; ++r) {
      const long double dn = series.nb(r, li) - mean_nb;
      const long double di = series.entropy(r, li) - mean_i;
      var_nb += dn * dn;
      var_i += di * di;
    }
    series.mean_Nb[li] = mean_nb;
    series.mean_I[li] = mean_i;
    if (runs > 1) {
      series.std_Nb[li] = std::sqrt(static_cast<double>(var_nb / (runs - 1)));
      series.std_I[li] = std::sqrt(static_cast<double>(var_i / (runs - 1)));
    } else {
      series.std_Nb[li] = 0.0;
      series.std_I[li] = 0.0;
    }
  }
  return series;
}

}  // namespace netfractal
