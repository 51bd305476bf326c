#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "netfractal/fit.hpp"
#include "netfractal/series.hpp"

namespace netfractal {

enum class EntropyScaling {
  loglog,   // ln I vs ln l, the power-law reading
  semilog,  // I vs ln l
};

struct EstimateParams {
  int runs = 1000;
  std::uint64_t base_seed = 42;
  std::vector<int> l_values;  // empty -> 1..diameter+1
  int fit_lmin = 0;           // 0 -> smallest l
  int fit_lmax = 0;           // 0 -> largest l with positive mean
  EntropyScaling scaling = EntropyScaling::loglog;
  PermutationPolicy policy = PermutationPolicy::redraw_per_l;
  int threads = 0;
};

// Spread of the dimensions fitted run by run; a cross-check on the fit of
// the averaged series.
struct PerRunFitStats {
  double mean = 0.0;
  double stddev = 0.0;
  int used_runs = 0;
  int degenerate_runs = 0;
};

struct DimensionEstimate {
  ScalingSeries series;
  FitResult box_fit;        // d_b from mean N_b(l)
  FitResult info_fit;       // d_i from mean I(l)
  PerRunFitStats box_runs;
  PerRunFitStats info_runs;
};

namespace detail {

inline FitResult fit_scaling(const std::vector<double>& ls, const std::vector<double>& ys,
                             EntropyScaling scaling) {
  return scaling == EntropyScaling::loglog ? fit_loglog(ls, ys) : fit_semilog(ls, ys);
}

inline PerRunFitStats per_run_stats(const ScalingSeries& series,
                                    const std::vector<std::size_t>& indices,
                                    const std::vector<double>& ls, bool entropy,
                                    EntropyScaling scaling) {
  PerRunFitStats stats;
  std::vector<double> dims;
  dims.reserve(static_cast<std::size_t>(series.runs));
  std::vector<double> ys(ls.size());
  for (int r = 0; r < series.runs; ++r) {
    for (std::size_t k = 0; k < indices.size(); ++k)
      ys[k] = entropy ? series.entropy(r, indices[k]) : series.nb(r, indices[k]);
    try {
      dims.push_back(fit_scaling(ls, ys, entropy ? scaling : EntropyScaling::loglog).dimension);
    } catch (const FitError&) {
      ++stats.degenerate_runs;
    }
  }
  stats.used_runs = static_cast<int>(dims.size());
  if (dims.empty()) return stats;
  long double sum = 0.0L;
  for (double d : dims) sum += d;
  stats.mean = static_cast<double>(sum / dims.size());
  if (dims.size() > 1) {
    long double var = 0.0L;
    for (double d : dims) {
      const long double dd = d - stats.mean;
      var += dd * dd;
    }
    stats.stddev = std::sqrt(static_cast<double>(var / (dims.size() - 1)));
  }
  return stats;
}

}  // namespace detail

// Full estimate on one distance matrix: Monte-Carlo series, then one
// least-squares fit on the averaged box counts and one on the averaged
// entropies. The fit window [fit_lmin, fit_lmax] trims the series before
// either fit. Throws FitError when fewer than two usable points remain.
inline DimensionEstimate estimate_dimensions(const DistanceMatrix& dist,
                                             const EstimateParams& params = {}) {
  DimensionEstimate est;
  const std::vector<int> ls = params.l_values.empty() ? default_l_values(dist) : params.l_values;
  est.series = compute_series(dist, params.runs, params.base_seed, ls, params.policy,
                              params.threads);

  std::vector<std::size_t> idx;
  std::vector<double> fit_ls;
  for (std::size_t li = 0; li < ls.size(); ++li) {
    if (params.fit_lmin > 0 && ls[li] < params.fit_lmin) continue;
    if (params.fit_lmax > 0 && ls[li] > params.fit_lmax) continue;
    idx.push_back(li);
    fit_ls.push_back(static_cast<double>(ls[li]));
  }
  if (idx.size() < 2) throw FitError("fewer than 2 usable fit points");

  std::vector<double> nb(idx.size()), entropy(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    nb[k] = est.series.mean_Nb[idx[k]];
    entropy[k] = est.series.mean_I[idx[k]];
  }

  est.box_fit = fit_loglog(fit_ls, nb);
  est.info_fit = detail::fit_scaling(fit_ls, entropy, params.scaling);
  est.box_runs = detail::per_run_stats(est.series, idx, fit_ls, false, params.scaling);
  est.info_runs = detail::per_run_stats(est.series, idx, fit_ls, true, params.scaling);
  return est;
}

}  // namespace netfractal
