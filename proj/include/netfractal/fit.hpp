#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netfractal {

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares line through log-scaled points. dimension is the negated
// slope, sse_Q the sum of squared residuals over points_used.
struct FitResult {
  double dimension = 0.0;
  double intercept = 0.0;
  double sse_Q = 0.0;
  std::vector<std::pair<double, double>> points_used;
  int excluded_points = 0;
};

namespace detail {

inline FitResult least_squares(std::vector<std::pair<double, double>> points,
                               int excluded) {
  const auto n = static_cast<double>(points.size());
  if (points.size() < 2) throw FitError("fewer than 2 usable fit points");

  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  if (sxx == 0.0) throw FitError("all x values identical");

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;

  double sse = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - (intercept + slope * x);
    sse += r * r;
  }

  FitResult fit;
  fit.dimension = -slope;
  fit.intercept = intercept;
  fit.sse_Q = sse;
  fit.points_used = std::move(points);
  fit.excluded_points = excluded;
  return fit;
}

}  // namespace detail

// Ordinary least squares of ln(y) on ln(x). Points with y <= 0 (the tail of
// an entropy series reaches exactly 0) are excluded and counted.
inline FitResult fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw FitError("x/y size mismatch");
  std::vector<std::pair<double, double>> points;
  points.reserve(xs.size());
  int excluded = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] <= 0.0) throw FitError("x values must be positive");
    if (ys[k] <= 0.0) {
      ++excluded;
      continue;
    }
    points.emplace_back(std::log(xs[k]), std::log(ys[k]));
  }
  return detail::least_squares(std::move(points), excluded);
}

// Alternative reading for the entropy series: y linear in ln(x), so zero
// values stay usable. dimension is again the negated slope.
inline FitResult fit_semilog(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw FitError("x/y size mismatch");
  std::vector<std::pair<double, double>> points;
  points.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] <= 0.0) throw FitError("x values must be positive");
    points.emplace_back(std::log(xs[k]), ys[k]);
  }
  return detail::least_squares(std::move(points), 0);
}

}  // namespace netfractal
