#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include <json.hpp>

#include "netfractal/cover.hpp"
#include "netfractal/dimension.hpp"
#include "netfractal/graph.hpp"
#include "netfractal/series.hpp"

namespace netfractal {

// Shortest round-trip decimal form; byte-stable across runs and platforms.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string to_csv(const ScalingSeries& series) {
  std::string out = "l,mean_Nb,std_Nb,mean_I,std_I\n";
  for (std::size_t li = 0; li < series.l_values.size(); ++li) {
    out += std::to_string(series.l_values[li]);
    out += ',';
    out += format_double(series.mean_Nb[li]);
    out += ',';
    out += format_double(series.std_Nb[li]);
    out += ',';
    out += format_double(series.mean_I[li]);
    out += ',';
    out += format_double(series.std_I[li]);
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json to_json(const FitResult& fit, int runs, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["dimension"] = fit.dimension;
  j["intercept"] = fit.intercept;
  j["sse_Q"] = fit.sse_Q;
  auto points = nlohmann::ordered_json::array();
  for (const auto& [x, y] : fit.points_used) points.push_back({x, y});
  j["points_used"] = points;
  j["excluded_points"] = fit.excluded_points;
  j["runs"] = runs;
  j["seed"] = seed;
  return j;
}

inline nlohmann::ordered_json to_json(const BoxCover& cover) {
  nlohmann::ordered_json j;
  j["l"] = cover.l;
  j["boxes"] = cover.boxes;
  return j;
}

inline std::string to_edgelist(const Graph& g) {
  std::string out;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[static_cast<std::size_t>(v)])
      if (v < u) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(u);
        out += '\n';
      }
  return out;
}

}  // namespace netfractal
