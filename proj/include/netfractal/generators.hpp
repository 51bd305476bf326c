#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "netfractal/graph.hpp"

namespace netfractal {

// Deterministic fixture families with closed-form sizes and diameters.

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_node(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  Graph g = b.build();
  g.labels.clear();
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_node(std::to_string(i));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  Graph g = b.build();
  g.labels.clear();
  return g;
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_node(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  Graph g = b.build();
  g.labels.clear();
  return g;
}

// Node 0 is the hub, leaves hang off it.
inline Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
  GraphBuilder b;
  for (int i = 0; i <= leaves; ++i) b.add_node(std::to_string(i));
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  Graph g = b.build();
  g.labels.clear();
  return g;
}

// rows x cols lattice with 4-neighbor connectivity, row-major node ids.
inline Graph grid_graph(int rows, int cols) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("grid needs rows, cols >= 2");
  GraphBuilder b;
  for (int i = 0; i < rows * cols; ++i) b.add_node(std::to_string(i));
  auto at = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.add_edge(at(r, c), at(r, c + 1));
      if (r + 1 < rows) b.add_edge(at(r, c), at(r + 1, c));
    }
  }
  Graph g = b.build();
  g.labels.clear();
  return g;
}

// CLI-facing dispatcher.
inline Graph generate(const std::string& kind, const std::vector<int>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(kind + " takes " + std::to_string(k) +
                                  (k == 1 ? " parameter" : " parameters"));
  };
  if (kind == "path") {
    want(1);
    return path_graph(params[0]);
  }
  if (kind == "cycle") {
    want(1);
    return cycle_graph(params[0]);
  }
  if (kind == "complete") {
    want(1);
    return complete_graph(params[0]);
  }
  if (kind == "star") {
    want(1);
    return star_graph(params[0]);
  }
  if (kind == "grid") {
    want(2);
    return grid_graph(params[0], params[1]);
  }
  throw std::invalid_argument("unknown generator kind '" + kind +
                              "' (expected path|cycle|complete|star|grid)");
}

}  // namespace netfractal
