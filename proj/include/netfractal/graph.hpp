#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace netfractal {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected simple graph. Nodes are 0..n-1, adjacency lists are sorted and
// symmetric, m counts undirected edges. labels carries the identifiers found
// in the input file; it is empty for generated graphs.
struct Graph {
  int n = 0;
  long long m = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;

  std::string label(int v) const {
    return labels.empty() ? std::to_string(v) : labels[static_cast<std::size_t>(v)];
  }
};

// Accumulates nodes and edges, then normalizes: self-loops and duplicate
// edges (in either direction) are dropped, adjacency comes out sorted.
class GraphBuilder {
 public:
  int add_node(std::string label) {
    labels_.push_back(std::move(label));
    adj_.emplace_back();
    return static_cast<int>(labels_.size()) - 1;
  }

  // Returns the node for a textual identifier, creating it on first sight.
  int node_for(const std::string& key) {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const int id = add_node(key);
    index_.emplace(key, id);
    return id;
  }

  int node_count() const { return static_cast<int>(adj_.size()); }

  void set_label(int v, std::string label) {
    labels_[static_cast<std::size_t>(v)] = std::move(label);
  }

  // True when the edge was new; self-loops and repeats are dropped.
  bool add_edge(int u, int v) {
    const int n = node_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge endpoint out of range");
    if (u == v) return false;  // self-loop
    const auto a = static_cast<std::uint64_t>(std::min(u, v));
    const auto b = static_cast<std::uint64_t>(std::max(u, v));
    if (!seen_.insert((a << 32) | b).second) return false;  // duplicate
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++m_;
    return true;
  }

  long long edge_count() const { return m_; }

  Graph build() {
    if (adj_.empty()) throw GraphError("empty graph");
    Graph g;
    g.n = node_count();
    g.m = m_;
    g.adj = std::move(adj_);
    g.labels = std::move(labels_);
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::unordered_set<std::uint64_t> seen_;
  long long m_ = 0;
};

// Induced subgraph on the largest connected component, renumbered 0..k-1 in
// increasing order of the old ids. Ties between equally large components go
// to the one containing the smallest node id.
inline Graph largest_connected_component(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
  int best = -1, best_size = 0;
  int ncomp = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    int size = 0;
    std::queue<int> q;
    q.push(s);
    comp[static_cast<std::size_t>(s)] = ncomp;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      ++size;
      for (int u : g.adj[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(u)] == -1) {
          comp[static_cast<std::size_t>(u)] = ncomp;
          q.push(u);
        }
      }
    }
    // Scanning sources in id order makes "first found" the tie-break winner.
    if (size > best_size) {
      best_size = size;
      best = ncomp;
    }
    ++ncomp;
  }

  if (best_size == g.n) return g;

  std::vector<int> new_id(static_cast<std::size_t>(g.n), -1);
  Graph out;
  out.n = best_size;
  out.adj.resize(static_cast<std::size_t>(best_size));
  if (!g.labels.empty()) out.labels.reserve(static_cast<std::size_t>(best_size));
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    if (comp[static_cast<std::size_t>(v)] != best) continue;
    new_id[static_cast<std::size_t>(v)] = next++;
    if (!g.labels.empty()) out.labels.push_back(g.labels[static_cast<std::size_t>(v)]);
  }
  for (int v = 0; v < g.n; ++v) {
    if (comp[static_cast<std::size_t>(v)] != best) continue;
    const int nv = new_id[static_cast<std::size_t>(v)];
    for (int u : g.adj[static_cast<std::size_t>(v)]) {
      const int nu = new_id[static_cast<std::size_t>(u)];
      out.adj[static_cast<std::size_t>(nv)].push_back(nu);
      if (nv < nu) ++out.m;
    }
  }
  return out;
}

}  // namespace netfractal
