#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "netfractal/distance.hpp"
#include "netfractal/rng.hpp"

namespace netfractal {

// One covering of the node set for a single box size: boxes partition
// 0..n-1 and every pair inside a box sits at distance < l. ordering_seed
// identifies the permutation stream that produced the cover (0 when the
// permutation was supplied directly).
struct BoxCover {
  int l = 0;
  std::uint64_t ordering_seed = 0;
  std::vector<std::vector<int>> boxes;
};

// Greedy coloring of the auxiliary graph that links i and j when
// d_ij >= l. The auxiliary graph is never materialized; the coloring reads
// the distance row directly. Nodes are scanned in the given permutation and
// take the smallest color unused among their already-colored neighbours;
// color classes become the boxes. Deterministic in (dist, l, permutation).
inline BoxCover greedy_cover(const DistanceMatrix& dist, int l,
                             const std::vector<int>& permutation) {
  if (l < 1) throw std::invalid_argument("box size must be >= 1");
  const int n = dist.n;
  if (static_cast<int>(permutation.size()) != n)
    throw std::invalid_argument("permutation size does not match node count");

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> mark(static_cast<std::size_t>(n) + 1, -1);
  int ncolors = 0;
  for (int step = 0; step < n; ++step) {
    const int v = permutation[static_cast<std::size_t>(step)];
    if (v < 0 || v >= n || color[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("permutation is not a bijection on 0..n-1");
    const std::uint16_t* row = dist.row(v);
    for (int prev = 0; prev < step; ++prev) {
      const int u = permutation[static_cast<std::size_t>(prev)];
      if (static_cast<int>(row[u]) >= l) mark[static_cast<std::size_t>(color[u])] = step;
    }
    int c = 0;
    while (mark[static_cast<std::size_t>(c)] == step) ++c;
    color[static_cast<std::size_t>(v)] = c;
    if (c + 1 > ncolors) ncolors = c + 1;
  }

  BoxCover cover;
  cover.l = l;
  cover.boxes.resize(static_cast<std::size_t>(ncolors));
  for (int v = 0; v < n; ++v)
    cover.boxes[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  return cover;
}

// Partition + intra-box distance check; used by tests and the cover dump.
inline bool is_valid_cover(const BoxCover& cover, const DistanceMatrix& dist) {
  std::vector<char> seen(static_cast<std::size_t>(dist.n), 0);
  int total = 0;
  for (const auto& box : cover.boxes) {
    if (box.empty()) return false;
    for (std::size_t a = 0; a < box.size(); ++a) {
      const int v = box[a];
      if (v < 0 || v >= dist.n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
      ++total;
      for (std::size_t bi = a + 1; bi < box.size(); ++bi)
        if (static_cast<int>(dist.at(v, box[bi])) >= cover.l) return false;
    }
  }
  return total == dist.n;
}

namespace detail {

// Branch and bound chromatic-number search over bitmask adjacency.
// Vertices are tried in degree order, colors up to one past the count in
// use, with a greedy clique as the lower bound.
class ChromaticSearch {
 public:
  ChromaticSearch(std::vector<std::uint32_t> adj, int n) : adj_(std::move(adj)), n_(n) {
    order_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order_[static_cast<std::size_t>(i)] = i;
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      const int da = std::popcount(adj_[static_cast<std::size_t>(a)]);
      const int db = std::popcount(adj_[static_cast<std::size_t>(b)]);
      return da != db ? da > db : a < b;
    });
  }

  int lower_bound() const {
    // greedy clique along the degree order
    std::uint32_t clique_mask = 0;
    int size = 0;
    for (int v : order_) {
      if ((clique_mask & ~adj_[static_cast<std::size_t>(v)]) == 0) {
        clique_mask |= 1u << v;
        ++size;
      }
    }
    return std::max(size, 1);
  }

  bool feasible(int k) {
    class_mask_.assign(static_cast<std::size_t>(k), 0);
    return place(0, k, 0);
  }

 private:
  bool place(int idx, int k, int used) {
    if (idx == n_) return true;
    const int v = order_[static_cast<std::size_t>(idx)];
    const std::uint32_t nbrs = adj_[static_cast<std::size_t>(v)];
    const int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      if (class_mask_[static_cast<std::size_t>(c)] & nbrs) continue;
      class_mask_[static_cast<std::size_t>(c)] |= 1u << v;
      if (place(idx + 1, k, std::max(used, c + 1))) return true;
      class_mask_[static_cast<std::size_t>(c)] &= ~(1u << v);
    }
    return false;
  }

  std::vector<std::uint32_t> adj_;
  int n_;
  std::vector<int> order_;
  std::vector<std::uint32_t> class_mask_;
};

}  // namespace detail

// Exact minimum box count: the chromatic number of the auxiliary graph.
// Exponential search, so the instance is capped at 16 nodes.
inline int exact_min_cover(const DistanceMatrix& dist, int l) {
  if (l < 1) throw std::invalid_argument("box size must be >= 1");
  if (dist.n > 16) throw std::invalid_argument("exact_min_cover is limited to n <= 16");
  const int n = dist.n;
  if (n == 0) return 0;

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  bool any_edge = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(dist.at(i, j)) >= l) {
        adj[static_cast<std::size_t>(i)] |= 1u << j;
        adj[static_cast<std::size_t>(j)] |= 1u << i;
        any_edge = true;
      }
  if (!any_edge) return 1;

  detail::ChromaticSearch search(std::move(adj), n);

  // greedy upper bound on the identity ordering
  int upper;
  {
    std::vector<int> identity(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
    upper = static_cast<int>(greedy_cover(dist, l, identity).boxes.size());
  }

  for (int k = search.lower_bound(); k < upper; ++k)
    if (search.feasible(k)) return k;
  return upper;
}

enum class PermutationPolicy {
  redraw_per_l,     // fresh node ordering for every box size
  shared_across_l,  // one ordering reused for all box sizes of the run
};

// One randomized covering per box size, permutations drawn in sequence from
// a generator seeded with `seed`.
inline std::vector<BoxCover> cover_series(const DistanceMatrix& dist,
                                          const std::vector<int>& l_values,
                                          std::uint64_t seed,
                                          PermutationPolicy policy = PermutationPolicy::redraw_per_l) {
  if (l_values.empty()) throw std::invalid_argument("l_values must be non-empty");
  Rng rng(seed);
  std::vector<BoxCover> covers;
  covers.reserve(l_values.size());
  std::vector<int> shared;
  if (policy == PermutationPolicy::shared_across_l) shared = random_permutation(dist.n, rng);
  std::vector<int> drawn;
  for (int l : l_values) {
    const std::vector<int>* perm = &shared;
    if (policy == PermutationPolicy::redraw_per_l) {
      drawn = random_permutation(dist.n, rng);
      perm = &drawn;
    }
    BoxCover cover = greedy_cover(dist, l, *perm);
    cover.ordering_seed = seed;
    covers.push_back(std::move(cover));
  }
  return covers;
}

}  // namespace netfractal
