// Copyright 2026 The Wiener Bound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIENER_METRICS_HPP_
#define WIENER_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

using Distance = std::uint32_t;

// Distance-based invariants of connected graphs.
//
// Every operation here runs one breadth-first search per source and never
// materializes the n x n distance table. Functions taking `threads` split the
// sources over that many workers (0 = resolve_threads default); results are
// identical for every thread count. All of them throw DisconnectedGraphError
// on a disconnected input and GraphError on the empty graph.

// Number of unordered vertex pairs at each exact distance.
class DistanceDistribution {
 public:
  DistanceDistribution() = default;
  DistanceDistribution(std::size_t order, std::vector<std::uint64_t> counts);

  std::size_t order() const { return order_; }

  // Pairs at distance exactly k; zero for k = 0 and k beyond the diameter.
  std::uint64_t pairs_at(std::size_t k) const {
    return k < counts_.size() ? counts_[k] : 0;
  }
  // counts()[k] is pairs_at(k); the last entry is nonzero unless n < 2.
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  std::uint64_t total_pairs() const;
  Distance diameter() const;
  // Sum over k of k * pairs_at(k).
  std::uint64_t wiener() const;

  friend bool operator==(const DistanceDistribution&,
                         const DistanceDistribution&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint64_t> counts_;
};

// Unweighted shortest-path distance from `source` to each vertex.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

DistanceDistribution distance_distribution(const Graph& g, unsigned threads = 1);

// Half the sum of per-source distance totals. Exact in 64 bits for n <= 10^6.
std::uint64_t wiener_index(const Graph& g, unsigned threads = 1);

std::vector<Distance> eccentricities(const Graph& g, unsigned threads = 1);

// 0 for the single-vertex graph.
Distance diameter(const Graph& g, unsigned threads = 1);

// Shortest path u_0..u_d between the lexicographically smallest pair (u, v),
// u < v, at distance d = diameter. The path is traced back from v choosing
// the smallest-index neighbor one step closer to u. Requires n >= 2.
std::vector<Vertex> diametral_path(const Graph& g, unsigned threads = 1);

// The diametral path plus the sizes of the three pair classes: both
// endpoints on the path (x), neither (y), exactly one (z).
struct DiametralPartition {
  std::vector<Vertex> path;
  std::uint64_t x_size = 0;
  std::uint64_t y_size = 0;
  std::uint64_t z_size = 0;

  Distance diameter() const { return static_cast<Distance>(path.size() - 1); }
};

DiametralPartition diametral_partition(const Graph& g, unsigned threads = 1);

}  // namespace wiener

#endif  // WIENER_METRICS_HPP_
