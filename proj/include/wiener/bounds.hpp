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

#ifndef WIENER_BOUNDS_HPP_
#define WIENER_BOUNDS_HPP_

#include <cstdint>
#include <optional>

#include "wiener/graph.hpp"

namespace wiener {

// Lower bound on the Wiener index from order n, size m and diameter d >= 2:
//
//   W(G) >= n(n-1) - m + path_excess(d) + (n-d-1) * off_path_excess(d)
//
// Writing W as the sum over pairs of 2 + (dist - 2), the first two terms are
// exact (every pair contributes 2, every edge -1). The remaining terms bound
// the excess dist - 2 from below: along a diametral path u_0..u_d, and for
// each vertex off that path via the triangle inequality through u_i, u_{d-i}.
//
// All arithmetic is exact 64-bit integer. Every division is exact and is
// checked; overflow throws std::overflow_error.

// Excess sum(dist - 2) over pairs on a diametral path: d(d-1)(d-2)/6.
// Requires d >= 0.
std::int64_t path_excess(std::int64_t d);

// Guaranteed excess contributed by one vertex off the diametral path:
// ((d-3)/2)^2 for odd d, (d-2)(d-4)/4 for even d. Throws NotApplicableError
// for d < 2.
std::int64_t off_path_excess(std::int64_t d);

// The bound itself. Throws NotApplicableError when d < 2 (complete graphs
// are excluded) and std::invalid_argument when the parameters cannot belong
// to a connected graph: n <= d, m < n-1 or m > n(n-1)/2.
std::int64_t wiener_lower_bound(std::int64_t n, std::int64_t m, std::int64_t d);

// Exact Wiener index of a diameter-2 graph: n(n-1) - m. Arithmetic only; the
// caller vouches for the diameter.
std::int64_t diameter_two_wiener(std::int64_t n, std::int64_t m);

// Largest order a graph of maximum degree delta and diameter d can have:
// 1 + delta * sum_{i<d} (delta-1)^i, which is 2d+1 when delta = 2.
struct MooreResult {
  std::int64_t delta = 0;
  std::int64_t d = 0;
  std::int64_t n_max = 0;
};

// Throws NotApplicableError for delta < 2, std::invalid_argument for d < 1.
MooreResult moore_bound(std::int64_t delta, std::int64_t d);

// Smallest d >= 1 whose Moore bound admits n vertices, by incremental scan.
// Requires n >= 2; throws NotApplicableError for delta < 2.
std::int64_t moore_diameter_lower_bound(std::int64_t n, std::int64_t delta);

// wiener_lower_bound with the diameter replaced by its Moore lower bound.
// A Moore estimate of 1 is raised to 2 when m < n(n-1)/2 (the graph cannot be
// complete); for m = n(n-1)/2 it throws NotApplicableError.
std::int64_t wiener_lower_bound_from_degree(std::int64_t n, std::int64_t m,
                                            std::int64_t delta);

// The bound evaluated against the actual Wiener index of a graph.
struct BoundReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t d = 0;
  std::uint64_t wiener = 0;
  std::optional<std::int64_t> bound;  // absent when !applicable
  std::optional<std::int64_t> gap;    // wiener - bound
  bool tight = false;
  bool applicable = false;  // d >= 2
};

// Assembles a report from already computed invariants.
BoundReport make_report(std::int64_t n, std::int64_t m, std::int64_t d,
                        std::uint64_t wiener);

// Computes W and d for a connected graph and compares them with the bound.
// Throws DisconnectedGraphError otherwise.
BoundReport evaluate(const Graph& g, unsigned threads = 1);

}  // namespace wiener

#endif  // WIENER_BOUNDS_HPP_
