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

#ifndef WIENER_GENERATORS_HPP_
#define WIENER_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>

#include "wiener/graph.hpp"
#include "wiener/rng.hpp"

namespace wiener {

// Canonical labelings: path edges (i, i+1); cycle adds (n-1, 0); star has
// center 0 and leaves 1..m; complete has every pair. Parameters below the
// stated minimum throw GraphError.
Graph path(std::size_t n);      // n >= 1
Graph cycle(std::size_t n);     // n >= 3
Graph star(std::size_t m);      // m >= 1, order m + 1
Graph complete(std::size_t n);  // n >= 1

// G x H with vertex (g, h) at index g * |V(H)| + h.
Graph cartesian_product(const Graph& g, const Graph& h);

// Kneser graph K(5, 2): 2-subsets of {0..4} listed lexicographically,
// adjacent when disjoint.
Graph petersen();

// Triangular prism C3 x K2.
Graph prism();

// Uniform random labeled tree from a random Pruefer sequence, plus every
// remaining pair (i, j), taken in lexicographic order, added independently
// with probability p. Always connected. The two-argument forms draw from
// Rng(seed, 0).
Graph random_tree(std::size_t n, Rng& rng);
Graph random_connected(std::size_t n, double p, Rng& rng);
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

}  // namespace wiener

#endif  // WIENER_GENERATORS_HPP_
