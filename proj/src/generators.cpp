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

#include "wiener/generators.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "wiener/error.hpp"

namespace wiener {

namespace {

void require_at_least(std::size_t value, std::size_t minimum, const char* what) {
  if (value < minimum) {
    throw GraphError(std::string(what) + " must be at least " +
                     std::to_string(minimum) + ", got " + std::to_string(value));
  }
}

}  // namespace

Graph path(std::size_t n) {
  require_at_least(n, 1, "path order");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edge_list(n, edges);
}

Graph cycle(std::size_t n) {
  require_at_least(n, 3, "cycle order");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edge_list(n, edges);
}

Graph star(std::size_t m) {
  require_at_least(m, 1, "star size");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= m; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edge_list(m + 1, edges);
}

Graph complete(std::size_t n) {
  require_at_least(n, 1, "complete graph order");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edge_list(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  auto index = [nh](std::size_t a, std::size_t b) {
    return static_cast<Vertex>(a * nh + b);
  };
  std::vector<Edge> edges;
  edges.reserve(ng * h.size() + nh * g.size());
  for (std::size_t a = 0; a < ng; ++a) {
    for (const auto& [b1, b2] : h.edges()) edges.emplace_back(index(a, b1), index(a, b2));
  }
  for (std::size_t b = 0; b < nh; ++b) {
    for (const auto& [a1, a2] : g.edges()) edges.emplace_back(index(a1, b), index(a2, b));
  }
  return Graph::from_edge_list(ng * nh, edges);
}

Graph petersen() {
  std::vector<std::array<int, 2>> subsets;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) subsets.push_back({a, b});
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const auto& s = subsets[i];
      const auto& t = subsets[j];
      if (s[0] != t[0] && s[0] != t[1] && s[1] != t[0] && s[1] != t[1]) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::from_edge_list(subsets.size(), edges);
}

Graph prism() { return cartesian_product(cycle(3), complete(2)); }

Graph random_tree(std::size_t n, Rng& rng) {
  require_at_least(n, 1, "tree order");
  if (n <= 2) return path(n);

  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.uniform(n));

  // Linear-time decoding: `ptr` scans for the smallest leaf, and a vertex
  // that just became a leaf below `ptr` is used immediately.
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : code) {
    edges.emplace_back(static_cast<Vertex>(leaf), v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return Graph::from_edge_list(n, edges);
}

Graph random_connected(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw GraphError("edge probability must lie in [0, 1]");
  }
  Graph tree = random_tree(n, rng);
  if (p == 0.0) return tree;

  std::vector<Edge> edges = tree.edges();
  const auto& tree_edges = tree.edges();
  auto next_tree = tree_edges.begin();
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (next_tree != tree_edges.end() && *next_tree == Edge{i, j}) {
        ++next_tree;
        continue;
      }
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  return random_connected(n, p, rng);
}

}  // namespace wiener
