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

#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wiener/error.hpp"
#include "wiener/generators.hpp"
#include "wiener/metrics.hpp"
#include "wiener/rng.hpp"

using wiener::Graph;
using wiener::Vertex;

namespace {

std::map<std::int64_t, std::uint64_t> as_map(const wiener::DistanceDistribution& d) {
  std::map<std::int64_t, std::uint64_t> out;
  for (std::size_t k = 1; k < d.counts().size(); ++k) {
    if (d.counts()[k]) out[static_cast<std::int64_t>(k)] = d.counts()[k];
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<wiener::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace

TEST_CASE("bfs_distances") {
  CHECK(wiener::bfs_distances(wiener::path(5), 0) ==
        std::vector<wiener::Distance>{0, 1, 2, 3, 4});
  CHECK(wiener::bfs_distances(wiener::complete(4), 2) ==
        std::vector<wiener::Distance>{1, 1, 0, 1});

  const Graph p = wiener::petersen();
  for (Vertex v = 0; v < 10; ++v) {
    auto dist = wiener::bfs_distances(p, v);
    std::sort(dist.begin(), dist.end());
    CHECK(dist == std::vector<wiener::Distance>{0, 1, 1, 1, 2, 2, 2, 2, 2, 2});
  }

  CHECK_THROWS_AS(wiener::bfs_distances(wiener::path(3), 3), wiener::GraphError);
  const std::vector<wiener::Edge> split{{0, 1}};
  CHECK_THROWS_AS(wiener::bfs_distances(Graph::from_edge_list(3, split), 0),
                  wiener::DisconnectedGraphError);
}

TEST_CASE("distance_distribution") {
  // Values frozen from the Floyd-Warshall oracle and rechecked against it.
  const auto p4 = wiener::distance_distribution(wiener::path(4));
  CHECK(as_map(p4) == std::map<std::int64_t, std::uint64_t>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(as_map(p4) == oracle::distribution(oracle::all_pairs(wiener::path(4))));

  CHECK(as_map(wiener::distance_distribution(wiener::complete(5))) ==
        std::map<std::int64_t, std::uint64_t>{{1, 10}});

  const auto prism = wiener::distance_distribution(wiener::prism());
  CHECK(as_map(prism) == std::map<std::int64_t, std::uint64_t>{{1, 9}, {2, 6}});
  CHECK(as_map(prism) == oracle::distribution(oracle::all_pairs(wiener::prism())));

  const auto single = wiener::distance_distribution(Graph::edgeless(1));
  CHECK(single.total_pairs() == 0);
  CHECK(single.diameter() == 0);
  CHECK(single.wiener() == 0);
}

TEST_CASE("wiener_index examples") {
  CHECK(wiener::wiener_index(wiener::complete(2)) == 1);
  CHECK(wiener::wiener_index(wiener::path(5)) == 20);
  CHECK(wiener::wiener_index(wiener::petersen()) == 75);
  CHECK(wiener::wiener_index(wiener::star(5)) == 25);
  CHECK(wiener::wiener_index(wiener::cycle(6)) == 27);
  CHECK(wiener::wiener_index(Graph::edgeless(1)) == 0);
  CHECK_THROWS_AS(wiener::wiener_index(Graph::edgeless(2)),
                  wiener::DisconnectedGraphError);
  CHECK_THROWS_AS(wiener::wiener_index(Graph()), wiener::GraphError);
}

TEST_CASE("diameter and eccentricities") {
  CHECK(wiener::diameter(wiener::complete(7)) == 1);
  CHECK(wiener::diameter(wiener::path(7)) == 6);
  CHECK(wiener::diameter(wiener::petersen()) == 2);
  CHECK(wiener::diameter(Graph::edgeless(1)) == 0);
  CHECK(wiener::eccentricities(wiener::path(5)) ==
        std::vector<wiener::Distance>{4, 3, 2, 3, 4});
  CHECK_THROWS_AS(wiener::diameter(Graph::edgeless(3)),
                  wiener::DisconnectedGraphError);
}

TEST_CASE("diametral_path tie-breaking") {
  CHECK(wiener::diametral_path(wiener::path(5)) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(wiener::diametral_path(wiener::complete(3)) == std::vector<Vertex>{0, 1});
  CHECK(wiener::diametral_path(wiener::cycle(6)) == std::vector<Vertex>{0, 1, 2, 3});
  // Smallest-index neighbor one step closer: via 1, not 3.
  CHECK(wiener::diametral_path(wiener::cycle(4)) == std::vector<Vertex>{0, 1, 2});
  CHECK_THROWS_AS(wiener::diametral_path(Graph::edgeless(1)), wiener::GraphError);
}

TEST_CASE("diametral_partition examples") {
  const auto p5 = wiener::diametral_partition(wiener::path(5));
  CHECK(p5.x_size == 10);
  CHECK(p5.y_size == 0);
  CHECK(p5.z_size == 0);

  const auto c6 = wiener::diametral_partition(wiener::cycle(6));
  CHECK(c6.diameter() == 3);
  CHECK(c6.x_size == 6);
  CHECK(c6.y_size == 1);
  CHECK(c6.z_size == 8);

  const auto pet = wiener::diametral_partition(wiener::petersen());
  CHECK(pet.diameter() == 2);
  CHECK(pet.x_size == 3);
  CHECK(pet.y_size == 21);
  CHECK(pet.z_size == 21);
}

TEST_CASE("metrics agree with the all-pairs oracle on random graphs") {
  wiener::Rng rng(314);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.uniform(35);
    const Graph g = wiener::random_connected(n, rng.unit() * 0.4, rng);
    const auto matrix = oracle::all_pairs(g);
    const auto dist = wiener::distance_distribution(g);

    CHECK(wiener::wiener_index(g) == static_cast<std::uint64_t>(oracle::wiener(matrix)));
    CHECK(dist.wiener() == wiener::wiener_index(g));
    CHECK(dist.diameter() == oracle::diameter(matrix));
    CHECK(as_map(dist) == oracle::distribution(matrix));
    CHECK(dist.total_pairs() == n * (n - 1) / 2);
    CHECK(dist.pairs_at(1) == g.size());

    if (n >= 2) {
      const auto path = wiener::diametral_path(g);
      const auto d = static_cast<std::size_t>(dist.diameter());
      REQUIRE(path.size() == d + 1);
      CHECK(matrix[path.front()][path.back()] == static_cast<std::int64_t>(d));
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        CHECK(g.has_edge(path[i], path[i + 1]));
      }
      // Lexicographically smallest diametral pair.
      bool found = false;
      for (Vertex u = 0; u < n && !found; ++u) {
        for (Vertex v = u + 1; v < n && !found; ++v) {
          if (matrix[u][v] == static_cast<std::int64_t>(d)) {
            CHECK(path.front() == u);
            CHECK(path.back() == v);
            found = true;
          }
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("wiener_index is invariant under relabeling") {
  wiener::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.uniform(40);
    const Graph g = wiener::random_connected(n, 0.1, rng);
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(i)]);
    CHECK(wiener::wiener_index(relabel(g, perm)) == wiener::wiener_index(g));
  }
}

TEST_CASE("adding an edge never increases the Wiener index") {
  wiener::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng.uniform(30);
    const Graph g = wiener::random_connected(n, 0.05, rng);
    if (g.size() == n * (n - 1) / 2) continue;
    Vertex u = 0;
    Vertex v = 0;
    do {
      u = static_cast<Vertex>(rng.uniform(n));
      v = static_cast<Vertex>(rng.uniform(n));
    } while (u == v || g.has_edge(u, v));
    std::vector<wiener::Edge> edges = g.edges();
    edges.emplace_back(u, v);
    CHECK(wiener::wiener_index(Graph::from_edge_list(n, edges)) <=
          wiener::wiener_index(g));
  }
}

TEST_CASE("partition sizes follow the closed forms") {
  wiener::Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.uniform(50);
    const Graph g = wiener::random_connected(n, rng.unit() * 0.2, rng);
    const auto part = wiener::diametral_partition(g);
    const std::int64_t d = part.diameter();
    const auto order = static_cast<std::int64_t>(n);
    CHECK(d == wiener::diameter(g));
    CHECK(part.x_size == static_cast<std::uint64_t>(d * (d + 1) / 2));
    CHECK(part.y_size == static_cast<std::uint64_t>((order - d - 1) * (order - d - 2) / 2));
    CHECK(part.z_size == static_cast<std::uint64_t>((order - d - 1) * (d + 1)));
    CHECK(part.x_size + part.y_size + part.z_size == n * (n - 1) / 2);
  }
}

TEST_CASE("parallel and sequential results are identical") {
  const Graph g = wiener::random_connected(400, 0.01, std::uint64_t{3});
  const auto one = wiener::distance_distribution(g, 1);
  for (unsigned threads : {2U, 3U, 8U}) {
    CHECK(wiener::distance_distribution(g, threads) == one);
    CHECK(wiener::wiener_index(g, threads) == one.wiener());
    CHECK(wiener::eccentricities(g, threads) == wiener::eccentricities(g, 1));
  }
}
