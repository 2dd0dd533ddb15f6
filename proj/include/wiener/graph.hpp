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

#ifndef WIENER_GRAPH_HPP_
#define WIENER_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wiener {

using Vertex = std::uint32_t;

// Unordered vertex pair, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are kept sorted and deduplicated; adjacency is stored in compressed
// (CSR) form with each neighbor list sorted ascending. Connectivity is not
// required: generators and exhaustive enumeration produce disconnected graphs,
// and distance operations reject them instead.
class Graph {
 public:
  // The graph with no vertices.
  Graph() : offsets_(1, 0) {}

  // Builds a graph from arbitrary pairs. Duplicates (in either orientation)
  // collapse to one edge. Throws GraphError on a self-loop or on a vertex
  // index >= n.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs);

  // Empty graph (no edges) on n vertices.
  static Graph edgeless(std::size_t n);

  std::size_t order() const { return offsets_.size() - 1; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  // `edges` must already be normalized, sorted and unique.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// True iff a traversal from vertex 0 reaches every vertex. Throws GraphError
// for the graph with no vertices.
bool is_connected(const Graph& g);

// graph6 interchange. Orders up to 62 use the single-byte header, orders
// 63..258047 the four-byte form (126 followed by three 6-bit groups).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge-list text: a header line "n m" followed by m lines "u v". Blank lines
// are ignored. Returns std::nullopt at end of input, so several graphs may be
// concatenated in one stream. `line` tracks the 1-based line number for
// diagnostics and is advanced past the consumed lines.
std::optional<Graph> read_edge_list(std::istream& in, std::size_t& line);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace wiener

#endif  // WIENER_GRAPH_HPP_
