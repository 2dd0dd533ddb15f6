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

#include "wiener/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "wiener/error.hpp"

namespace wiener {

namespace {

constexpr std::size_t kMaxOrder = std::numeric_limits<Vertex>::max() - 1;

// graph6 bytes carry 6 bits each, offset into the printable range 63..126.
constexpr unsigned char kGraph6Bias = 63;
constexpr unsigned char kGraph6Max = 126;
constexpr std::size_t kGraph6ShortLimit = 62;
constexpr std::size_t kGraph6LongLimit = 258047;

std::size_t pair_bit_count(std::size_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : edges_(std::move(edges)), offsets_(n + 1, 0) {
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];

  // With edges sorted by (u, v), the smaller neighbors of x arrive as (w, x)
  // in increasing w and the larger ones as (x, w) in increasing w. Placing
  // the smaller block first leaves every list sorted without a second pass.
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> low_cursor(offsets_.begin(), offsets_.end() - 1);
  std::vector<std::size_t> high_cursor(low_cursor);
  for (const auto& [u, v] : edges_) ++high_cursor[v];
  for (const auto& [u, v] : edges_) {
    adjacency_[high_cursor[u]++] = v;
    adjacency_[low_cursor[v]++] = u;
  }
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> pairs) {
  if (n > kMaxOrder) throw GraphError("vertex count too large");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") has a vertex out of range for n = " +
                       std::to_string(n));
    }
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

Graph Graph::edgeless(std::size_t n) {
  if (n > kMaxOrder) throw GraphError("vertex count too large");
  return Graph(n, {});
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order(); ++v) {
    best = std::max(best, degree(static_cast<Vertex>(v)));
  }
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw GraphError("connectivity of the empty graph is undefined");
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input");
  for (unsigned char c : text) {
    if (c < kGraph6Bias || c > kGraph6Max) {
      throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) +
                       " outside 63..126");
    }
  }

  auto group = [&](std::size_t i) -> std::size_t {
    return static_cast<unsigned char>(text[i]) - kGraph6Bias;
  };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != kGraph6Max) {
    n = group(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated extended header");
    if (static_cast<unsigned char>(text[1]) == kGraph6Max) {
      throw ParseError("graph6: orders above 258047 are not supported");
    }
    n = (group(1) << 12) | (group(2) << 6) | group(3);
    if (n <= kGraph6ShortLimit) {
      throw ParseError("graph6: extended header used for order " +
                       std::to_string(n));
    }
    pos = 4;
  }

  const std::size_t bits = pair_bit_count(n);
  const std::size_t data_bytes = (bits + 5) / 6;
  if (text.size() - pos != data_bytes) {
    throw ParseError("graph6: expected " + std::to_string(data_bytes) +
                     " data bytes for order " + std::to_string(n) + ", got " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((group(pos + k / 6) >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t pad = 6 - bits % 6;
    if (group(text.size() - 1) & ((1U << pad) - 1)) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6LongLimit) {
    throw GraphError("graph6: orders above 258047 are not supported");
  }
  std::string out;
  if (n <= kGraph6ShortLimit) {
    out.push_back(static_cast<char>(kGraph6Bias + n));
  } else {
    out.push_back(static_cast<char>(kGraph6Max));
    out.push_back(static_cast<char>(kGraph6Bias + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kGraph6Bias + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kGraph6Bias + (n & 63)));
  }
  std::vector<unsigned char> groups((pair_bit_count(n) + 5) / 6, 0);
  // Column-major upper triangle: pair (i, j), i < j, sits at j(j-1)/2 + i.
  for (const auto& [i, j] : g.edges()) {
    const std::size_t k = static_cast<std::size_t>(j) * (j - 1) / 2 + i;
    groups[k / 6] |= static_cast<unsigned char>(1 << (5 - k % 6));
  }
  for (unsigned char group : groups) out.push_back(static_cast<char>(kGraph6Bias + group));
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text

namespace {

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Splits a line into exactly two nonnegative decimal integers.
std::pair<std::uint64_t, std::uint64_t> two_numbers(std::string_view s,
                                                    std::size_t line) {
  std::uint64_t out[2];
  std::size_t idx = 0;
  std::size_t i = 0;
  while (true) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i == s.size()) break;
    if (idx == 2) throw ParseError("expected two integers, found more", line);
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), out[idx]);
    const std::size_t end = static_cast<std::size_t>(ptr - s.data());
    if (ec != std::errc() ||
        (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != '\r')) {
      throw ParseError("malformed integer in \"" + std::string(s) + "\"", line);
    }
    ++idx;
    i = end;
  }
  if (idx != 2) throw ParseError("expected two integers", line);
  return {out[0], out[1]};
}

}  // namespace

std::optional<Graph> read_edge_list(std::istream& in, std::size_t& line) {
  std::string text;
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line;
    if (!is_blank(text)) {
      have_header = true;
      break;
    }
  }
  if (!have_header) return std::nullopt;

  const auto [n, m] = two_numbers(text, line);
  if (n > kMaxOrder) throw ParseError("vertex count too large", line);
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1U << 20)));
  while (pairs.size() < m) {
    if (!std::getline(in, text)) {
      throw ParseError("unexpected end of input: header declared " +
                           std::to_string(m) + " edges, read " +
                           std::to_string(pairs.size()),
                       line);
    }
    ++line;
    if (is_blank(text)) continue;
    const auto [u, v] = two_numbers(text, line);
    if (u >= n || v >= n) throw ParseError("vertex out of range", line);
    if (u == v) throw ParseError("self-loop", line);
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edge_list(n, pairs);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace wiener
