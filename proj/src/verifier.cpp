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

#include "wiener/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "wiener/error.hpp"
#include "wiener/generators.hpp"
#include "wiener/metrics.hpp"
#include "wiener/parallel.hpp"
#include "wiener/rng.hpp"

namespace wiener {

// ---------------------------------------------------------------------------
// SweepSummary

void SweepSummary::add(std::uint64_t ordinal, const Graph& g,
                       const std::optional<BoundReport>& report) {
  ++graphs_checked;
  if (!report) {
    ++disconnected;
    return;
  }
  if (!report->applicable) {
    ++not_applicable;
    return;
  }
  ++applicable;
  const std::int64_t gap = *report->gap;
  if (gap < 0) ++violations;
  min_gap = min_gap ? std::min(*min_gap, gap) : gap;
  max_gap = max_gap ? std::max(*max_gap, gap) : gap;
  if (report->tight) {
    ++tight_count;
    if (examples_.size() < example_cap_ || ordinal < examples_.back().first) {
      keep_example(ordinal, write_graph6(g));
    }
  }
}

void SweepSummary::keep_example(std::uint64_t ordinal, std::string graph6) {
  if (example_cap_ == 0) return;
  auto it = std::lower_bound(
      examples_.begin(), examples_.end(), ordinal,
      [](const auto& entry, std::uint64_t key) { return entry.first < key; });
  examples_.emplace(it, ordinal, std::move(graph6));
  if (examples_.size() > example_cap_) examples_.pop_back();
}

void SweepSummary::merge(const SweepSummary& other) {
  graphs_checked += other.graphs_checked;
  applicable += other.applicable;
  violations += other.violations;
  tight_count += other.tight_count;
  disconnected += other.disconnected;
  not_applicable += other.not_applicable;
  if (other.min_gap) min_gap = min_gap ? std::min(*min_gap, *other.min_gap) : other.min_gap;
  if (other.max_gap) max_gap = max_gap ? std::max(*max_gap, *other.max_gap) : other.max_gap;
  for (const auto& [ordinal, g6] : other.examples_) {
    if (examples_.size() < example_cap_ || ordinal < examples_.back().first) {
      keep_example(ordinal, g6);
    }
  }
}

std::vector<std::string> SweepSummary::tight_examples() const {
  std::vector<std::string> out;
  out.reserve(examples_.size());
  for (const auto& entry : examples_) out.push_back(entry.second);
  return out;
}

namespace {

// Bound report for connected inputs, empty for disconnected ones. The empty
// graph has no pairs and is treated like a single vertex.
std::optional<BoundReport> report_for(const Graph& g) {
  if (g.order() == 0) return make_report(0, 0, 0, 0);
  if (!is_connected(g)) return std::nullopt;
  return evaluate(g, 1);
}

// Runs fn(i) -> Graph for i in [0, count) over worker partitions and merges.
template <typename MakeGraph>
SweepSummary partitioned_sweep(std::uint64_t count, const SweepOptions& options,
                               MakeGraph make_graph) {
  const unsigned threads = resolve_threads(options.threads);
  std::vector<SweepSummary> partial(threads, SweepSummary(options.example_cap));
  const unsigned used = parallel_chunks(
      count, threads, [&](unsigned worker, std::size_t begin, std::size_t end) {
        auto& summary = partial[worker];
        for (std::size_t i = begin; i < end; ++i) {
          const Graph g = make_graph(i);
          summary.add(i, g, report_for(g));
        }
      });
  SweepSummary total(options.example_cap);
  for (unsigned w = 0; w < used; ++w) total.merge(partial[w]);
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sweeps

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

SweepSummary exhaustive_sweep(int n, const SweepOptions& options) {
  if (n < 2 || n > kMaxExhaustiveOrder) {
    throw std::invalid_argument("exhaustive sweep supports 2 <= n <= " +
                                std::to_string(kMaxExhaustiveOrder) + ", got " +
                                std::to_string(n));
  }
  const std::uint64_t subsets = std::uint64_t{1} << (n * (n - 1) / 2);
  return partitioned_sweep(subsets, options,
                           [n](std::uint64_t mask) { return graph_from_mask(n, mask); });
}

SweepSummary stream_sweep(std::istream& in, const StreamOptions& options,
                          std::uint64_t* skipped_lines) {
  SweepSummary summary(options.example_cap);
  std::uint64_t skipped = 0;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      if (options.skip_invalid) {
        ++skipped;
        continue;
      }
      throw ParseError(e.what(), line_no);
    }
    summary.add(line_no, g, report_for(g));
  }
  if (skipped_lines) *skipped_lines = skipped;
  return summary;
}

Graph random_sweep_graph(std::uint64_t index, std::size_t max_order,
                         std::uint64_t seed) {
  if (max_order < 2) throw std::invalid_argument("random sweep order must be >= 2");
  Rng rng(seed, index + 1);
  const std::size_t n = 2 + rng.uniform(max_order - 1);
  const double u = rng.unit();
  return random_connected(n, u * u, rng);
}

SweepSummary random_sweep(std::uint64_t count, std::size_t max_order,
                          std::uint64_t seed, const SweepOptions& options) {
  if (max_order < 2) throw std::invalid_argument("random sweep order must be >= 2");
  return partitioned_sweep(count, options, [&](std::uint64_t i) {
    return random_sweep_graph(i, max_order, seed);
  });
}

// ---------------------------------------------------------------------------
// Sharpness

Family parse_family(std::string_view name) {
  if (name == "path") return Family::kPath;
  if (name == "star") return Family::kStar;
  if (name == "prism") return Family::kPrism;
  if (name == "petersen") return Family::kPetersen;
  throw std::invalid_argument("unknown family \"" + std::string(name) +
                              "\" (expected path, star, prism or petersen)");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kPath:
      return "path";
    case Family::kStar:
      return "star";
    case Family::kPrism:
      return "prism";
    case Family::kPetersen:
      return "petersen";
  }
  return "unknown";
}

std::vector<SharpnessInstance> sharpness_scan(Family family, std::int64_t first,
                                              std::int64_t last) {
  std::vector<SharpnessInstance> out;
  auto push = [&](std::int64_t parameter, const Graph& g, bool claimed) {
    out.push_back({family, parameter, write_graph6(g), evaluate(g), claimed});
  };
  switch (family) {
    case Family::kPath:
      for (std::int64_t n = std::max<std::int64_t>(first, 1); n <= last; ++n) {
        push(n, path(static_cast<std::size_t>(n)), true);
      }
      break;
    case Family::kStar:
      for (std::int64_t m = std::max<std::int64_t>(first, 1); m <= last; ++m) {
        push(m, star(static_cast<std::size_t>(m)), m % 2 == 1);
      }
      break;
    case Family::kPrism:
      push(0, prism(), true);
      break;
    case Family::kPetersen:
      push(0, petersen(), true);
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intermediate inequalities

bool triangle_property_check(const Graph& g) {
  const auto path_vertices = diametral_path(g);
  const auto d = static_cast<std::int64_t>(path_vertices.size()) - 1;
  if (d < 3) {
    throw NotApplicableError("triangle property needs diameter >= 3, got " +
                             std::to_string(d));
  }
  std::vector<char> on_path(g.order(), 0);
  for (Vertex v : path_vertices) on_path[v] = 1;
  if (path_vertices.size() == g.order()) {
    throw NotApplicableError("every vertex lies on the diametral path");
  }

  for (std::int64_t i = 0; i <= (d - 3) / 2; ++i) {
    const auto from_left = bfs_distances(g, path_vertices[i]);
    const auto from_right = bfs_distances(g, path_vertices[d - i]);
    for (Vertex w = 0; w < g.order(); ++w) {
      if (on_path[w]) continue;
      if (static_cast<std::int64_t>(from_left[w]) + from_right[w] < d - 2 * i) {
        return false;
      }
    }
  }
  return true;
}

MonotonicityReport monotonicity_scan(std::int64_t n, std::int64_t m) {
  if (n < 3) throw std::invalid_argument("monotonicity scan needs n >= 3");
  if (m < n - 1 || m > n * (n - 1) / 2) {
    throw std::invalid_argument("monotonicity scan needs n-1 <= m <= n(n-1)/2");
  }
  MonotonicityReport report;
  report.n = n;
  report.m = m;
  for (std::int64_t d = 2; d <= n - 1; ++d) {
    const std::int64_t bound = wiener_lower_bound(n, m, d);
    if (!report.values.empty() && bound < report.values.back().second &&
        report.non_decreasing) {
      report.non_decreasing = false;
      report.first_decrease = d;
    }
    report.values.emplace_back(d, bound);
  }
  return report;
}

}  // namespace wiener
