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

#ifndef WIENER_VERIFIER_HPP_
#define WIENER_VERIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wiener/bounds.hpp"
#include "wiener/graph.hpp"

namespace wiener {

// Aggregate of bound evaluations over a corpus.
//
// Each graph enters with an ordinal (enumeration mask, corpus index or line
// number). merge() is associative and commutative: counters add, gaps take
// min/max, and tight_examples keeps the `example_cap` smallest ordinals, so
// any partition of a corpus merges to the same summary.
class SweepSummary {
 public:
  static constexpr std::size_t kDefaultExampleCap = 100;

  explicit SweepSummary(std::size_t example_cap = kDefaultExampleCap)
      : example_cap_(example_cap) {}

  std::uint64_t graphs_checked = 0;
  std::uint64_t applicable = 0;      // connected with d >= 2
  std::uint64_t violations = 0;      // gap < 0; must stay 0
  std::uint64_t tight_count = 0;
  std::uint64_t disconnected = 0;    // skipped
  std::uint64_t not_applicable = 0;  // connected with d < 2, skipped
  std::optional<std::int64_t> min_gap;
  std::optional<std::int64_t> max_gap;

  // Records one input. `report` is empty for disconnected graphs.
  void add(std::uint64_t ordinal, const Graph& g,
           const std::optional<BoundReport>& report);
  void merge(const SweepSummary& other);

  std::size_t example_cap() const { return example_cap_; }
  // graph6 strings of tight graphs, by increasing ordinal.
  std::vector<std::string> tight_examples() const;

  // Compares every counter and the example list.
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;

 private:
  void keep_example(std::uint64_t ordinal, std::string graph6);

  std::size_t example_cap_;
  std::vector<std::pair<std::uint64_t, std::string>> examples_;  // sorted
};

struct SweepOptions {
  unsigned threads = 1;  // 0 = resolve_threads default
  std::size_t example_cap = SweepSummary::kDefaultExampleCap;
};

// Largest order accepted by exhaustive_sweep: 2^21 labeled graphs.
inline constexpr int kMaxExhaustiveOrder = 7;

// Every labeled graph on n vertices, 2 <= n <= 7. Edge subset `mask` uses
// bit k for the k-th pair in graph6 column order (0,1), (0,2), (1,2), (0,3)...
// and is the ordinal. Throws std::invalid_argument for other n.
SweepSummary exhaustive_sweep(int n, const SweepOptions& options = {});

// Builds the labeled graph for one exhaustive-sweep mask.
Graph graph_from_mask(int n, std::uint64_t mask);

struct StreamOptions {
  bool skip_invalid = false;  // skip malformed lines instead of throwing
  std::size_t example_cap = SweepSummary::kDefaultExampleCap;
};

// One graph6 graph per line; blank lines are ignored, ordinal = line number.
// Malformed lines throw ParseError carrying the line number unless
// skip_invalid is set, in which case they are counted in `skipped_lines`.
SweepSummary stream_sweep(std::istream& in, const StreamOptions& options = {},
                          std::uint64_t* skipped_lines = nullptr);

// `count` graphs, graph i drawn from Rng(seed, i + 1): order uniform in
// [2, max_order], extra-edge probability u^2 with u uniform in [0, 1), then
// random_connected with the same generator. Ordinal = i.
SweepSummary random_sweep(std::uint64_t count, std::size_t max_order,
                          std::uint64_t seed, const SweepOptions& options = {});

// The i-th graph of random_sweep(count, max_order, seed), for any count > i.
Graph random_sweep_graph(std::uint64_t index, std::size_t max_order,
                         std::uint64_t seed);

enum class Family { kPath, kStar, kPrism, kPetersen };

// Parses "path", "star", "prism" or "petersen"; throws std::invalid_argument.
Family parse_family(std::string_view name);
std::string_view family_name(Family family);

struct SharpnessInstance {
  Family family;
  std::int64_t parameter;  // order for paths, leaf count for stars, else 0
  std::string graph6;
  BoundReport report;
  // Membership in the expected witness set: paths, odd-leaf stars, prism and
  // Petersen. Even-leaf stars are tight as well and are reported as findings.
  bool claimed_tight;
};

// Bound reports for a family over [first, last] (ignored for prism and
// petersen, which have a single instance).
std::vector<SharpnessInstance> sharpness_scan(Family family, std::int64_t first,
                                              std::int64_t last);

// For the diametral path u_0..u_d and every w off the path, checks
// dist(u_i, w) + dist(w, u_{d-i}) >= d - 2i for 0 <= i <= floor((d-3)/2).
// Throws NotApplicableError when d < 3 or the path covers every vertex, and
// DisconnectedGraphError for disconnected graphs.
bool triangle_property_check(const Graph& g);

struct MonotonicityReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> values;  // (d, bound)
  bool non_decreasing = true;
  std::optional<std::int64_t> first_decrease;  // d where bound(d) < bound(d-1)
};

// Evaluates the bound for d = 2..n-1 with n, m fixed. A decrease is a
// finding, not an error. Requires n >= 3 and n-1 <= m <= n(n-1)/2.
MonotonicityReport monotonicity_scan(std::int64_t n, std::int64_t m);

}  // namespace wiener

#endif  // WIENER_VERIFIER_HPP_
