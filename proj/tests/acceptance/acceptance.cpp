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

// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Every random input is seeded, so a run is reproducible bit for bit.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "wiener/bounds.hpp"
#include "wiener/error.hpp"
#include "wiener/generators.hpp"
#include "wiener/graph.hpp"
#include "wiener/metrics.hpp"
#include "wiener/parallel.hpp"
#include "wiener/rng.hpp"
#include "wiener/verifier.hpp"

namespace {

using wiener::Graph;

constexpr std::uint64_t kRandomSweepCount = 10'000;
constexpr std::size_t kRandomSweepMaxOrder = 50;
constexpr std::uint64_t kRandomSweepSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("%s  %2d  %-28s %8.2fs  %s\n", out.pass ? "PASS" : "FAIL", id, name,
              secs, out.detail.c_str());
  std::fflush(stdout);
}

// Accumulates failed checks with the first few messages kept.
struct Checker {
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed == 0) return {true, summary + ", " + std::to_string(checks) + " checks"};
    return {false, std::to_string(failed) + "/" + std::to_string(checks) +
                       " checks failed; first: " + first};
  }
};

std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Moore numbers by the geometric closed form in 128-bit arithmetic.
__int128 moore_closed_form(std::int64_t delta, std::int64_t d) {
  if (delta == 2) return 2 * d + 1;
  __int128 power = 1;
  for (std::int64_t i = 0; i < d; ++i) power *= delta - 1;
  return 1 + delta * (power - 1) / (delta - 2);
}

bool round_trips(const Graph& g, Checker& c, const std::string& label) {
  const std::string s = wiener::write_graph6(g);
  const Graph back = wiener::parse_graph6(s);
  const bool ok = back == g && wiener::write_graph6(back) == s;
  c.expect(ok, label + " (" + s + ")");
  return ok;
}

std::vector<Graph> sharpness_family() {
  std::vector<Graph> out;
  for (std::size_t n = 3; n <= 32; ++n) out.push_back(wiener::path(n));
  for (std::size_t m = 2; m <= 31; ++m) out.push_back(wiener::star(m));
  out.push_back(wiener::prism());
  out.push_back(wiener::petersen());
  return out;
}

Outcome sharpness() {
  Checker c;
  for (const auto family : {wiener::Family::kPath, wiener::Family::kStar}) {
    const bool path = family == wiener::Family::kPath;
    for (const auto& inst :
         wiener::sharpness_scan(family, path ? 3 : 2, path ? 32 : 31)) {
      const auto& r = inst.report;
      c.expect(r.applicable && r.gap == 0,
               std::string(wiener::family_name(family)) + " " + str(inst.parameter) +
                   ": gap " + (r.gap ? str(*r.gap) : "n/a"));
    }
  }
  const auto pet = wiener::evaluate(wiener::petersen());
  c.expect(pet.wiener == 75 && pet.bound == 75 && pet.gap == 0, "petersen 75/75");
  const auto prism = wiener::evaluate(wiener::prism());
  c.expect(prism.wiener == 21 && prism.bound == 21 && prism.gap == 0, "prism 21/21");
  const auto p5 = wiener::evaluate(wiener::path(5));
  c.expect(p5.wiener == 20 && p5.bound == 20 && p5.gap == 0, "P5 20/20");
  return c.outcome("P3..P32, K1,2..K1,31, prism=21, Petersen=75 all gap 0");
}

Outcome exhaustive() {
  Checker c;
  const unsigned threads = wiener::resolve_threads(0);
  std::string detail;
  for (int n = 3; n <= wiener::kMaxExhaustiveOrder; ++n) {
    const auto s = wiener::exhaustive_sweep(n, {threads, 1});
    c.expect(s.violations == 0, "n=" + str(n) + " violations " + str(as_signed(s.violations)));
    c.expect(s.tight_count >= 1, "n=" + str(n) + " has no tight graph");
    detail += " n" + str(n) + ":" + str(as_signed(s.applicable)) + "/" +
              str(as_signed(s.tight_count));
  }
  return c.outcome("applicable/tight" + detail + ", " + str(threads) + " workers");
}

Outcome random_soundness() {
  Checker c;
  const auto s = wiener::random_sweep(kRandomSweepCount, kRandomSweepMaxOrder,
                                      kRandomSweepSeed, {wiener::resolve_threads(0), 1});
  c.expect(s.graphs_checked == kRandomSweepCount, "graph count");
  c.expect(s.disconnected == 0, "generator produced a disconnected graph");
  c.expect(s.violations == 0, "violations " + str(as_signed(s.violations)));
  return c.outcome(str(as_signed(s.applicable)) + " applicable, gap " +
                   (s.min_gap ? str(*s.min_gap) : "-") + ".." +
                   (s.max_gap ? str(*s.max_gap) : "-"));
}

Outcome diameter_two_law() {
  Checker c;
  wiener::Rng rng(404);
  int found = 0;
  std::uint64_t attempts = 0;
  while (found < 1000 && attempts < 100'000) {
    ++attempts;
    const std::size_t n = 3 + rng.uniform(38);
    const Graph g = wiener::random_connected(n, 0.3 + 0.65 * rng.unit(), rng);
    if (wiener::diameter(g) != 2) continue;
    ++found;
    const auto order = static_cast<std::int64_t>(n);
    const auto size = static_cast<std::int64_t>(g.size());
    const auto w = as_signed(wiener::wiener_index(g));
    c.expect(w == order * (order - 1) - size, "W != n(n-1)-m for " + wiener::write_graph6(g));
    c.expect(wiener::wiener_lower_bound(order, size, 2) == w, "bound at d=2 not exact");
  }
  c.expect(found == 1000, "only " + str(found) + " diameter-2 graphs generated");
  return c.outcome(str(found) + " diameter-2 graphs from " + str(as_signed(attempts)) +
                   " draws");
}

Outcome closed_forms() {
  Checker c;
  for (std::int64_t d = 2; d <= 200; ++d) {
    c.expect(wiener::path_excess(d) == oracle::path_excess_sum(d), "path excess d=" + str(d));
  }
  for (std::int64_t d = 3; d <= 201; ++d) {
    c.expect(wiener::off_path_excess(d) == oracle::off_path_excess_series(d),
             "off-path excess d=" + str(d));
  }
  return c.outcome("path excess d=2..200, off-path excess d=3..201");
}

Outcome partitions() {
  Checker c;
  wiener::Rng rng(606);
  int found = 0;
  while (found < 500) {
    const std::size_t n = 3 + rng.uniform(58);
    const double u = rng.unit();
    const Graph g = wiener::random_connected(n, 0.3 * u * u, rng);
    const auto part = wiener::diametral_partition(g);
    const std::int64_t d = part.diameter();
    if (d < 2) continue;
    ++found;
    const auto order = static_cast<std::int64_t>(n);
    const std::string label = wiener::write_graph6(g);
    c.expect(as_signed(part.x_size) == d * (d + 1) / 2, "path pairs " + label);
    c.expect(as_signed(part.y_size) == (order - d - 1) * (order - d - 2) / 2,
             "off-path pairs " + label);
    c.expect(as_signed(part.z_size) == (order - d - 1) * (d + 1), "mixed pairs " + label);
    c.expect(as_signed(part.x_size + part.y_size + part.z_size) == order * (order - 1) / 2,
             "total " + label);
  }
  return c.outcome(str(found) + " graphs");
}

// Library check plus a recomputation from the Floyd-Warshall matrix.
Outcome triangle_property() {
  Checker c;
  wiener::Rng rng(707);
  int found = 0;
  while (found < 200) {
    const std::size_t n = 5 + rng.uniform(36);
    const double u = rng.unit();
    const Graph g = wiener::random_connected(n, 0.1 * u * u, rng);
    const auto path = wiener::diametral_path(g);
    const auto d = static_cast<std::int64_t>(path.size()) - 1;
    if (d < 3 || path.size() == n) continue;
    ++found;
    const std::string label = wiener::write_graph6(g);
    c.expect(wiener::triangle_property_check(g), "library check " + label);

    const auto dist = oracle::all_pairs(g);
    std::vector<char> on_path(n, 0);
    for (auto v : path) on_path[v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
      if (on_path[w]) continue;
      for (std::int64_t i = 0; i <= (d - 3) / 2; ++i) {
        const auto a = path[static_cast<std::size_t>(i)];
        const auto b = path[static_cast<std::size_t>(d - i)];
        c.expect(dist[a][w] + dist[w][b] >= d - 2 * i,
                 "oracle " + label + " w=" + str(static_cast<std::int64_t>(w)));
      }
    }
  }
  return c.outcome(str(found) + " graphs with d >= 3");
}

Outcome moore_inversion() {
  Checker c;
  c.expect(wiener::moore_bound(3, 2).n_max == 10, "moore_bound(3,2) != 10");
  for (std::int64_t delta = 2; delta <= 8; ++delta) {
    for (std::int64_t n = 2; n <= 10'000; ++n) {
      std::int64_t smallest = 1;
      while (moore_closed_form(delta, smallest) < n) ++smallest;
      c.expect(wiener::moore_diameter_lower_bound(n, delta) == smallest,
               "delta=" + str(delta) + " n=" + str(n));
    }
  }
  return c.outcome("delta=2..8, n=2..10000, moore(3,2)=10");
}

Outcome oracle_equivalence() {
  Checker c;
  wiener::Rng rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.uniform(40);
    const Graph g = wiener::random_connected(n, 0.4 * rng.unit(), rng);
    const auto matrix = oracle::all_pairs(g);
    c.expect(as_signed(wiener::wiener_index(g)) == oracle::wiener(matrix),
             "wiener " + wiener::write_graph6(g));
    c.expect(static_cast<std::int64_t>(wiener::diameter(g)) == oracle::diameter(matrix),
             "diameter " + wiener::write_graph6(g));
  }
  return c.outcome("100 graphs, n <= 40");
}

Outcome performance() {
  constexpr std::size_t n = 10'000;
  // Tree edges n-1 plus about 40001 extra over the remaining pairs.
  const double p = 40'001.0 / (static_cast<double>(n) * (n - 1) / 2 - (n - 1));
  const Graph g = wiener::random_connected(n, p, std::uint64_t{1});
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t w = wiener::wiener_index(g, 1);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Checker c;
  c.expect(secs <= 60.0, "took " + std::to_string(secs) + " s");
  return c.outcome("m=" + str(static_cast<std::int64_t>(g.size())) + ", W=" +
                   str(as_signed(w)) + ", " + std::to_string(secs) + " s single-threaded");
}

Outcome graph6_round_trip() {
  Checker c;
  std::uint64_t graphs = 0;
  for (const Graph& g : sharpness_family()) {
    round_trips(g, c, "sharpness family");
    ++graphs;
  }
  for (int n = 3; n <= wiener::kMaxExhaustiveOrder; ++n) {
    const std::uint64_t masks = 1ULL << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      round_trips(wiener::graph_from_mask(n, mask), c, "exhaustive n=" + str(n));
      ++graphs;
    }
  }
  for (std::uint64_t i = 0; i < kRandomSweepCount; ++i) {
    round_trips(wiener::random_sweep_graph(i, kRandomSweepMaxOrder, kRandomSweepSeed), c,
                "random #" + str(as_signed(i)));
    ++graphs;
  }
  return c.outcome(str(as_signed(graphs)) + " graphs");
}

}  // namespace

int main() {
  run(1, "sharpness families", sharpness);
  run(2, "exhaustive soundness n<=7", exhaustive);
  run(3, "random soundness", random_soundness);
  run(4, "diameter-two equality", diameter_two_law);
  run(5, "closed forms vs sums", closed_forms);
  run(6, "partition cardinalities", partitions);
  run(7, "triangle property", triangle_property);
  run(8, "Moore inversion", moore_inversion);
  run(9, "BFS vs Floyd-Warshall", oracle_equivalence);
  run(10, "performance n=10^4", performance);
  run(11, "graph6 round trip", graph6_round_trip);
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
