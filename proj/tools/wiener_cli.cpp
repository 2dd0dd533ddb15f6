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

// Command-line front end: compute, bound, verify, generate and scan.
//
// Exit codes: 0 success, 1 bound violation found, 2 input or usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wiener/bounds.hpp"
#include "wiener/error.hpp"
#include "wiener/generators.hpp"
#include "wiener/graph.hpp"
#include "wiener/metrics.hpp"
#include "wiener/parallel.hpp"
#include "wiener/verifier.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Thrown for command-level input problems; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Either the named file or standard input ("-" or empty).
class InputSource {
 public:
  explicit InputSource(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw UsageError("cannot open " + path);
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json record_json(const std::string& graph6, const wiener::Graph& g,
                 const std::optional<wiener::BoundReport>& r) {
  Json j;
  j["graph6"] = graph6;
  j["n"] = g.order();
  j["m"] = g.size();
  if (r) {
    j["d"] = r->d;
    j["wiener"] = r->wiener;
  } else {
    j["d"] = nullptr;
    j["wiener"] = nullptr;
  }
  j["bound"] = r ? optional_json(r->bound) : Json(nullptr);
  j["gap"] = r ? optional_json(r->gap) : Json(nullptr);
  j["tight"] = r && r->tight;
  j["applicable"] = r && r->applicable;
  return j;
}

Json summary_json(const wiener::SweepSummary& s) {
  Json j;
  j["graphs_checked"] = s.graphs_checked;
  j["applicable"] = s.applicable;
  j["violations"] = s.violations;
  j["tight_count"] = s.tight_count;
  j["min_gap"] = optional_json(s.min_gap);
  j["max_gap"] = optional_json(s.max_gap);
  j["tight_examples"] = s.tight_examples();
  j["disconnected"] = s.disconnected;
  j["not_applicable"] = s.not_applicable;
  return j;
}

std::string cell(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string input;
  std::string format = "g6";
  bool allow_disconnected = false;
  bool json = false;
  unsigned threads = 0;
};

int run_compute(const ComputeArgs& args) {
  InputSource source(args.input);
  std::istream& in = source.stream();
  const unsigned threads = wiener::resolve_threads(args.threads);

  if (!args.json) {
    std::cout << std::left << std::setw(24) << "graph6" << std::right
              << std::setw(8) << "n" << std::setw(10) << "m" << std::setw(6)
              << "d" << std::setw(16) << "wiener" << std::setw(16) << "bound"
              << std::setw(10) << "gap" << "  tight\n";
  }

  auto emit = [&](const wiener::Graph& g, std::size_t line) {
    std::optional<wiener::BoundReport> report;
    if (g.order() > 0 && wiener::is_connected(g)) {
      report = wiener::evaluate(g, threads);
    } else if (g.order() == 0) {
      report = wiener::make_report(0, 0, 0, 0);
    } else if (!args.allow_disconnected) {
      throw wiener::ParseError(
          "graph is disconnected (pass --allow-disconnected to report it)", line);
    }
    const std::string g6 = wiener::write_graph6(g);
    if (args.json) {
      std::cout << record_json(g6, g, report).dump() << '\n';
      return;
    }
    std::string shown = g6.size() > 22 ? g6.substr(0, 19) + "..." : g6;
    std::cout << std::left << std::setw(24) << shown << std::right
              << std::setw(8) << g.order() << std::setw(10) << g.size()
              << std::setw(6) << (report ? std::to_string(report->d) : "-")
              << std::setw(16)
              << (report ? std::to_string(report->wiener) : "-")
              << std::setw(16) << (report ? cell(report->bound) : "-")
              << std::setw(10) << (report ? cell(report->gap) : "-") << "  "
              << (report && report->tight ? "yes" : "no") << '\n';
  };

  if (args.format == "g6") {
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
      ++line;
      while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
      if (text.empty()) continue;
      wiener::Graph g;
      try {
        g = wiener::parse_graph6(text);
      } catch (const wiener::ParseError& e) {
        throw wiener::ParseError(e.what(), line);
      }
      emit(g, line);
    }
  } else if (args.format == "edgelist") {
    std::size_t line = 0;
    while (true) {
      const std::size_t start = line + 1;
      auto g = wiener::read_edge_list(in, line);
      if (!g) break;
      emit(*g, start);
    }
  } else {
    throw UsageError("unknown format \"" + args.format + "\" (g6 or edgelist)");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bound

struct BoundArgs {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> delta;
  bool trace = false;
  bool json = false;
};

int run_bound(const BoundArgs& args) {
  std::int64_t d = 0;
  std::optional<std::int64_t> moore_d;
  if (args.delta) {
    moore_d = wiener::moore_diameter_lower_bound(args.n, *args.delta);
    // Delegates the clamp and the complete-graph exclusion.
    (void)wiener::wiener_lower_bound_from_degree(args.n, args.m, *args.delta);
    d = std::max<std::int64_t>(*moore_d, 2);
  } else {
    d = *args.d;
  }
  const std::int64_t bound = wiener::wiener_lower_bound(args.n, args.m, d);
  const std::int64_t base = args.n * (args.n - 1);
  const std::int64_t path_term = wiener::path_excess(d);
  const std::int64_t off_path_term = (args.n - d - 1) * wiener::off_path_excess(d);

  if (args.json) {
    Json j;
    j["n"] = args.n;
    j["m"] = args.m;
    if (args.delta) {
      j["delta"] = *args.delta;
      j["moore_diameter"] = *moore_d;
    }
    j["d"] = d;
    j["bound"] = bound;
    if (args.trace) {
      j["terms"] = Json{{"all_pairs_twice", base},
                        {"minus_edges", -args.m},
                        {"diametral_path_excess", path_term},
                        {"off_path_excess", off_path_term}};
    }
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  if (args.trace) {
    if (args.delta) {
      std::cout << "Moore diameter lower bound (delta = " << *args.delta
                << "): " << *moore_d << ", using d = " << d << '\n';
    }
    std::cout << "  n(n-1)                          " << std::setw(14) << base
              << "   every pair counted at distance 2\n"
              << "  -m                              " << std::setw(14) << -args.m
              << "   adjacent pairs are 1 closer\n"
              << "  d(d-1)(d-2)/6                   " << std::setw(14) << path_term
              << "   excess along a diametral path\n"
              << "  (n-d-1) * off-path excess       " << std::setw(14)
              << off_path_term << "   "
              << (d % 2 ? "((d-3)/2)^2" : "(d-2)(d-4)/4")
              << " per vertex off the path\n"
              << "  bound                           " << std::setw(14) << bound
              << '\n';
    return kExitOk;
  }
  std::cout << bound << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::optional<int> exhaustive;
  std::optional<std::string> stream;
  std::optional<std::uint64_t> random;
  std::size_t order = 30;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::size_t cap = wiener::SweepSummary::kDefaultExampleCap;
  bool skip_invalid = false;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  const int modes = (args.exhaustive ? 1 : 0) + (args.stream ? 1 : 0) +
                    (args.random ? 1 : 0);
  if (modes != 1) {
    throw UsageError("choose exactly one of --exhaustive, --stream, --random");
  }
  const wiener::SweepOptions options{args.threads, args.cap};
  const auto start = std::chrono::steady_clock::now();
  wiener::SweepSummary summary;
  std::uint64_t skipped = 0;
  if (args.exhaustive) {
    summary = wiener::exhaustive_sweep(*args.exhaustive, options);
  } else if (args.stream) {
    InputSource source(*args.stream);
    summary = wiener::stream_sweep(source.stream(),
                                   {args.skip_invalid, args.cap}, &skipped);
  } else {
    summary = wiener::random_sweep(*args.random, args.order, args.seed, options);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (args.json) {
    Json j = summary_json(summary);
    if (args.stream && args.skip_invalid) j["skipped_lines"] = skipped;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "graphs checked   " << summary.graphs_checked << '\n'
              << "applicable       " << summary.applicable << '\n'
              << "violations       " << summary.violations << '\n'
              << "tight            " << summary.tight_count << '\n'
              << "gap range        " << cell(summary.min_gap) << " .. "
              << cell(summary.max_gap) << '\n'
              << "disconnected     " << summary.disconnected << '\n'
              << "diameter < 2     " << summary.not_applicable << '\n';
    if (args.stream && args.skip_invalid) {
      std::cout << "skipped lines    " << skipped << '\n';
    }
    std::cout << "elapsed          " << std::fixed << std::setprecision(3)
              << seconds << " s\n";
  }
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string family;
  std::optional<std::size_t> parameter;
  double p = 0.1;
  std::uint64_t seed = 1;
  std::string emit = "g6";
};

int run_generate(const GenerateArgs& args) {
  auto need = [&](const char* what) -> std::size_t {
    if (!args.parameter) throw UsageError(args.family + " needs " + what);
    return *args.parameter;
  };
  wiener::Graph g;
  if (args.family == "path") {
    g = wiener::path(need("an order"));
  } else if (args.family == "cycle") {
    g = wiener::cycle(need("an order"));
  } else if (args.family == "star") {
    g = wiener::star(need("a leaf count"));
  } else if (args.family == "complete") {
    g = wiener::complete(need("an order"));
  } else if (args.family == "prism") {
    g = wiener::prism();
  } else if (args.family == "petersen") {
    g = wiener::petersen();
  } else if (args.family == "random") {
    g = wiener::random_connected(need("an order"), args.p, args.seed);
  } else {
    throw UsageError("unknown family \"" + args.family + "\"");
  }
  if (args.emit == "g6") {
    std::cout << wiener::write_graph6(g) << '\n';
  } else if (args.emit == "edgelist") {
    wiener::write_edge_list(std::cout, g);
  } else {
    throw UsageError("unknown output format \"" + args.emit + "\" (g6 or edgelist)");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  std::string family;
  std::int64_t first = 3;
  std::int64_t last = 12;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string input;
  bool json = false;
};

int run_sharpness(const ScanArgs& args) {
  const auto family = wiener::parse_family(args.family);
  const auto instances = wiener::sharpness_scan(family, args.first, args.last);
  bool any_violation = false;
  for (const auto& inst : instances) {
    const auto& r = inst.report;
    if (r.gap && *r.gap < 0) any_violation = true;
    if (args.json) {
      Json j;
      j["family"] = std::string(wiener::family_name(inst.family));
      j["parameter"] = inst.parameter;
      j["graph6"] = inst.graph6;
      j["n"] = r.n;
      j["m"] = r.m;
      j["d"] = r.d;
      j["wiener"] = r.wiener;
      j["bound"] = optional_json(r.bound);
      j["gap"] = optional_json(r.gap);
      j["tight"] = r.tight;
      j["applicable"] = r.applicable;
      j["claimed_tight"] = inst.claimed_tight;
      std::cout << j.dump() << '\n';
      continue;
    }
    std::cout << wiener::family_name(inst.family) << ' ' << inst.parameter
              << ": n=" << r.n << " m=" << r.m << " d=" << r.d
              << " W=" << r.wiener << " bound=" << cell(r.bound)
              << " gap=" << cell(r.gap) << (r.tight ? " tight" : "");
    // Tight but not among the originally listed witnesses.
    if (r.tight && !inst.claimed_tight) std::cout << " (finding: tight outside the expected witness set)";
    std::cout << '\n';
  }
  return any_violation ? kExitViolation : kExitOk;
}

int run_monotonicity(const ScanArgs& args) {
  const auto report = wiener::monotonicity_scan(args.n, args.m);
  if (args.json) {
    Json values = Json::array();
    for (const auto& [d, b] : report.values) values.push_back({{"d", d}, {"bound", b}});
    Json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["values"] = values;
    j["non_decreasing"] = report.non_decreasing;
    j["first_decrease"] = optional_json(report.first_decrease);
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& [d, b] : report.values) std::cout << "d=" << d << "  " << b << '\n';
    if (report.non_decreasing) {
      std::cout << "non-decreasing in d\n";
    } else {
      std::cout << "finding: bound decreases at d=" << *report.first_decrease << '\n';
    }
  }
  return kExitOk;
}

int run_triangle(const ScanArgs& args) {
  InputSource source(args.input);
  std::string text;
  std::size_t line = 0;
  bool all_hold = true;
  while (std::getline(source.stream(), text)) {
    ++line;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
    if (text.empty()) continue;
    wiener::Graph g;
    try {
      g = wiener::parse_graph6(text);
    } catch (const wiener::ParseError& e) {
      throw wiener::ParseError(e.what(), line);
    }
    std::string status;
    try {
      const bool holds = wiener::triangle_property_check(g);
      all_hold = all_hold && holds;
      status = holds ? "holds" : "fails";
    } catch (const wiener::NotApplicableError&) {
      status = "not-applicable";
    }
    if (args.json) {
      std::cout << Json{{"graph6", text}, {"triangle_property", status}}.dump() << '\n';
    } else {
      std::cout << text << ' ' << status << '\n';
    }
  }
  return all_hold ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiener index computation and lower-bound verification"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* cmd_compute = app.add_subcommand("compute", "Wiener index and bound for each input graph");
  cmd_compute->add_option("input", compute.input, "input file (default: stdin)");
  cmd_compute->add_option("--format", compute.format, "g6 or edgelist")
      ->check(CLI::IsMember({"g6", "edgelist"}));
  cmd_compute->add_flag("--allow-disconnected", compute.allow_disconnected,
                        "report disconnected graphs instead of failing");
  cmd_compute->add_flag("--json", compute.json, "one JSON object per line");
  cmd_compute->add_option("--threads", compute.threads, "BFS workers (0 = default)");

  BoundArgs bound;
  auto* cmd_bound = app.add_subcommand("bound", "evaluate the lower bound from n, m and d (or max degree)");
  cmd_bound->add_option("--n", bound.n, "order")->required();
  cmd_bound->add_option("--m", bound.m, "size")->required();
  auto* opt_d = cmd_bound->add_option("--d", bound.d, "diameter");
  auto* opt_delta = cmd_bound->add_option("--delta", bound.delta,
                                          "maximum degree (diameter from the Moore bound)");
  opt_d->excludes(opt_delta);
  cmd_bound->add_flag("--trace", bound.trace, "print each term");
  cmd_bound->add_flag("--json", bound.json, "JSON output");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "check the bound over a corpus");
  cmd_verify->add_option("--exhaustive", verify.exhaustive, "all labeled graphs of this order (2..7)");
  cmd_verify->add_option("--stream", verify.stream, "graph6 file, one per line ('-' for stdin)");
  cmd_verify->add_option("--random", verify.random, "number of random connected graphs");
  cmd_verify->add_option("--order", verify.order, "maximum order for --random");
  cmd_verify->add_option("--seed", verify.seed, "seed for --random");
  cmd_verify->add_option("--threads", verify.threads, "workers (0 = WIENER_THREADS or hardware)");
  cmd_verify->add_option("--cap", verify.cap, "maximum tight examples kept");
  cmd_verify->add_flag("--skip-invalid", verify.skip_invalid, "skip malformed stream lines");
  cmd_verify->add_flag("--json", verify.json, "JSON summary");

  GenerateArgs generate;
  auto* cmd_generate = app.add_subcommand("generate", "emit a named graph");
  cmd_generate->add_option("family", generate.family,
                           "path, cycle, star, complete, prism, petersen or random")
      ->required();
  cmd_generate->add_option("parameter", generate.parameter, "order (leaf count for star)");
  cmd_generate->add_option("--p", generate.p, "extra edge probability for random");
  cmd_generate->add_option("--seed", generate.seed, "seed for random");
  cmd_generate->add_option("--emit", generate.emit, "g6 or edgelist")
      ->check(CLI::IsMember({"g6", "edgelist"}));

  ScanArgs scan;
  auto* cmd_scan = app.add_subcommand("scan", "sharpness, monotonicity and triangle-inequality scans");
  cmd_scan->require_subcommand(1);
  auto* cmd_sharp = cmd_scan->add_subcommand("sharpness", "bound gaps over a witness family");
  cmd_sharp->add_option("--family", scan.family, "path, star, prism or petersen")->required();
  cmd_sharp->add_option("--from", scan.first, "first parameter");
  cmd_sharp->add_option("--to", scan.last, "last parameter");
  cmd_sharp->add_flag("--json", scan.json, "JSON lines");
  auto* cmd_mono = cmd_scan->add_subcommand("monotonicity", "bound as a function of d for fixed n, m");
  cmd_mono->add_option("--n", scan.n, "order")->required();
  cmd_mono->add_option("--m", scan.m, "size")->required();
  cmd_mono->add_flag("--json", scan.json, "JSON output");
  auto* cmd_tri = cmd_scan->add_subcommand("triangle", "off-path triangle inequality per graph6 line");
  cmd_tri->add_option("input", scan.input, "graph6 file (default: stdin)");
  cmd_tri->add_flag("--json", scan.json, "JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_compute->parsed()) return run_compute(compute);
    if (cmd_bound->parsed()) {
      if (!bound.d && !bound.delta) throw UsageError("bound needs --d or --delta");
      return run_bound(bound);
    }
    if (cmd_verify->parsed()) return run_verify(verify);
    if (cmd_generate->parsed()) return run_generate(generate);
    if (cmd_sharp->parsed()) return run_sharpness(scan);
    if (cmd_mono->parsed()) return run_monotonicity(scan);
    if (cmd_tri->parsed()) return run_triangle(scan);
  } catch (const wiener::NotApplicableError& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wiener::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
