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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wiener/bounds.hpp"
#include "wiener/error.hpp"
#include "wiener/generators.hpp"
#include "wiener/graph.hpp"
#include "wiener/metrics.hpp"
#include "wiener/rng.hpp"
#include "wiener/verifier.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using wiener::Graph;

// Heavy calls drop the GIL; none of them touch Python objects.
using release = py::call_guard<py::gil_scoped_release>;

py::dict report_dict(const wiener::BoundReport& r) {
  py::dict out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["d"] = r.d;
  out["wiener"] = r.wiener;
  out["bound"] = r.bound;
  out["gap"] = r.gap;
  out["tight"] = r.tight;
  out["applicable"] = r.applicable;
  return out;
}

py::dict summary_dict(const wiener::SweepSummary& s) {
  py::dict out;
  out["graphs_checked"] = s.graphs_checked;
  out["applicable"] = s.applicable;
  out["violations"] = s.violations;
  out["tight_count"] = s.tight_count;
  out["min_gap"] = s.min_gap;
  out["max_gap"] = s.max_gap;
  out["tight_examples"] = s.tight_examples();
  out["disconnected"] = s.disconnected;
  out["not_applicable"] = s.not_applicable;
  return out;
}

}  // namespace

PYBIND11_MODULE(_wiener, m) {
  m.doc() = "Exact Wiener index and its diameter lower bound";
  m.attr("__version__") = WIENER_VERSION;

  py::register_exception<wiener::GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<wiener::DisconnectedGraphError>(m, "DisconnectedGraphError",
                                                         PyExc_ValueError);
  py::register_exception<wiener::NotApplicableError>(m, "NotApplicableError",
                                                     PyExc_ValueError);
  py::register_exception<wiener::ParseError>(m, "ParseError", PyExc_ValueError);

  // ---- graph -------------------------------------------------------------

  py::class_<Graph>(m, "Graph", "Simple undirected graph on vertices 0..n-1.")
      .def(py::init([](std::size_t n, const std::vector<wiener::Edge>& edges) {
             return Graph::from_edge_list(n, edges);
           }),
           "n"_a, "edges"_a = std::vector<wiener::Edge>{},
           "Duplicate and reversed pairs collapse; self-loops and out-of-range "
           "vertices raise GraphError.")
      .def_static("from_graph6", &wiener::parse_graph6, "text"_a)
      .def("to_graph6", &wiener::write_graph6)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, wiener::Vertex v) {
             if (v >= g.order()) throw py::index_error("vertex out of range");
             auto span = g.neighbors(v);
             return std::vector<wiener::Vertex>(span.begin(), span.end());
           },
           "v"_a)
      .def("degree",
           [](const Graph& g, wiener::Vertex v) {
             if (v >= g.order()) throw py::index_error("vertex out of range");
             return g.degree(v);
           },
           "v"_a)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("has_edge", &Graph::has_edge, "u"_a, "v"_a)
      .def("is_connected", &wiener::is_connected)
      .def("to_edge_list",
           [](const Graph& g) {
             std::ostringstream out;
             wiener::write_edge_list(out, g);
             return out.str();
           })
      .def_static("from_edge_list_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    std::size_t line = 0;
                    auto g = wiener::read_edge_list(in, line);
                    if (!g) throw wiener::ParseError("no graph in input", line);
                    return *g;
                  },
                  "text"_a, "Parses the first 'n m' edge-list block.")
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) +
               ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph6", &wiener::parse_graph6, "text"_a);
  m.def("write_graph6", &wiener::write_graph6, "graph"_a);

  // ---- metrics -----------------------------------------------------------

  m.def("wiener_index", &wiener::wiener_index, "graph"_a, "threads"_a = 1, release());
  m.def(
      "distance_distribution",
      [](const Graph& g, unsigned threads) {
        return wiener::distance_distribution(g, threads).counts();
      },
      "graph"_a, "threads"_a = 1, release(),
      "Pair counts by distance: element k is the number of pairs at distance k.");
  m.def("eccentricities", &wiener::eccentricities, "graph"_a, "threads"_a = 1, release());
  m.def("diameter", &wiener::diameter, "graph"_a, "threads"_a = 1, release());
  m.def("diametral_path", &wiener::diametral_path, "graph"_a, "threads"_a = 1, release());

  py::class_<wiener::DiametralPartition>(m, "DiametralPartition")
      .def_readonly("path", &wiener::DiametralPartition::path)
      .def_readonly("x_size", &wiener::DiametralPartition::x_size)
      .def_readonly("y_size", &wiener::DiametralPartition::y_size)
      .def_readonly("z_size", &wiener::DiametralPartition::z_size)
      .def_property_readonly("diameter", &wiener::DiametralPartition::diameter);
  m.def("diametral_partition", &wiener::diametral_partition, "graph"_a, "threads"_a = 1,
        release());

  // ---- bounds ------------------------------------------------------------

  m.def("path_excess", &wiener::path_excess, "d"_a);
  m.def("off_path_excess", &wiener::off_path_excess, "d"_a);
  m.def("wiener_lower_bound", &wiener::wiener_lower_bound, "n"_a, "m"_a, "d"_a);
  m.def("diameter_two_wiener", &wiener::diameter_two_wiener, "n"_a, "m"_a);

  py::class_<wiener::MooreResult>(m, "MooreResult")
      .def_readonly("delta", &wiener::MooreResult::delta)
      .def_readonly("d", &wiener::MooreResult::d)
      .def_readonly("n_max", &wiener::MooreResult::n_max);
  m.def("moore_bound", &wiener::moore_bound, "delta"_a, "d"_a);
  m.def("moore_diameter_lower_bound", &wiener::moore_diameter_lower_bound, "n"_a,
        "delta"_a);
  m.def("wiener_lower_bound_from_degree", &wiener::wiener_lower_bound_from_degree, "n"_a,
        "m"_a, "delta"_a);

  py::class_<wiener::BoundReport>(m, "BoundReport")
      .def_readonly("n", &wiener::BoundReport::n)
      .def_readonly("m", &wiener::BoundReport::m)
      .def_readonly("d", &wiener::BoundReport::d)
      .def_readonly("wiener", &wiener::BoundReport::wiener)
      .def_readonly("bound", &wiener::BoundReport::bound)
      .def_readonly("gap", &wiener::BoundReport::gap)
      .def_readonly("tight", &wiener::BoundReport::tight)
      .def_readonly("applicable", &wiener::BoundReport::applicable)
      .def("to_dict", &report_dict)
      .def("__repr__", [](const wiener::BoundReport& r) {
        return "BoundReport(n=" + std::to_string(r.n) + ", m=" + std::to_string(r.m) +
               ", d=" + std::to_string(r.d) + ", wiener=" + std::to_string(r.wiener) +
               ", bound=" + (r.bound ? std::to_string(*r.bound) : "None") + ")";
      });
  m.def("evaluate", &wiener::evaluate, "graph"_a, "threads"_a = 1, release());

  // ---- generators --------------------------------------------------------

  m.def("path", &wiener::path, "n"_a);
  m.def("cycle", &wiener::cycle, "n"_a);
  m.def("star", &wiener::star, "m"_a, "Star with m leaves (order m + 1).");
  m.def("complete", &wiener::complete, "n"_a);
  m.def("cartesian_product", &wiener::cartesian_product, "g"_a, "h"_a);
  m.def("petersen", &wiener::petersen);
  m.def("prism", &wiener::prism);
  m.def(
      "random_tree",
      [](std::size_t n, std::uint64_t seed) {
        wiener::Rng rng(seed);
        return wiener::random_tree(n, rng);
      },
      "n"_a, "seed"_a);
  m.def("random_connected",
        py::overload_cast<std::size_t, double, std::uint64_t>(&wiener::random_connected),
        "n"_a, "p"_a, "seed"_a,
        "Uniform random spanning tree plus each other pair with probability p.");

  // ---- verification ------------------------------------------------------

  py::class_<wiener::SweepSummary>(m, "SweepSummary")
      .def_readonly("graphs_checked", &wiener::SweepSummary::graphs_checked)
      .def_readonly("applicable", &wiener::SweepSummary::applicable)
      .def_readonly("violations", &wiener::SweepSummary::violations)
      .def_readonly("tight_count", &wiener::SweepSummary::tight_count)
      .def_readonly("disconnected", &wiener::SweepSummary::disconnected)
      .def_readonly("not_applicable", &wiener::SweepSummary::not_applicable)
      .def_readonly("min_gap", &wiener::SweepSummary::min_gap)
      .def_readonly("max_gap", &wiener::SweepSummary::max_gap)
      .def_property_readonly("tight_examples", &wiener::SweepSummary::tight_examples)
      .def("to_dict", &summary_dict)
      .def(py::self == py::self);

  m.def(
      "exhaustive_sweep",
      [](int n, unsigned threads, std::size_t example_cap) {
        return wiener::exhaustive_sweep(n, {threads, example_cap});
      },
      "n"_a, "threads"_a = 1, "example_cap"_a = wiener::SweepSummary::kDefaultExampleCap,
      release());
  m.def(
      "random_sweep",
      [](std::uint64_t count, std::size_t max_order, std::uint64_t seed, unsigned threads,
         std::size_t example_cap) {
        return wiener::random_sweep(count, max_order, seed, {threads, example_cap});
      },
      "count"_a, "max_order"_a, "seed"_a, "threads"_a = 1,
      "example_cap"_a = wiener::SweepSummary::kDefaultExampleCap, release());
  m.def(
      "stream_sweep",
      [](const std::string& text, bool skip_invalid, std::size_t example_cap) {
        std::istringstream in(text);
        std::uint64_t skipped = 0;
        auto summary = wiener::stream_sweep(in, {skip_invalid, example_cap}, &skipped);
        return std::make_pair(std::move(summary), skipped);
      },
      "text"_a, "skip_invalid"_a = false,
      "example_cap"_a = wiener::SweepSummary::kDefaultExampleCap, release(),
      "Sweeps graph6 lines; returns (summary, skipped_lines).");

  py::class_<wiener::SharpnessInstance>(m, "SharpnessInstance")
      .def_property_readonly("family",
                             [](const wiener::SharpnessInstance& s) {
                               return std::string(wiener::family_name(s.family));
                             })
      .def_readonly("parameter", &wiener::SharpnessInstance::parameter)
      .def_readonly("graph6", &wiener::SharpnessInstance::graph6)
      .def_readonly("report", &wiener::SharpnessInstance::report)
      .def_readonly("claimed_tight", &wiener::SharpnessInstance::claimed_tight);
  m.def(
      "sharpness_scan",
      [](const std::string& family, std::int64_t first, std::int64_t last) {
        return wiener::sharpness_scan(wiener::parse_family(family), first, last);
      },
      "family"_a, "first"_a = 0, "last"_a = 0);

  m.def("triangle_property_check", &wiener::triangle_property_check, "graph"_a);

  py::class_<wiener::MonotonicityReport>(m, "MonotonicityReport")
      .def_readonly("n", &wiener::MonotonicityReport::n)
      .def_readonly("m", &wiener::MonotonicityReport::m)
      .def_readonly("values", &wiener::MonotonicityReport::values)
      .def_readonly("non_decreasing", &wiener::MonotonicityReport::non_decreasing)
      .def_readonly("first_decrease", &wiener::MonotonicityReport::first_decrease);
  m.def("monotonicity_scan", &wiener::monotonicity_scan, "n"_a, "m"_a);
}
