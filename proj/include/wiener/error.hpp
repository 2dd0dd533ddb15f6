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

#ifndef WIENER_ERROR_HPP_
#define WIENER_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wiener {

// Structural problem with a graph or its construction input: self-loops,
// out-of-range vertices, empty graphs where a vertex is required.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A distance operation was asked about a graph that is not connected.
class DisconnectedGraphError : public std::domain_error {
 public:
  DisconnectedGraphError()
      : std::domain_error("graph is disconnected; distances are undefined") {}
  using std::domain_error::domain_error;
};

// The inputs are outside the range where a bound or check is defined
// (for example diameter < 2 for the Wiener lower bound).
class NotApplicableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input. `line()` is 1-based, or 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wiener

#endif  // WIENER_ERROR_HPP_
