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

#include "wiener/bounds.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "wiener/error.hpp"
#include "wiener/metrics.hpp"

namespace wiener {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in bound arithmetic");
  }
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in bound arithmetic");
  }
  return r;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (num % den != 0) {
    throw std::logic_error("inexact division " + std::to_string(num) + " / " +
                           std::to_string(den));
  }
  return num / den;
}

std::int64_t pair_count(std::int64_t n) { return exact_div(mul(n, n - 1), 2); }

}  // namespace

std::int64_t path_excess(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("diameter must be nonnegative");
  if (d < 2) return 0;
  return exact_div(mul(mul(d, d - 1), d - 2), 6);
}

std::int64_t off_path_excess(std::int64_t d) {
  if (d < 2) {
    throw NotApplicableError("off-path excess needs diameter >= 2, got " +
                             std::to_string(d));
  }
  if (d % 2 == 1) {
    return exact_div(mul(d - 3, d - 3), 4);
  }
  return exact_div(mul(d - 2, d - 4), 4);
}

std::int64_t wiener_lower_bound(std::int64_t n, std::int64_t m,
                                std::int64_t d) {
  if (d < 2) {
    throw NotApplicableError(
        "the Wiener lower bound requires diameter d >= 2 (complete graphs are "
        "excluded), got d = " +
        std::to_string(d));
  }
  if (n <= d) {
    throw std::invalid_argument("inconsistent parameters: order n = " +
                                std::to_string(n) + " must exceed diameter d = " +
                                std::to_string(d));
  }
  if (m < n - 1 || m > pair_count(n)) {
    throw std::invalid_argument(
        "inconsistent parameters: a connected graph of order " +
        std::to_string(n) + " has between n-1 and n(n-1)/2 edges, got m = " +
        std::to_string(m));
  }
  std::int64_t bound = diameter_two_wiener(n, m);
  bound = add(bound, path_excess(d));
  bound = add(bound, mul(n - d - 1, off_path_excess(d)));
  return bound;
}

std::int64_t diameter_two_wiener(std::int64_t n, std::int64_t m) {
  return add(mul(n, n - 1), -m);
}

MooreResult moore_bound(std::int64_t delta, std::int64_t d) {
  if (delta < 2) {
    throw NotApplicableError("Moore bound needs maximum degree >= 2, got " +
                             std::to_string(delta));
  }
  if (d < 1) throw std::invalid_argument("Moore bound needs diameter >= 1");
  // 1 + delta * (1 + (delta-1) + ... + (delta-1)^(d-1))
  std::int64_t term = 1;
  std::int64_t series = 0;
  for (std::int64_t i = 0; i < d; ++i) {
    series = add(series, term);
    if (i + 1 < d) term = mul(term, delta - 1);
  }
  return {delta, d, add(1, mul(delta, series))};
}

std::int64_t moore_diameter_lower_bound(std::int64_t n, std::int64_t delta) {
  if (delta < 2) {
    throw NotApplicableError("Moore bound needs maximum degree >= 2, got " +
                             std::to_string(delta));
  }
  if (n < 2) throw std::invalid_argument("order must be at least 2");
  // 1 + delta * series >= n  <=>  series >= ceil((n - 1) / delta).
  // Terms saturate at the target, keeping every intermediate below 2n.
  const std::int64_t target = (n - 2) / delta + 1;
  std::int64_t term = 1;
  std::int64_t series = 0;
  for (std::int64_t d = 1;; ++d) {
    series += term;
    if (series >= target) return d;
    std::int64_t next;
    if (__builtin_mul_overflow(term, delta - 1, &next) || next > target) {
      next = target;
    }
    term = next;
  }
}

std::int64_t wiener_lower_bound_from_degree(std::int64_t n, std::int64_t m,
                                            std::int64_t delta) {
  std::int64_t d = moore_diameter_lower_bound(n, delta);
  if (d < 2) {
    if (m >= pair_count(n)) {
      throw NotApplicableError(
          "the Wiener lower bound requires diameter d >= 2; with m = n(n-1)/2 "
          "the graph is complete (d = 1)");
    }
    d = 2;
  }
  return wiener_lower_bound(n, m, d);
}

BoundReport make_report(std::int64_t n, std::int64_t m, std::int64_t d,
                        std::uint64_t wiener) {
  BoundReport r;
  r.n = n;
  r.m = m;
  r.d = d;
  r.wiener = wiener;
  r.applicable = d >= 2;
  if (r.applicable) {
    if (wiener > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw std::overflow_error("Wiener index exceeds signed 64-bit range");
    }
    r.bound = wiener_lower_bound(n, m, d);
    r.gap = static_cast<std::int64_t>(wiener) - *r.bound;
    r.tight = *r.gap == 0;
  }
  return r;
}

BoundReport evaluate(const Graph& g, unsigned threads) {
  const auto dist = distance_distribution(g, threads);
  return make_report(static_cast<std::int64_t>(g.order()),
                     static_cast<std::int64_t>(g.size()), dist.diameter(),
                     dist.wiener());
}

}  // namespace wiener
