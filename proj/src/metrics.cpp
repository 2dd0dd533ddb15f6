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

#include "wiener/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "wiener/error.hpp"
#include "wiener/parallel.hpp"

namespace wiener {

namespace {

constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError();
}

// Reusable BFS state for one worker; O(n) memory.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(std::size_t n) : dist_(n, kUnreached), queue_(n) {}

  // Fills dist() for every vertex reachable from `source` and adds the number
  // of vertices found at each distance k >= 1 into histogram[k] and their
  // distances into distance_sum. Returns the number of vertices reached,
  // source included.
  std::size_t run(const Graph& g, Vertex source,
                  std::vector<std::uint64_t>& histogram,
                  std::uint64_t& distance_sum) {
    clear();
    dist_[source] = 0;
    queue_[0] = source;
    std::size_t head = 0;
    tail_ = 1;
    while (head < tail_) {
      const Vertex v = queue_[head++];
      const Distance next = dist_[v] + 1;
      for (Vertex w : g.neighbors(v)) {
        if (dist_[w] == kUnreached) {
          dist_[w] = next;
          queue_[tail_++] = w;
          ++histogram[next];
          distance_sum += next;
        }
      }
    }
    return tail_;
  }

  const std::vector<Distance>& dist() const { return dist_; }

  // Distance of the last vertex dequeued, i.e. the eccentricity of the
  // source within its component.
  Distance farthest() const { return dist_[queue_[tail_ - 1]]; }

 private:
  void clear() {
    for (std::size_t i = 0; i < tail_; ++i) dist_[queue_[i]] = kUnreached;
    tail_ = 0;
  }

  std::vector<Distance> dist_;
  std::vector<Vertex> queue_;
  std::size_t tail_ = 0;
};

// One BFS per source. `ordered` collects ordered-pair counts per distance,
// `ordered_sum` the plain sum of all ordered-pair distances, and `ecc` (only
// when requested) each source's eccentricity.
struct AllSources {
  std::vector<std::uint64_t> ordered;
  std::uint64_t ordered_sum = 0;
  std::vector<Distance> ecc;
};

AllSources run_all_sources(const Graph& g, unsigned threads, bool want_ecc) {
  const std::size_t n = g.order();
  AllSources out;
  out.ordered.assign(n, 0);
  if (want_ecc) out.ecc.assign(n, 0);
  threads = resolve_threads(threads);

  std::vector<std::vector<std::uint64_t>> partial(threads);
  std::vector<std::uint64_t> partial_sum(threads, 0);
  const unsigned used = parallel_chunks(
      n, threads, [&](unsigned worker, std::size_t begin, std::size_t end) {
        auto& histogram = partial[worker];
        histogram.assign(n, 0);
        BfsWorkspace bfs(n);
        for (std::size_t s = begin; s < end; ++s) {
          bfs.run(g, static_cast<Vertex>(s), histogram, partial_sum[worker]);
          if (want_ecc) out.ecc[s] = bfs.farthest();
        }
      });
  // Elementwise sums are order-independent, so the merge is deterministic.
  for (unsigned w = 0; w < used; ++w) {
    out.ordered_sum += partial_sum[w];
    for (std::size_t k = 0; k < n; ++k) out.ordered[k] += partial[w][k];
  }
  return out;
}

}  // namespace

DistanceDistribution::DistanceDistribution(std::size_t order,
                                           std::vector<std::uint64_t> counts)
    : order_(order), counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  if (counts_.empty()) counts_.push_back(0);
}

std::uint64_t DistanceDistribution::total_pairs() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

Distance DistanceDistribution::diameter() const {
  return static_cast<Distance>(counts_.size() - 1);
}

std::uint64_t DistanceDistribution::wiener() const {
  std::uint64_t sum = 0;
  for (std::size_t k = 1; k < counts_.size(); ++k) sum += k * counts_[k];
  return sum;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw GraphError("source vertex " + std::to_string(source) +
                     " out of range");
  }
  BfsWorkspace bfs(g.order());
  std::vector<std::uint64_t> histogram(g.order(), 0);
  std::uint64_t distance_sum = 0;
  if (bfs.run(g, source, histogram, distance_sum) != g.order()) {
    throw DisconnectedGraphError();
  }
  return bfs.dist();
}

DistanceDistribution distance_distribution(const Graph& g, unsigned threads) {
  require_connected(g);
  auto all = run_all_sources(g, threads, false);
  for (auto& c : all.ordered) c /= 2;
  return DistanceDistribution(g.order(), std::move(all.ordered));
}

std::uint64_t wiener_index(const Graph& g, unsigned threads) {
  require_connected(g);
  // Halved per-source totals; DistanceDistribution::wiener() is the
  // histogram route to the same number.
  return run_all_sources(g, threads, false).ordered_sum / 2;
}

std::vector<Distance> eccentricities(const Graph& g, unsigned threads) {
  require_connected(g);
  return run_all_sources(g, threads, true).ecc;
}

Distance diameter(const Graph& g, unsigned threads) {
  const auto ecc = eccentricities(g, threads);
  return *std::max_element(ecc.begin(), ecc.end());
}

std::vector<Vertex> diametral_path(const Graph& g, unsigned threads) {
  if (g.order() < 2) throw GraphError("diametral path needs at least 2 vertices");
  const auto ecc = eccentricities(g, threads);
  const Distance d = *std::max_element(ecc.begin(), ecc.end());
  // The smallest u with ecc(u) = d has its farthest partners all above it:
  // a partner w < u would itself have ecc(w) = d.
  const auto u = static_cast<Vertex>(
      std::find(ecc.begin(), ecc.end(), d) - ecc.begin());
  const auto dist = bfs_distances(g, u);
  auto v = static_cast<Vertex>(std::find(dist.begin(), dist.end(), d) -
                               dist.begin());

  std::vector<Vertex> path{v};
  while (v != u) {
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] + 1 == dist[v]) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

DiametralPartition diametral_partition(const Graph& g, unsigned threads) {
  DiametralPartition out;
  out.path = diametral_path(g, threads);
  std::vector<char> on_path(g.order(), 0);
  for (Vertex v : out.path) on_path[v] = 1;
  const std::uint64_t inside =
      static_cast<std::uint64_t>(std::count(on_path.begin(), on_path.end(), 1));
  const std::uint64_t outside = g.order() - inside;
  out.x_size = inside * (inside - 1) / 2;
  out.y_size = outside == 0 ? 0 : outside * (outside - 1) / 2;
  out.z_size = inside * outside;
  return out;
}

}  // namespace wiener
