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

#ifndef WIENER_PARALLEL_HPP_
#define WIENER_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wiener {

// Worker count for a request: nonzero values are taken as given; 0 means
// WIENER_THREADS when set to a positive integer, else the hardware count.
unsigned resolve_threads(unsigned requested);

// Splits [0, count) into at most `threads` contiguous chunks and runs
// fn(worker, begin, end) for each, worker in [0, chunks). With one chunk the
// call happens on the calling thread. The first exception thrown by any
// worker is rethrown after all workers finish. Returns the chunk count.
template <typename Fn>
unsigned parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t chunks_wanted =
      std::min<std::size_t>(std::max(threads, 1U), std::max<std::size_t>(count, 1));
  const auto chunks = static_cast<unsigned>(chunks_wanted);
  if (chunks == 1) {
    fn(0U, std::size_t{0}, count);
    return 1;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (unsigned w = 0; w < chunks; ++w) {
      const std::size_t begin = count * w / chunks;
      const std::size_t end = count * (w + 1) / chunks;
      workers.emplace_back([&, w, begin, end] {
        try {
          fn(w, begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return chunks;
}

}  // namespace wiener

#endif  // WIENER_PARALLEL_HPP_
