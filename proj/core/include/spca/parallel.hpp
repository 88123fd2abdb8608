// Copyright 2026 The spca authors
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

#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace spca {

/// Runs fn(begin, end) over a partition of [0, total) on `threads` workers
/// (0 = hardware concurrency).  Workers receive disjoint contiguous ranges,
/// so writes to per-index slots need no synchronization and results are
/// identical for any worker count.  The first worker exception is rethrown.
template <typename Fn>
void parallel_ranges(std::uint64_t total, int threads, Fn&& fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  if (total == 0) return;
  if (threads == 1 || total == 1) {
    fn(std::uint64_t{0}, total);
    return;
  }
  std::uint64_t workers = std::min<std::uint64_t>(threads, total);
  std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    std::uint64_t begin = w * chunk;
    std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace spca
