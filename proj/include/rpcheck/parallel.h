// Copyright 2026 The rpcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RPCHECK_PARALLEL_H_
#define RPCHECK_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rpcheck {

// Splits [0, count) into at most `workers` contiguous chunks and runs
// fn(chunk, begin, end) for each, chunk 0 on the calling thread. Chunk
// boundaries depend only on (count, workers). The first exception (by chunk
// order) is rethrown after all chunks finish.
template <typename Fn>
void ForEachChunk(std::size_t count, int workers, Fn&& fn) {
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(
                                   count, static_cast<std::size_t>(
                                              std::max(workers, 1))));
  std::vector<std::exception_ptr> errors(chunks);
  auto run = [&](std::size_t c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    try {
      fn(c, begin, end);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> threads;
    for (std::size_t c = 1; c < chunks; ++c) threads.emplace_back(run, c);
    run(0);
  }
  for (auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace rpcheck

#endif  // RPCHECK_PARALLEL_H_
