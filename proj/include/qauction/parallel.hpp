#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The qauction Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qauction::parallel {

inline std::size_t batch_count(std::uint64_t total, std::uint64_t batch)
{
  return static_cast<std::size_t>((total + batch - 1) / batch);
}

inline std::uint64_t batch_length(std::uint64_t total, std::uint64_t batch, std::size_t index)
{
  std::uint64_t const start = static_cast<std::uint64_t>(index) * batch;
  return std::min(batch, total - start);
}

/// Evaluates fn(0..count-1) on up to `threads` workers and returns the
/// results in index order. The first exception thrown by any task is
/// rethrown after all workers have joined.
template <typename T, typename Fn>
std::vector<T> map_ordered(std::size_t count, unsigned threads, Fn const &fn)
{
  std::vector<T> results(count);
  if (threads <= 1 || count <= 1)
  {
    for (std::size_t i = 0; i < count; ++i)
    {
      results[i] = fn(i);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr       failure;
  std::mutex               failure_lock;

  auto worker = [&] {
    for (;;)
    {
      std::size_t const i = next.fetch_add(1);
      if (i >= count)
      {
        return;
      }
      try
      {
        results[i] = fn(i);
      }
      catch (...)
      {
        std::lock_guard<std::mutex> guard{failure_lock};
        if (!failure)
        {
          failure = std::current_exception();
        }
        next.store(count);
      }
    }
  };

  std::vector<std::thread> pool;
  auto const workers = std::min<std::size_t>(threads, count);
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t)
  {
    pool.emplace_back(worker);
  }
  for (auto &th : pool)
  {
    th.join();
  }
  if (failure)
  {
    std::rethrow_exception(failure);
  }
  return results;
}

}  // namespace qauction::parallel
