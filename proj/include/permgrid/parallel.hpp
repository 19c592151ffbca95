#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace permgrid {

// Runs fn(shard) for shard = 0..shards-1 on up to `workers` threads and
// returns the results in shard order, so callers merging them get the same
// answer for any worker count. The first exception thrown by any shard is
// rethrown after all threads join.
template <class Fn>
auto map_shards(int shards, int workers, Fn fn) -> std::vector<decltype(fn(0))> {
  using Result = decltype(fn(0));
  std::vector<Result> results(shards);
  workers = std::clamp(workers, 1, std::max(shards, 1));
  if (workers == 1) {
    for (int s = 0; s < shards; ++s) results[s] = fn(s);
    return results;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (int s = w; s < shards; s += workers) {
        try {
          results[s] = fn(s);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace permgrid
