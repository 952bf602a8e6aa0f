#pragma once

// Deterministic index-space parallelism: every element is computed
// independently and stored by index, so results are identical for any
// worker count.

#include <cstddef>
#include <thread>
#include <vector>

namespace harmonia {

template <typename Fn>
void parallel_for_index(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  const unsigned n_threads = static_cast<unsigned>(
      std::min<std::size_t>(workers, count));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([t, n_threads, count, &fn] {
      for (std::size_t i = t; i < count; i += n_threads)
        fn(i);
    });
  }
  for (std::thread& th : pool)
    th.join();
}

}  // namespace harmonia
