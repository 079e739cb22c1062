// Deterministic fork/join over an index range. The range is split into
// contiguous chunks, each chunk is folded left-to-right, and the partial
// results are combined in chunk order, so for an associative combine with
// `init` as identity the result is independent of the thread count.

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace semialg {

template <typename R, typename Map, typename Combine>
R map_reduce_indices(std::size_t n, R init, Map&& map, Combine&& combine,
                     unsigned threads = 1) {
  if (threads <= 1 || n < 2 * threads) {
    R acc = init;
    for (std::size_t i = 0; i < n; ++i) acc = combine(std::move(acc), map(i));
    return acc;
  }
  const std::size_t chunks = std::min<std::size_t>(threads, n);
  std::vector<R> partial(chunks, init);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  const std::size_t per = n / chunks;
  const std::size_t extra = n % chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t end = begin + per + (c < extra ? 1 : 0);
    pool.emplace_back([&, c, begin, end] {
      R acc = init;
      for (std::size_t i = begin; i < end; ++i) {
        acc = combine(std::move(acc), map(i));
      }
      partial[c] = std::move(acc);
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  R acc = init;
  for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
  return acc;
}

}  // namespace semialg
