// Deterministic trial parallelism: trials are split into fixed contiguous
// chunks, each trial derives its own RNG stream from (seed, trial index), and
// results land in per-trial slots that are reduced in index order afterwards.
// Output is therefore identical for any worker count.

#ifndef RSS_PARALLEL_HPP
#define RSS_PARALLEL_HPP

#include <thread>
#include <vector>

namespace rss {

template <class Fn>
void parallel_for(long begin, long end, int workers, Fn&& fn) {
  const long count = end - begin;
  if (count <= 0) return;
  if (workers <= 1 || count == 1) {
    for (long i = begin; i < end; ++i) fn(i);
    return;
  }
  const long n_threads = std::min<long>(workers, count);
  const long chunk = (count + n_threads - 1) / n_threads;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (long w = 0; w < n_threads; ++w) {
    const long lo = begin + w * chunk;
    const long hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace rss

#endif  // RSS_PARALLEL_HPP
