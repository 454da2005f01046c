#ifndef DIOPH_PARALLEL_HPP
#define DIOPH_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace dioph {

// Block-partitioned reduction over [0, n). Each worker reduces a contiguous
// block; partial results are merged in block order, so the result does not
// depend on the number of threads or their scheduling.
template <class R, class BlockFn, class Merge>
R parallel_block_reduce(std::uint64_t n, unsigned threads, R init, BlockFn block, Merge merge) {
  if (n == 0) return init;
  unsigned t = std::max(1u, threads);
  t = unsigned(std::min<std::uint64_t>(t, n));
  if (t == 1) {
    R r = init;
    merge(r, block(0, n));
    return r;
  }
  std::vector<R> partials(t, init);
  std::vector<std::exception_ptr> failures(t);
  std::vector<std::thread> pool;
  std::uint64_t chunk = (n + t - 1) / t;
  for (unsigned w = 0; w < t; ++w) {
    std::uint64_t lo = std::uint64_t(w) * chunk;
    std::uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi]() {
      try {
        partials[w] = block(lo, hi);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  R r = init;
  for (unsigned w = 0; w < t; ++w) merge(r, partials[w]);
  return r;
}

inline unsigned hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace dioph

#endif
