#pragma once

// Thread control and deterministic reductions.
//
// Reductions split the index range into fixed-size chunks whose layout does
// not depend on the thread count, accumulate each chunk serially, then
// combine chunk partials in a fixed pairwise tree. Results are bit-identical
// for any number of threads.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qps::parallel {

inline constexpr std::size_t kChunk = 128;

/// Thread count from QPS_THREADS (if set) else the OpenMP default.
int configured_threads();
void set_threads(int n);
int threads();

/// Pairwise-tree combination of partials, in index order.
template <class T, class Combine>
T tree_combine(std::vector<T> parts, Combine&& combine) {
  while (parts.size() > 1) {
    std::vector<T> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      combine(parts[i], parts[i + 1]);
      next.push_back(std::move(parts[i]));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

/// Reduces body(i, acc) over [0, n). zero() creates an empty accumulator;
/// combine(a, b) folds b into a.
template <class Zero, class Body, class Combine>
auto chunked_reduce(std::size_t n, Zero&& zero, Body&& body, Combine&& combine) {
  using T = decltype(zero());
  const std::size_t chunks = n == 0 ? 1 : (n + kChunk - 1) / kChunk;
  std::vector<T> parts(chunks);
#pragma omp parallel for schedule(static) num_threads(threads())
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    T acc = zero();
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = std::min(n, lo + kChunk);
    for (std::size_t i = lo; i < hi; ++i) body(i, acc);
    parts[static_cast<std::size_t>(c)] = std::move(acc);
  }
  return tree_combine(std::move(parts), combine);
}

/// Independent per-index work, no reduction.
template <class Body>
void for_each_index(std::size_t n, Body&& body) {
#pragma omp parallel for schedule(static) num_threads(threads())
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) body(static_cast<std::size_t>(i));
}

}  // namespace qps::parallel
