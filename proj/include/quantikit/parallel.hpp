#pragma once

#include <cstddef>

namespace quantikit {

/// Execution policy for the exhaustive scan kernels. The serial variant is
/// the reference implementation; the parallel variant must produce
/// bit-identical results (including witnesses) and is checked against the
/// serial one in the test suite.
enum class Exec { serial, parallel };

namespace detail {
// Below this many iterations the OpenMP dispatch costs more than it saves.
constexpr std::size_t parallel_threshold = 4096;
}  // namespace detail

/// Least index i < n with pred(i), or n when there is none. The parallel
/// reduction takes the minimum over per-thread finds, so the witness is the
/// same index the serial loop returns.
template <class Pred>
std::size_t find_first(Exec ex, std::size_t n, Pred&& pred) {
  if (ex == Exec::serial || n < detail::parallel_threshold) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return n;
  }
  long long best = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    if (i < best && pred(static_cast<std::size_t>(i))) best = i;
  }
  return static_cast<std::size_t>(best);
}

/// True when pred holds on all of [0, n); otherwise stores the least failing
/// index in *witness (if given).
template <class Pred>
bool check_all(Exec ex, std::size_t n, Pred&& pred, std::size_t* witness = nullptr) {
  std::size_t i = find_first(ex, n, [&](std::size_t k) { return !pred(k); });
  if (i == n) return true;
  if (witness) *witness = i;
  return false;
}

/// Evaluates pred over [0, n) into a mask, in parallel when asked; the mask
/// (and hence anything folded from it in index order) is deterministic.
template <class Pred>
void fill_mask(Exec ex, std::size_t n, unsigned char* mask, Pred&& pred) {
  if (ex == Exec::serial || n < detail::parallel_threshold) {
    for (std::size_t i = 0; i < n; ++i) mask[i] = pred(i) ? 1 : 0;
    return;
  }
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    mask[i] = pred(static_cast<std::size_t>(i)) ? 1 : 0;
}

}  // namespace quantikit
