#pragma once

#include <array>
#include <condition_variable>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "hypermap/bigrat.hpp"

namespace hypermap {

/// Ordered tuple of nonnegative parts with a fixed sum: one index tuple
/// (a_0, ..., a_{m-1}) of the series-coefficient sum.
struct Composition {
  std::vector<int> parts;

  int length() const { return static_cast<int>(parts.size()); }
  int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
};

/// Cache of series coefficients F_k(m, n, lambda), keyed by (k, m, n, lambda)
/// with (m, n) stored in canonical (min, max) order — the coefficients are
/// symmetric in their first two arguments.
///
/// Thread-safe. Distinct points may be filled concurrently; a given point's
/// block is enumerated by exactly one thread (waiters block on a condition
/// variable), so no key is ever computed twice in a process.
class FGrid {
 public:
  /// F_k at the point; on a miss the whole block F_0..F_k for the point is
  /// enumerated in one pass and cached.
  BigRat f(int k, int m, int n, int lambda);

  /// Precomputes F_0..F_r_max at the point.
  void ensure(int r_max, int m, int n, int lambda);

  /// Warm-load from a persisted cache. Existing entries win; no validation
  /// beyond key normalization is performed here.
  void insert(int k, int m, int n, int lambda, const BigRat& value);

  struct Record {
    int k, m, n, lambda;
    BigRat value;
  };

  /// All cached values with k >= 1, sorted by (k, m, n, lambda).
  std::vector<Record> snapshot() const;

  /// Number of enumeration passes run (instrumentation).
  std::size_t blocks_enumerated() const;

 private:
  struct Entry {
    std::map<int, BigRat> by_k;  // k >= 1 only; F_0 == 1 is implicit
    int complete_to = 0;         // all 1..complete_to present
    bool computing = false;
  };

  void refresh_complete_to(Entry& e);

  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::map<std::array<int, 3>, Entry> points_;
  std::size_t blocks_enumerated_ = 0;
};

/// One term of the coefficient sum: the Vandermonde-quotient factor
/// prod_{0<=i<j<m} ((a_i - a_j)/(j - i) + 1) times
/// prod_s rising(lambda, a_s) * rising(n - s, a_s) / a_s!.
/// Requires m <= n and a of length exactly m.
BigRat f_term(const Composition& a, int m, int n, int lambda);

/// F_r(m, n, lambda): the exact sum of f_term over all weight-r compositions
/// of length min(m, n). F_0 == 1. Results are cached in `grid`.
BigRat f_r(int r, int m, int n, int lambda, FGrid& grid);

/// Closed form for a unit first argument:
/// F_r(1, m, n) = rising(m, r) * rising(n, r) / r!.
BigRat f_r_m1_closed(int r, int m, int n);

}  // namespace hypermap
