#pragma once

#include <array>
#include <map>
#include <mutex>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/fseries.hpp"

namespace hypermap {

/// Cache of H_k(m, n, lambda) values keyed by (k, m, n, lambda) with (m, n)
/// in canonical (min, max) order. Every stored value is a nonnegative
/// integer; H_0 is identically zero and is never stored.
class HGrid {
 public:
  /// Looks up H_k at the point; computes and caches H_1..H_k on a miss.
  BigInt h(int k, int m, int n, int lambda, FGrid& fgrid);

 private:
  mutable std::mutex mu_;
  std::map<std::array<int, 4>, BigInt> values_;
};

/// H_r(m, n, lambda) via the convolution recursion
///   H_r = r F_r - sum_{k=1}^{r-1} F_k H_{r-k},   H_0 = 0, F_0 = 1.
/// The result must clear all denominators; a rational remainder throws
/// NonIntegerResult (an fseries bug, not a data condition).
BigInt h_r_point(int r, int m, int n, int lambda, FGrid& fgrid, HGrid& hgrid);

/// H_r(1, m, n) by the dedicated recursion over the closed-form coefficients
///   H_r = rising(m,r) rising(n,r)/(r-1)! - sum_k rising(m,k) rising(n,k)/k! * H_{r-k}.
/// Independent of the general F evaluation path by design; serves as an
/// internal cross-check of h_r_point.
BigInt h_r_special_1mn(int r, int m, int n);

/// H_r(1, 1, m) = r*rising(m,r) - sum_{k=1}^{r-1} rising(m,k) H_{r-k}(1,1,m).
BigInt h_r_special_11m(int r, int m);

/// Total rooted-hypermap counts H_r(1,1,1) for r = 1..r_max, via
///   H_r(1,1,1) = r * r! - sum_{k=1}^{r-1} k! H_{r-k}(1,1,1).
std::vector<BigInt> totals(int r_max);

}  // namespace hypermap
