#pragma once

#include <vector>

#include "hypermap/bigint.hpp"

namespace hypermap {

/// Lazily grown table of rising factorials for a fixed base:
/// values[k] = base * (base+1) * ... * (base+k-1), values[0] = 1.
class RisingFactorialTable {
 public:
  explicit RisingFactorialTable(long base);

  long base() const { return base_; }

  /// values[k]; extends the table as needed.
  const BigInt& at(int k);

 private:
  long base_;
  std::vector<BigInt> values_;
};

/// base * (base+1) * ... * (base+k-1); memoized per base, thread-safe.
BigInt rising_factorial(long base, int k);

/// k! (= rising_factorial(1, k)).
BigInt factorial(int k);

/// C(n, k) for n >= 0, exact.
BigInt binomial(long n, int k);

}  // namespace hypermap
