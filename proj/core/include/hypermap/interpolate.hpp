#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>

#include "hypermap/bigint.hpp"
#include "hypermap/polysym3.hpp"

namespace hypermap {

/// Integer coefficient table for a fixed dart count r: canonical triples
/// (v <= e <= f) mapped to the count of rooted hypermaps with that profile.
struct CoeffTable {
  int darts = 0;
  std::map<std::array<int, 3>, BigInt> entries;

  /// Sum over the full symmetric orbit: the value of the implied polynomial
  /// at (1,1,1), i.e. the total number of rooted hypermaps with r darts.
  BigInt total() const;

  /// Checks v,e,f >= 1, counts >= 0, the Euler bound v+e+f <= r+2 and the
  /// parity v+e+f == r (mod 2). Throws std::logic_error on violation.
  void check_euler() const;

  friend bool operator==(const CoeffTable& a, const CoeffTable& b) {
    return a.darts == b.darts && a.entries == b.entries;
  }
};

/// Exact point evaluator for H_r; called only with 1 <= m <= n <= lambda <= r.
using PointEvaluator = std::function<BigInt(int m, int n, int lambda)>;

struct EvalStats {
  std::size_t points_computed = 0;  // distinct sorted triples evaluated
  std::size_t grid_requests = 0;    // interior grid values requested
};

/// Recovers the coefficients of the degree-<=r symmetric polynomial H_r from
/// point values, by iterated Newton divided differences over the node cube
/// {0..r}^3 in exact rational arithmetic.
///
/// Boundary values (any coordinate zero) are identically zero and cost
/// nothing; all other grid values are served from evaluations at sorted
/// triples only, so at most C(r+2, 3) expensive calls are made.
///
/// Throws NonIntegerResult / AsymmetryDetected / NegativeCoefficient when the
/// recovered polynomial is unusable — each indicates an upstream bug.
CoeffTable interpolate_table(int r, const PointEvaluator& evaluator, int threads = 1,
                             EvalStats* stats = nullptr);

/// Expands a canonical table to the full symmetric polynomial (every
/// distinct permutation of each (v, e, f) triple).
PolySym3 table_to_poly(const CoeffTable& t);

}  // namespace hypermap
