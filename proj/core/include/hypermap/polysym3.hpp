#pragma once

#include <array>
#include <map>

#include "hypermap/bigint.hpp"

namespace hypermap {

/// Sparse trivariate integer polynomial with exponents bounded by `degree_bound`
/// in each variable.
///
/// The full coefficient map is stored (not a symmetry-reduced orbit set);
/// symmetry is checked, or established via symmetrize(), rather than assumed.
class PolySym3 {
 public:
  using Key = std::array<int, 3>;

  PolySym3() = default;
  explicit PolySym3(int degree_bound) : degree_bound_(degree_bound) {}

  int degree_bound() const { return degree_bound_; }

  /// Adds c to the coefficient of m^i n^j lambda^k. Drops entries that cancel to zero.
  void add_term(int i, int j, int k, const BigInt& c);

  /// Coefficient of m^i n^j lambda^k (zero if absent).
  const BigInt& coeff(int i, int j, int k) const;

  /// Exact evaluation at an integer triple.
  BigInt eval(long m, long n, long lambda) const;

  /// True iff coeff(i,j,k) agrees on every permutation of (i,j,k).
  bool is_symmetric() const;

  /// Copies each canonically-keyed coefficient onto the whole (i,j,k) orbit.
  /// Throws AsymmetryDetected if two populated orbit members disagree.
  void symmetrize();

  const std::map<Key, BigInt>& terms() const { return terms_; }

  friend bool operator==(const PolySym3& a, const PolySym3& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int degree_bound_ = 0;
  std::map<Key, BigInt> terms_;
};

/// Exact value of p at (m, n, lambda).
BigInt poly_eval(const PolySym3& p, long m, long n, long lambda);

}  // namespace hypermap
