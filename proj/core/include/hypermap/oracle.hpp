#pragma once

#include <array>
#include <map>
#include <vector>

#include "hypermap/bigint.hpp"
#include "hypermap/bigrat.hpp"
#include "hypermap/interpolate.hpp"

namespace hypermap {

/// Permutation of [0..r) as an image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int r);

  /// Canonical representative of a cycle type: consecutive blocks
  /// (0 1 .. r1-1)(r1 .. r1+r2-1)...
  static Perm from_cycle_type(const std::vector<int>& cycle_type);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }

  Perm inverse() const;
  int cycle_count() const;

  /// (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) = default;

 private:
  std::vector<int> img_;
};

/// Triple (xi, eta, chi) acting on [0..r) with xi*eta*chi = identity; genuine
/// hypermaps additionally require the generated group to act transitively.
struct Constellation {
  Perm xi, eta, chi;

  static Constellation from_pair(const Perm& xi, const Perm& eta);

  int darts() const { return xi.size(); }
  bool product_is_identity() const;
  bool is_transitive() const;
  bool is_valid() const { return product_is_identity() && is_transitive(); }
};

/// True iff the group generated by {xi, eta} acts transitively on [0..r).
bool pair_transitive(const Perm& xi, const Perm& eta);

/// Raw symmetric buckets: (v, e, f) = (cyc(chi), cyc(eta), cyc(xi)) over all
/// transitive pairs (xi, eta) in Sym_r^2, each bucket divided by (r-1)!.
/// Throws NonDivisibleBucket if a bucket is not a multiple of (r-1)!.
std::map<std::array<int, 3>, BigInt> brute_force_buckets(int r, int threads = 1);

/// Canonical table from the raw buckets. Independent of the interpolation
/// pipeline end to end; the two must agree exactly.
CoeffTable brute_force_table(int r, int threads = 1);

/// sum over eta in Sym_r of m^cyc(eta) * n^cyc(xi*eta), with xi any fixed
/// permutation of the given cycle type (the value does not depend on the
/// representative).
BigInt p_sum(const std::vector<int>& cycle_type, int m, int n);
BigInt p_sum_with_representative(const Perm& xi, int m, int n);

/// Same sum restricted to eta with <xi, eta> transitive.
BigInt p_bar_sum(const std::vector<int>& cycle_type, int m, int n);
BigInt p_bar_sum_with_representative(const Perm& xi, int m, int n);

/// Verifies the connected-diagram factorization
///   P_{r r_1..r_N} = sum over splits u+v of {r_1..r_N} of Pbar_{r,u} P_v
/// with cycle_type[0] as the distinguished root part; the split sum runs
/// over all 2^N position subsets and P of the empty family is 1.
bool check_factorization(const std::vector<int>& cycle_type, int m, int n);

/// Formal power series in x, exact rational coefficients c_0..c_K.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(order + 1) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  BigRat& operator[](int i) { return c_[i]; }
  const BigRat& operator[](int i) const { return c_[i]; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& scale(const BigRat& s);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// exp of a series with zero constant term, exact to the truncation order.
  static TruncatedSeries exp(const TruncatedSeries& s);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<BigRat> c_;
};

/// Checks the nested-series identity
///   sum_N (lambda^N / N!) (sum_j sum_t q_j^t x^t / t)^N
///     = prod_j sum_a rising(lambda, a)/a! * q_j^a x^a
/// as truncated formal power series to order K, coefficient by coefficient.
bool check_nested_series(int m, int lambda, const std::vector<int>& q, int K);

}  // namespace hypermap
