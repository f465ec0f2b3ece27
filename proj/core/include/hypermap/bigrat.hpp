#pragma once

#include <gmp.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hypermap/bigint.hpp"

namespace hypermap {

/// Exact rational scalar (GMP mpq layer).
///
/// Always held in lowest terms with a positive denominator; the canonical
/// zero is 0/1. Every constructor and operator re-establishes that form,
/// so gcd(|num|, den) == 1 is a class invariant, not a convention.
class BigRat {
 public:
  BigRat() { mpq_init(q_); }

  BigRat(long v) {
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }

  explicit BigRat(const BigInt& n) {
    mpq_init(q_);
    mpq_set_z(q_, n.raw());
  }

  BigRat(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("BigRat: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
  }

  BigRat(const BigRat& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  BigRat(BigRat&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  BigRat& operator=(const BigRat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  BigRat& operator=(BigRat&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~BigRat() { mpq_clear(q_); }

  BigRat& operator+=(const BigRat& o) { mpq_add(q_, q_, o.q_); return *this; }
  BigRat& operator-=(const BigRat& o) { mpq_sub(q_, q_, o.q_); return *this; }
  BigRat& operator*=(const BigRat& o) { mpq_mul(q_, q_, o.q_); return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { a += b; return a; }
  friend BigRat operator-(BigRat a, const BigRat& b) { a -= b; return a; }
  friend BigRat operator*(BigRat a, const BigRat& b) { a *= b; return a; }
  friend BigRat operator/(BigRat a, const BigRat& b) { a /= b; return a; }

  BigRat operator-() const {
    BigRat r;
    mpq_neg(r.q_, q_);
    return r;
  }

  /// Multiply by a machine integer (used by the interpolation inner loops).
  BigRat& mul_int(long v) {
    mpz_mul_si(mpq_numref(q_), mpq_numref(q_), v);
    mpq_canonicalize(q_);
    return *this;
  }

  /// Divide by a positive machine integer.
  BigRat& div_int(long v) {
    if (v == 0) throw std::domain_error("BigRat: division by zero");
    if (v < 0) {
      mpz_neg(mpq_numref(q_), mpq_numref(q_));
      v = -v;
    }
    mpz_mul_ui(mpq_denref(q_), mpq_denref(q_), static_cast<unsigned long>(v));
    mpq_canonicalize(q_);
    return *this;
  }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  BigInt numerator() const {
    BigInt n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  BigInt denominator() const {
    BigInt d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  /// The value as a BigInt; only valid when is_integer().
  BigInt to_integer() const {
    if (!is_integer()) throw std::domain_error("BigRat::to_integer: not an integer");
    return numerator();
  }

  friend bool operator==(const BigRat& a, const BigRat& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (is_integer()) return numerator().to_string();
    return numerator().to_string() + "/" + denominator().to_string();
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& v) {
    return os << v.to_string();
  }

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

}  // namespace hypermap
