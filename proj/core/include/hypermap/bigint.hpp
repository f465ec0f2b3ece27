#pragma once

#include <gmp.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypermap {

/// Arbitrary-precision signed integer (sign + magnitude, GMP mpz layer).
///
/// Value semantics throughout; a moved-from BigInt is a valid zero.
/// Division is only offered where the result is exact; anything else
/// belongs in BigRat.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }

  template <std::signed_integral T>
  BigInt(T v) { mpz_init_set_si(z_, static_cast<long>(v)); }

  template <std::unsigned_integral T>
  BigInt(T v) { mpz_init_set_ui(z_, static_cast<unsigned long>(v)); }

  explicit BigInt(std::string_view decimal) {
    if (mpz_init_set_str(z_, std::string(decimal).c_str(), 10) != 0) {
      mpz_clear(z_);
      throw std::invalid_argument("BigInt: malformed decimal string");
    }
  }

  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  BigInt& operator+=(const BigInt& o) { mpz_add(z_, z_, o.z_); return *this; }
  BigInt& operator-=(const BigInt& o) { mpz_sub(z_, z_, o.z_); return *this; }
  BigInt& operator*=(const BigInt& o) { mpz_mul(z_, z_, o.z_); return *this; }
  BigInt& operator*=(long v) { mpz_mul_si(z_, z_, v); return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
  friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
  friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }
  friend BigInt operator*(BigInt a, long b) { a *= b; return a; }
  friend BigInt operator*(long a, BigInt b) { b *= a; return b; }

  BigInt operator-() const {
    BigInt r;
    mpz_neg(r.z_, z_);
    return r;
  }

  /// Quotient of an exact division; throws if the remainder is nonzero.
  BigInt div_exact(const BigInt& d) const {
    if (mpz_sgn(d.z_) == 0 || !mpz_divisible_p(z_, d.z_)) {
      throw std::domain_error("BigInt::div_exact: inexact division");
    }
    BigInt r;
    mpz_divexact(r.z_, z_, d.z_);
    return r;
  }

  bool divisible_by(const BigInt& d) const {
    return mpz_sgn(d.z_) != 0 && mpz_divisible_p(z_, d.z_);
  }

  static BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
  }

  static BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
  }

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }

  bool fits_long() const { return mpz_fits_slong_p(z_); }
  long to_long() const {
    if (!fits_long()) throw std::overflow_error("BigInt::to_long: out of range");
    return mpz_get_si(z_);
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = mpz_cmp(a.z_, b.z_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }
  friend bool operator==(const BigInt& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }

  std::string to_string() const {
    std::string s(mpz_sizeinbase(z_, 10) + 2, '\0');
    mpz_get_str(s.data(), 10, z_);
    s.resize(s.find('\0'));
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

  /// Little-endian magnitude bytes (empty for zero); sign via sign().
  std::vector<std::uint8_t> magnitude_bytes() const {
    std::vector<std::uint8_t> out((mpz_sizeinbase(z_, 2) + 7) / 8);
    if (is_zero()) return {};
    std::size_t written = 0;
    mpz_export(out.data(), &written, -1, 1, 0, 0, z_);
    out.resize(written);
    return out;
  }

  static BigInt from_magnitude_bytes(std::span<const std::uint8_t> bytes, bool negative) {
    BigInt r;
    if (!bytes.empty()) {
      mpz_import(r.z_, bytes.size(), -1, 1, 0, 0, bytes.data());
      if (negative) mpz_neg(r.z_, r.z_);
    }
    return r;
  }

  // Raw handles for hot loops inside the library; not part of the stable API.
  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

}  // namespace hypermap
