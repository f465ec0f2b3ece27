#include <doctest.h>

#include <array>
#include <cstdint>

#include "hypermap/bigint.hpp"
#include "hypermap/bigrat.hpp"
#include "hypermap/factorials.hpp"
#include "hypermap/interpolate.hpp"
#include "hypermap/polysym3.hpp"
#include "hypermap/reference_data.hpp"

using namespace hypermap;

namespace {

// Deterministic generator for the property tests (no external PRNG needed).
struct Lcg {
  std::uint64_t state = 0x243f6a8885a308d3ull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  long next_long(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("BigInt basic arithmetic and exact division") {
  BigInt a(12), b(-5);
  CHECK(a + b == BigInt(7));
  CHECK(a - b == BigInt(17));
  CHECK(a * b == BigInt(-60));
  CHECK((a * b).div_exact(BigInt(-12)) == BigInt(5));
  CHECK_THROWS_AS(a.div_exact(b), std::domain_error);
  CHECK(BigInt("123456789012345678901234567890") * BigInt(0) == BigInt(0));
  CHECK(BigInt("-42").to_long() == -42);
}

TEST_CASE("BigInt string and byte round trips") {
  Lcg gen;
  for (int i = 0; i < 50; ++i) {
    BigInt v = BigInt(gen.next_long(-1000000, 1000000)) * BigInt(gen.next_long(0, 1u << 30)) *
               BigInt(gen.next_long(1, 1u << 30));
    CHECK(BigInt(v.to_string()) == v);
    auto bytes = v.magnitude_bytes();
    CHECK(BigInt::from_magnitude_bytes(bytes, v.sign() < 0) == v);
  }
}

TEST_CASE("rising_factorial values") {
  CHECK(rising_factorial(1, 0) == BigInt(1));  // empty product
  CHECK(rising_factorial(2, 2) == BigInt(6));
  CHECK(rising_factorial(3, 4) == BigInt(360));
  CHECK(factorial(6) == BigInt(720));
  CHECK(binomial(10, 3) == BigInt(120));
}

TEST_CASE("RisingFactorialTable grows lazily with the recurrence") {
  RisingFactorialTable t(4);
  CHECK(t.at(0) == BigInt(1));
  for (int k = 1; k <= 12; ++k) {
    CHECK(t.at(k) == t.at(k - 1) * (4 + k - 1));
  }
}

TEST_CASE("rising_factorial composition property") {
  Lcg gen;
  for (int i = 0; i < 40; ++i) {
    long base = gen.next_long(1, 12);
    int k = static_cast<int>(gen.next_long(0, 8));
    int j = static_cast<int>(gen.next_long(0, 8));
    CHECK(rising_factorial(base, k) * rising_factorial(base + k, j) ==
          rising_factorial(base, k + j));
  }
}

TEST_CASE("BigRat stays normalized through arithmetic") {
  Lcg gen;
  auto random_rat = [&] {
    BigInt num(gen.next_long(-500, 500));
    BigInt den(gen.next_long(1, 500));
    return BigRat(num, den);
  };
  auto check_canonical = [](const BigRat& v) {
    CHECK(v.denominator().sign() > 0);
    BigInt g = BigInt::gcd(v.numerator(), v.denominator());
    if (v.is_zero()) {
      CHECK(v.numerator() == BigInt(0));
      CHECK(v.denominator() == BigInt(1));
    } else {
      CHECK(g == BigInt(1));
    }
  };
  for (int i = 0; i < 200; ++i) {
    BigRat a = random_rat(), b = random_rat();
    check_canonical(a + b);
    check_canonical(a - b);
    check_canonical(a * b);
    if (!b.is_zero()) check_canonical(a / b);
  }
  CHECK(BigRat(BigInt(4), BigInt(-6)) == BigRat(BigInt(-2), BigInt(3)));
}

TEST_CASE("BigRat integer detection") {
  CHECK(BigRat(BigInt(10), BigInt(5)).is_integer());
  CHECK(BigRat(BigInt(10), BigInt(5)).to_integer() == BigInt(2));
  CHECK_FALSE(BigRat(BigInt(1), BigInt(3)).is_integer());
  CHECK_THROWS_AS(BigRat(BigInt(1), BigInt(3)).to_integer(), std::domain_error);
}

TEST_CASE("poly_eval on m n lambda (m+n+lambda)") {
  PolySym3 p(2);
  p.add_term(2, 1, 1, BigInt(1));
  p.add_term(1, 2, 1, BigInt(1));
  p.add_term(1, 1, 2, BigInt(1));
  CHECK(poly_eval(p, 1, 1, 1) == BigInt(3));
  CHECK(poly_eval(p, 2, 3, 5) == BigInt(300));
  CHECK(p.is_symmetric());
}

TEST_CASE("poly_eval at the origin returns the constant term") {
  PolySym3 p(3);
  p.add_term(0, 0, 0, BigInt(7));
  p.add_term(1, 2, 3, BigInt(99));
  CHECK(poly_eval(p, 0, 0, 0) == BigInt(7));
}

TEST_CASE("three-dart polynomial evaluates to the published total") {
  PolySym3 p = table_to_poly(reference_table(3));
  CHECK(poly_eval(p, 1, 1, 1) == BigInt(13));
}

TEST_CASE("symmetric polynomial is invariant under argument permutations") {
  PolySym3 p = table_to_poly(reference_table(4));
  const std::array<std::array<long, 3>, 6> perms{{
      {2, 3, 5}, {2, 5, 3}, {3, 2, 5}, {3, 5, 2}, {5, 2, 3}, {5, 3, 2}}};
  BigInt first = poly_eval(p, perms[0][0], perms[0][1], perms[0][2]);
  for (const auto& q : perms) {
    CHECK(poly_eval(p, q[0], q[1], q[2]) == first);
  }
}

TEST_CASE("PolySym3 symmetrize rejects conflicting orbits") {
  PolySym3 p(2);
  p.add_term(1, 1, 2, BigInt(1));
  p.add_term(2, 1, 1, BigInt(5));
  CHECK_THROWS(p.symmetrize());
}
