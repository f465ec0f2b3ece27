#pragma once

#include <stdexcept>
#include <string>

namespace hypermap {

/// A convolution step produced a rational with a nontrivial denominator.
/// The recursion over exact rationals must clear denominators, so this
/// always indicates an upstream arithmetic bug, never a data condition.
struct NonIntegerResult : std::runtime_error {
  explicit NonIntegerResult(const std::string& what) : std::runtime_error(what) {}
};

/// An interpolated polynomial failed the full-symmetry check.
struct AsymmetryDetected : std::runtime_error {
  explicit AsymmetryDetected(const std::string& what) : std::runtime_error(what) {}
};

/// An interpolated coefficient came out negative.
struct NegativeCoefficient : std::runtime_error {
  explicit NegativeCoefficient(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force bucket count was not divisible by (r-1)!.
struct NonDivisibleBucket : std::runtime_error {
  explicit NonDivisibleBucket(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypermap
