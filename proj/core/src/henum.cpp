#include "hypermap/henum.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "hypermap/errors.hpp"
#include "hypermap/factorials.hpp"

namespace hypermap {

BigInt HGrid::h(int k, int m, int n, int lambda, FGrid& fgrid) {
  if (m > n) std::swap(m, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = values_.find({k, m, n, lambda});
    if (it != values_.end()) return it->second;
  }

  // One enumeration pass fills the point's whole F block, then the
  // recursion across k is sequential by construction.
  fgrid.ensure(k, m, n, lambda);
  std::vector<BigRat> f(k + 1);
  f[0] = BigRat(1);
  for (int j = 1; j <= k; ++j) f[j] = fgrid.f(j, m, n, lambda);

  std::vector<BigInt> h_vals(k + 1, BigInt(0));  // h_vals[0] = H_0 = 0
  for (int t = 1; t <= k; ++t) {
    BigRat v = f[t] * BigRat(t);
    for (int j = 1; j < t; ++j) {
      v -= f[j] * BigRat(h_vals[t - j]);
    }
    if (!v.is_integer()) {
      throw NonIntegerResult("h_r_point: denominators did not cancel at r=" +
                             std::to_string(t));
    }
    h_vals[t] = v.to_integer();
  }

  std::lock_guard<std::mutex> lock(mu_);
  for (int t = 1; t <= k; ++t) {
    values_.try_emplace({t, m, n, lambda}, h_vals[t]);
  }
  return h_vals[k];
}

BigInt h_r_point(int r, int m, int n, int lambda, FGrid& fgrid, HGrid& hgrid) {
  if (r < 1) throw std::domain_error("h_r_point: r must be positive");
  if (m < 1 || n < 1 || lambda < 1) {
    throw std::domain_error("h_r_point: m, n, lambda must be positive");
  }
  return hgrid.h(r, m, n, lambda, fgrid);
}

BigInt h_r_special_1mn(int r, int m, int n) {
  if (r < 1 || m < 1 || n < 1) {
    throw std::domain_error("h_r_special_1mn: arguments must be positive");
  }
  RisingFactorialTable rm(m), rn(n);
  // coef[k] = rising(m,k) rising(n,k) / k!, an integer since
  // rising(n,k)/k! = C(n+k-1, k).
  std::vector<BigInt> coef(r + 1);
  for (int k = 0; k <= r; ++k) {
    coef[k] = rm.at(k) * rn.at(k).div_exact(factorial(k));
  }
  std::vector<BigInt> h(r + 1, BigInt(0));
  for (int t = 1; t <= r; ++t) {
    BigInt v = coef[t] * t;
    for (int k = 1; k < t; ++k) v -= coef[k] * h[t - k];
    h[t] = std::move(v);
  }
  return h[r];
}

BigInt h_r_special_11m(int r, int m) {
  if (r < 1 || m < 1) {
    throw std::domain_error("h_r_special_11m: arguments must be positive");
  }
  RisingFactorialTable rm(m);
  std::vector<BigInt> h(r + 1, BigInt(0));
  for (int t = 1; t <= r; ++t) {
    BigInt v = rm.at(t) * t;
    for (int k = 1; k < t; ++k) v -= rm.at(k) * h[t - k];
    h[t] = std::move(v);
  }
  return h[r];
}

std::vector<BigInt> totals(int r_max) {
  if (r_max < 1) throw std::domain_error("totals: r_max must be positive");
  std::vector<BigInt> h(r_max + 1, BigInt(0));
  for (int t = 1; t <= r_max; ++t) {
    BigInt v = factorial(t) * t;
    for (int k = 1; k < t; ++k) v -= factorial(k) * h[t - k];
    h[t] = std::move(v);
  }
  return std::vector<BigInt>(h.begin() + 1, h.end());
}

}  // namespace hypermap
