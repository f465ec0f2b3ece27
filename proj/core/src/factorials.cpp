#include "hypermap/factorials.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hypermap {

RisingFactorialTable::RisingFactorialTable(long base) : base_(base) {
  if (base < 1) throw std::domain_error("RisingFactorialTable: base must be >= 1");
  values_.emplace_back(1);
}

const BigInt& RisingFactorialTable::at(int k) {
  if (k < 0) throw std::domain_error("RisingFactorialTable: negative index");
  while (static_cast<int>(values_.size()) <= k) {
    long step = base_ + static_cast<long>(values_.size()) - 1;
    values_.push_back(values_.back() * step);
  }
  return values_[k];
}

BigInt rising_factorial(long base, int k) {
  static std::mutex mu;
  static std::map<long, RisingFactorialTable> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, _] = tables.try_emplace(base, base);
  return it->second.at(k);
}

BigInt factorial(int k) { return rising_factorial(1, k); }

BigInt binomial(long n, int k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  // C(n, k) = rising(n-k+1, k) / k!
  return rising_factorial(n - k + 1, k).div_exact(factorial(k));
}

}  // namespace hypermap
