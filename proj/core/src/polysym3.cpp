#include "hypermap/polysym3.hpp"

#include <algorithm>
#include <vector>

#include "hypermap/errors.hpp"

namespace hypermap {

namespace {

const BigInt kZero(0);

std::array<PolySym3::Key, 6> orbit(const PolySym3::Key& k) {
  auto [a, b, c] = k;
  return {{{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}};
}

}  // namespace

void PolySym3::add_term(int i, int j, int k, const BigInt& c) {
  if (c.is_zero()) return;
  Key key{i, j, k};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  degree_bound_ = std::max({degree_bound_, i, j, k});
}

const BigInt& PolySym3::coeff(int i, int j, int k) const {
  auto it = terms_.find(Key{i, j, k});
  return it == terms_.end() ? kZero : it->second;
}

BigInt PolySym3::eval(long m, long n, long lambda) const {
  // Power tables keep the evaluation at one multiply-chain per variable.
  int d = degree_bound_;
  std::vector<BigInt> pm(d + 1, BigInt(1)), pn(d + 1, BigInt(1)), pl(d + 1, BigInt(1));
  for (int t = 1; t <= d; ++t) {
    pm[t] = pm[t - 1] * m;
    pn[t] = pn[t - 1] * n;
    pl[t] = pl[t - 1] * lambda;
  }
  BigInt acc(0);
  for (const auto& [key, c] : terms_) {
    acc += c * pm[key[0]] * pn[key[1]] * pl[key[2]];
  }
  return acc;
}

bool PolySym3::is_symmetric() const {
  for (const auto& [key, c] : terms_) {
    for (const auto& img : orbit(key)) {
      if (coeff(img[0], img[1], img[2]) != c) return false;
    }
  }
  return true;
}

void PolySym3::symmetrize() {
  std::map<Key, BigInt> out;
  for (const auto& [key, c] : terms_) {
    Key sorted = key;
    std::sort(sorted.begin(), sorted.end());
    auto [it, inserted] = out.try_emplace(sorted, c);
    if (!inserted && it->second != c) {
      throw AsymmetryDetected("PolySym3::symmetrize: orbit coefficients disagree");
    }
  }
  terms_.clear();
  for (const auto& [sorted, c] : out) {
    for (const auto& img : orbit(sorted)) {
      terms_.insert_or_assign(img, c);
    }
  }
}

BigInt poly_eval(const PolySym3& p, long m, long n, long lambda) {
  return p.eval(m, n, lambda);
}

}  // namespace hypermap
