#include "hypermap/fseries.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "hypermap/factorials.hpp"

namespace hypermap {

namespace {

void check_point(int m, int n, int lambda) {
  if (m < 1 || n < 1 || lambda < 1) {
    throw std::domain_error("F series: m, n, lambda must be positive");
  }
}

// prod_{0<=i<j<m} (j - i) = 1! 2! ... (m-1)!, the fixed denominator shared by
// every term of length m.
BigInt pair_gap_product(int m) {
  BigInt d(1);
  for (int k = 1; k < m; ++k) d *= factorial(k);
  return d;
}

// One DFS over all compositions (a_0, ..., a_{m-1}) with weight <= r_max,
// accumulating integer term numerators into acc[weight]. Sharing prefixes
// across weights makes a point's whole F block a single pass.
//
// Writing c_s = a_s - s, the Vandermonde-quotient factor of a term is
// prod_{i<j} (c_i - c_j) / prod_{i<j} (j - i); it vanishes iff two c values
// collide, so any prefix with a collision kills its whole subtree and is
// skipped outright.
struct BlockEnumerator {
  int m, r_max;
  long flush_limit;                        // pair products stay in a long this far
  std::vector<std::vector<BigInt>> slot;   // slot[s][a] = rising(lambda,a)*C(n-s+a-1,a)
  std::vector<int> c;
  std::vector<char> c_used;                // indexed by c + (m-1)
  std::vector<BigInt> vand, fact, acc;

  BlockEnumerator(int r_max_, int m_, int n, int lambda)
      : m(m_), r_max(r_max_) {
    long bound = r_max + m;  // |c_i - c_j| < bound
    flush_limit = std::numeric_limits<long>::max() / (bound + 1);

    RisingFactorialTable lam(lambda);
    slot.resize(m);
    for (int s = 0; s < m; ++s) {
      RisingFactorialTable nm(n - s);
      slot[s].reserve(r_max + 1);
      for (int a = 0; a <= r_max; ++a) {
        slot[s].push_back(lam.at(a) * nm.at(a).div_exact(factorial(a)));
      }
    }
    c.assign(m, 0);
    c_used.assign(r_max + m, 0);
    vand.assign(m + 1, BigInt(1));
    fact.assign(m + 1, BigInt(1));
    acc.assign(r_max + 1, BigInt(0));
  }

  void descend(int s, int spent) {
    const bool last = (s == m - 1);
    for (int a = 0; a <= r_max - spent; ++a) {
      int cv = a - s;
      if (c_used[cv + m - 1]) continue;  // zero factor: whole subtree vanishes

      // vand[s+1] = vand[s] * prod_{i<s} (c_i - cv), batched through a long.
      // The flush branch is idle for r <= 13 but keeps larger runs exact.
      long chunk = 1;
      bool flushed = false;
      for (int i = 0; i < s; ++i) {
        long d = c[i] - cv;
        if (std::abs(chunk) >= flush_limit) {
          mpz_mul_si(vand[s + 1].raw(), (flushed ? vand[s + 1] : vand[s]).raw(), chunk);
          flushed = true;
          chunk = d;
        } else {
          chunk *= d;
        }
      }
      mpz_mul_si(vand[s + 1].raw(), (flushed ? vand[s + 1] : vand[s]).raw(), chunk);

      mpz_mul(fact[s + 1].raw(), fact[s].raw(), slot[s][a].raw());

      if (last) {
        mpz_addmul(acc[spent + a].raw(), vand[s + 1].raw(), fact[s + 1].raw());
      } else {
        c[s] = cv;
        c_used[cv + m - 1] = 1;
        descend(s + 1, spent + a);
        c_used[cv + m - 1] = 0;
      }
    }
  }
};

// F_0..F_r_max at one point. Requires 1 <= m <= n, lambda >= 1.
std::vector<BigRat> eval_f_block(int r_max, int m, int n, int lambda) {
  BlockEnumerator e(r_max, m, n, lambda);
  e.descend(0, 0);
  BigInt denom = pair_gap_product(m);
  std::vector<BigRat> out;
  out.reserve(r_max + 1);
  for (int w = 0; w <= r_max; ++w) out.emplace_back(e.acc[w], denom);
  return out;
}

}  // namespace

BigRat FGrid::f(int k, int m, int n, int lambda) {
  check_point(m, n, lambda);
  if (k <= 0) return BigRat(1);
  ensure(k, m, n, lambda);
  if (m > n) std::swap(m, n);
  std::lock_guard<std::mutex> lock(mu_);
  return points_.at({m, n, lambda}).by_k.at(k);
}

void FGrid::ensure(int r_max, int m, int n, int lambda) {
  check_point(m, n, lambda);
  if (r_max < 1) return;
  if (m > n) std::swap(m, n);
  const std::array<int, 3> key{m, n, lambda};

  std::unique_lock<std::mutex> lock(mu_);
  Entry& e = points_[key];  // map nodes are stable across later inserts
  for (;;) {
    if (e.complete_to >= r_max) return;
    if (!e.computing) break;
    cv_.wait(lock);
  }
  e.computing = true;
  lock.unlock();

  std::vector<BigRat> block;
  try {
    block = eval_f_block(r_max, m, n, lambda);
  } catch (...) {
    lock.lock();
    e.computing = false;
    cv_.notify_all();
    throw;
  }

  lock.lock();
  for (int k = 1; k <= r_max; ++k) e.by_k.try_emplace(k, std::move(block[k]));
  refresh_complete_to(e);
  e.computing = false;
  ++blocks_enumerated_;
  cv_.notify_all();
}

void FGrid::insert(int k, int m, int n, int lambda, const BigRat& value) {
  if (k < 1) return;
  if (m > n) std::swap(m, n);
  std::lock_guard<std::mutex> lock(mu_);
  Entry& e = points_[{m, n, lambda}];
  e.by_k.try_emplace(k, value);
  refresh_complete_to(e);
}

std::vector<FGrid::Record> FGrid::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<Record> out;
  for (const auto& [key, entry] : points_) {
    for (const auto& [k, v] : entry.by_k) {
      out.push_back(Record{k, key[0], key[1], key[2], v});
    }
  }
  std::sort(out.begin(), out.end(), [](const Record& a, const Record& b) {
    return std::tie(a.k, a.m, a.n, a.lambda) < std::tie(b.k, b.m, b.n, b.lambda);
  });
  return out;
}

std::size_t FGrid::blocks_enumerated() const {
  std::lock_guard<std::mutex> lock(mu_);
  return blocks_enumerated_;
}

void FGrid::refresh_complete_to(Entry& e) {
  while (e.by_k.count(e.complete_to + 1) != 0) ++e.complete_to;
}

BigRat f_term(const Composition& a, int m, int n, int lambda) {
  check_point(m, n, lambda);
  if (m > n) throw std::domain_error("f_term: requires m <= n");
  if (a.length() != m) throw std::invalid_argument("f_term: composition length != m");

  BigRat v(1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      v *= BigRat(BigInt(a.parts[i] - a.parts[j] + (j - i)), BigInt(j - i));
      if (v.is_zero()) return v;
    }
  }
  for (int s = 0; s < m; ++s) {
    int as = a.parts[s];
    v *= BigRat(rising_factorial(lambda, as) * rising_factorial(n - s, as), factorial(as));
  }
  return v;
}

BigRat f_r(int r, int m, int n, int lambda, FGrid& grid) {
  if (r == 0) return BigRat(1);
  return grid.f(r, m, n, lambda);
}

BigRat f_r_m1_closed(int r, int m, int n) {
  check_point(1, m, n);
  return BigRat(rising_factorial(m, r) * rising_factorial(n, r), factorial(r));
}

}  // namespace hypermap
