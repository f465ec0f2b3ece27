#include "hypermap/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hypermap/errors.hpp"
#include "hypermap/factorials.hpp"
#include "hypermap/parallel.hpp"

namespace hypermap {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[v]) {
      throw std::invalid_argument("Perm: not a bijection");
    }
    seen[v] = 1;
  }
}

Perm Perm::identity(int r) {
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycle_type(const std::vector<int>& cycle_type) {
  int r = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  std::vector<int> img(r);
  int base = 0;
  for (int len : cycle_type) {
    if (len < 1) throw std::invalid_argument("Perm: cycle lengths must be positive");
    for (int i = 0; i < len; ++i) img[base + i] = base + (i + 1) % len;
    base += len;
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

int Perm::cycle_count() const {
  int count = 0;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return count;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Perm: size mismatch");
  std::vector<int> img(a.size());
  for (int i = 0; i < a.size(); ++i) img[i] = a.img_[b.img_[i]];
  return Perm(std::move(img));
}

Constellation Constellation::from_pair(const Perm& xi, const Perm& eta) {
  return Constellation{xi, eta, (xi * eta).inverse()};
}

bool Constellation::product_is_identity() const {
  return xi * eta * chi == Perm::identity(darts());
}

bool Constellation::is_transitive() const { return pair_transitive(xi, eta); }

namespace {

// Union-find over a small fixed range, path-halving only.
struct UnionFind {
  int parent[16];

  explicit UnionFind(int r) {
    for (int i = 0; i < r; ++i) parent[i] = i;
  }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

constexpr int kMaxBruteForceDarts = 9;  // (9!)^2 pair scans is already ~1.3e11

std::vector<std::vector<std::uint8_t>> all_perms(int r) {
  std::vector<std::uint8_t> p(r);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::uint8_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int cycles_of(const std::vector<std::uint8_t>& img) {
  int r = static_cast<int>(img.size());
  int count = 0;
  std::uint32_t seen = 0;
  for (int i = 0; i < r; ++i) {
    if (seen & (1u << i)) continue;
    ++count;
    for (int j = i; !(seen & (1u << j)); j = img[j]) seen |= 1u << j;
  }
  return count;
}

bool transitive(const std::vector<std::uint8_t>& xi, const std::vector<std::uint8_t>& eta) {
  int r = static_cast<int>(xi.size());
  UnionFind uf(r);
  for (int i = 0; i < r; ++i) {
    uf.unite(i, xi[i]);
    uf.unite(i, eta[i]);
  }
  int root = uf.find(0);
  for (int i = 1; i < r; ++i) {
    if (uf.find(i) != root) return false;
  }
  return true;
}

// counts[a][b] = #{eta : cyc(eta) = a, cyc(xi*eta) = b}, optionally
// restricted to transitive pairs. Independent of m and n.
std::vector<std::vector<std::uint64_t>> pair_cycle_counts(const Perm& xi,
                                                          bool transitive_only) {
  int r = xi.size();
  if (r > kMaxBruteForceDarts) {
    throw std::domain_error("permutation sum: r too large for a pair scan");
  }
  std::vector<std::uint8_t> xi_img(r);
  for (int i = 0; i < r; ++i) xi_img[i] = static_cast<std::uint8_t>(xi(i));

  std::vector<std::vector<std::uint64_t>> counts(r + 1,
                                                 std::vector<std::uint64_t>(r + 1, 0));
  std::vector<std::uint8_t> eta(r), prod(r);
  std::iota(eta.begin(), eta.end(), 0);
  do {
    if (transitive_only && !transitive(xi_img, eta)) continue;
    for (int i = 0; i < r; ++i) prod[i] = xi_img[eta[i]];
    ++counts[cycles_of(eta)][cycles_of(prod)];
  } while (std::next_permutation(eta.begin(), eta.end()));
  return counts;
}

BigInt evaluate_counts(const std::vector<std::vector<std::uint64_t>>& counts, int m, int n) {
  int r = static_cast<int>(counts.size()) - 1;
  std::vector<BigInt> pm(r + 1, BigInt(1)), pn(r + 1, BigInt(1));
  for (int t = 1; t <= r; ++t) {
    pm[t] = pm[t - 1] * static_cast<long>(m);
    pn[t] = pn[t - 1] * static_cast<long>(n);
  }
  BigInt acc(0);
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      if (counts[a][b] == 0) continue;
      acc += BigInt(counts[a][b]) * pm[a] * pn[b];
    }
  }
  return acc;
}

void check_positive(int m, int n) {
  if (m < 1 || n < 1) throw std::domain_error("permutation sum: m, n must be positive");
}

}  // namespace

bool pair_transitive(const Perm& xi, const Perm& eta) {
  if (xi.size() != eta.size()) throw std::invalid_argument("pair_transitive: size mismatch");
  int r = xi.size();
  if (r == 0) return true;
  std::vector<int> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  for (int i = 0; i < r; ++i) {
    unite(i, xi(i));
    unite(i, eta(i));
  }
  int root = find(0);
  for (int i = 1; i < r; ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

std::map<std::array<int, 3>, BigInt> brute_force_buckets(int r, int threads) {
  if (r < 1) throw std::domain_error("brute_force_buckets: r must be positive");
  if (r > kMaxBruteForceDarts) {
    throw std::domain_error("brute_force_buckets: r > " +
                            std::to_string(kMaxBruteForceDarts));
  }

  const auto perms = all_perms(r);
  std::vector<int> cyc(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) cyc[i] = cycles_of(perms[i]);

  // Outer permutation ranks are split into one contiguous range per worker;
  // each worker owns a dense cube of (v,e,f) = (cyc(chi), cyc(eta), cyc(xi))
  // counts. chi = (xi*eta)^{-1} shares its cycle count with xi*eta, so the
  // inverse is never formed. Buckets merge associatively after the join.
  const int d = r + 1;
  auto idx = [d](int v, int e, int f) { return (v * d + e) * d + f; };
  const std::size_t workers =
      std::min<std::size_t>(std::max(threads, 1), perms.size());
  const std::size_t chunk = (perms.size() + workers - 1) / workers;
  std::vector<std::vector<std::uint64_t>> partial(workers);

  parallel_for(workers, static_cast<int>(workers), [&](std::size_t w) {
    std::vector<std::uint64_t> cube(static_cast<std::size_t>(d) * d * d, 0);
    std::vector<std::uint8_t> prod(r);
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(lo + chunk, perms.size());
    for (std::size_t xi_rank = lo; xi_rank < hi; ++xi_rank) {
      const auto& xi = perms[xi_rank];
      for (std::size_t eta_rank = 0; eta_rank < perms.size(); ++eta_rank) {
        const auto& eta = perms[eta_rank];
        if (!transitive(xi, eta)) continue;
        for (int i = 0; i < r; ++i) prod[i] = xi[eta[i]];
        ++cube[idx(cycles_of(prod), cyc[eta_rank], cyc[xi_rank])];
      }
    }
    partial[w] = std::move(cube);
  });

  std::vector<std::uint64_t> total(static_cast<std::size_t>(d) * d * d, 0);
  for (const auto& cube : partial) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += cube[i];
  }

  // Rooted classes are free orbits of conjugation fixing dart 0, hence
  // every bucket splits into orbits of size (r-1)!.
  const BigInt orbit = factorial(r - 1);
  std::map<std::array<int, 3>, BigInt> buckets;
  for (int v = 1; v <= r; ++v) {
    for (int e = 1; e <= r; ++e) {
      for (int f = 1; f <= r; ++f) {
        std::uint64_t raw = total[idx(v, e, f)];
        if (raw == 0) continue;
        BigInt count(raw);
        if (!count.divisible_by(orbit)) {
          throw NonDivisibleBucket("brute_force_buckets: bucket (" + std::to_string(v) +
                                   "," + std::to_string(e) + "," + std::to_string(f) +
                                   ") = " + count.to_string() + " not divisible by (r-1)!");
        }
        buckets.emplace(std::array<int, 3>{v, e, f}, count.div_exact(orbit));
      }
    }
  }
  return buckets;
}

CoeffTable brute_force_table(int r, int threads) {
  auto buckets = brute_force_buckets(r, threads);
  CoeffTable table;
  table.darts = r;
  for (const auto& [key, count] : buckets) {
    std::array<int, 3> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    auto [it, inserted] = table.entries.try_emplace(sorted, count);
    if (!inserted && it->second != count) {
      throw std::logic_error("brute_force_table: asymmetric buckets");
    }
  }
  return table;
}

BigInt p_sum_with_representative(const Perm& xi, int m, int n) {
  check_positive(m, n);
  return evaluate_counts(pair_cycle_counts(xi, /*transitive_only=*/false), m, n);
}

BigInt p_sum(const std::vector<int>& cycle_type, int m, int n) {
  return p_sum_with_representative(Perm::from_cycle_type(cycle_type), m, n);
}

BigInt p_bar_sum_with_representative(const Perm& xi, int m, int n) {
  check_positive(m, n);
  return evaluate_counts(pair_cycle_counts(xi, /*transitive_only=*/true), m, n);
}

BigInt p_bar_sum(const std::vector<int>& cycle_type, int m, int n) {
  return p_bar_sum_with_representative(Perm::from_cycle_type(cycle_type), m, n);
}

bool check_factorization(const std::vector<int>& cycle_type, int m, int n) {
  if (cycle_type.empty()) throw std::invalid_argument("check_factorization: empty type");
  const int root = cycle_type[0];
  const std::vector<int> rest(cycle_type.begin() + 1, cycle_type.end());
  const int n_rest = static_cast<int>(rest.size());

  BigInt lhs = p_sum(cycle_type, m, n);

  BigInt rhs(0);
  for (std::uint32_t mask = 0; mask < (1u << n_rest); ++mask) {
    std::vector<int> u{root}, v;
    for (int i = 0; i < n_rest; ++i) {
      (mask & (1u << i) ? u : v).push_back(rest[i]);
    }
    BigInt left = p_bar_sum(u, m, n);
    BigInt right = v.empty() ? BigInt(1) : p_sum(v, m, n);
    rhs += left * right;
  }
  return lhs == rhs;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (order() != o.order()) throw std::invalid_argument("TruncatedSeries: order mismatch");
  for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::scale(const BigRat& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("TruncatedSeries: order mismatch");
  TruncatedSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::exp(const TruncatedSeries& s) {
  if (!s[0].is_zero()) {
    throw std::domain_error("TruncatedSeries::exp: constant term must be zero");
  }
  const int K = s.order();
  TruncatedSeries acc(K), power(K);
  acc[0] = BigRat(1);
  power[0] = BigRat(1);
  BigRat inv_fact(1);
  for (int N = 1; N <= K; ++N) {
    power = power * s;
    inv_fact /= BigRat(N);
    TruncatedSeries term = power;
    term.scale(inv_fact);
    acc += term;
  }
  return acc;
}

bool check_nested_series(int m, int lambda, const std::vector<int>& q, int K) {
  if (m < 1 || lambda < 1 || K < 0 || static_cast<int>(q.size()) != m) {
    throw std::invalid_argument("check_nested_series: bad arguments");
  }

  // Left side: exp(lambda * sum_j sum_t q_j^t x^t / t).
  TruncatedSeries inner(K);
  for (int j = 0; j < m; ++j) {
    BigInt qp(1);
    for (int t = 1; t <= K; ++t) {
      qp *= static_cast<long>(q[j]);
      inner[t] += BigRat(qp, BigInt(t));
    }
  }
  inner.scale(BigRat(lambda));
  TruncatedSeries lhs = TruncatedSeries::exp(inner);

  // Right side: prod_j sum_a rising(lambda, a)/a! q_j^a x^a.
  TruncatedSeries rhs(K);
  rhs[0] = BigRat(1);
  RisingFactorialTable rising(lambda);
  for (int j = 0; j < m; ++j) {
    TruncatedSeries factor(K);
    BigInt qp(1);
    for (int a = 0; a <= K; ++a) {
      factor[a] = BigRat(rising.at(a) * qp, factorial(a));
      qp *= static_cast<long>(q[j]);
    }
    rhs = rhs * factor;
  }

  return lhs == rhs;
}

}  // namespace hypermap
