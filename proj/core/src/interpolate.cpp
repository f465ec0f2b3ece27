#include "hypermap/interpolate.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermap/bigrat.hpp"
#include "hypermap/errors.hpp"
#include "hypermap/parallel.hpp"

namespace hypermap {

BigInt CoeffTable::total() const {
  BigInt sum(0);
  for (const auto& [key, count] : entries) {
    auto [v, e, f] = key;
    int mult = (v == e && e == f) ? 1 : (v == e || e == f || v == f) ? 3 : 6;
    sum += count * static_cast<long>(mult);
  }
  return sum;
}

void CoeffTable::check_euler() const {
  for (const auto& [key, count] : entries) {
    auto [v, e, f] = key;
    if (v < 1 || !(v <= e && e <= f)) {
      throw std::logic_error("CoeffTable: non-canonical key");
    }
    if (count.sign() < 0) {
      throw std::logic_error("CoeffTable: negative count");
    }
    int s = v + e + f;
    if (s > darts + 2 || (s - darts) % 2 != 0) {
      throw std::logic_error("CoeffTable: Euler constraint violated at (" +
                             std::to_string(v) + "," + std::to_string(e) + "," +
                             std::to_string(f) + ")");
    }
  }
}

namespace {

// In-place univariate pass over values at integer nodes 0..d:
// divided differences first, then Newton-to-monomial expansion.
void newton_to_monomial(std::span<BigRat> v) {
  const int d = static_cast<int>(v.size()) - 1;
  for (int level = 1; level <= d; ++level) {
    for (int i = d; i >= level; --i) {
      v[i] -= v[i - 1];
      v[i].div_int(level);  // node spacing: x_i - x_{i-level} = level
    }
  }
  for (int i = d - 1; i >= 1; --i) {  // node 0 contributes nothing
    for (int t = i; t < d; ++t) {
      v[t] -= BigRat(v[t + 1]).mul_int(i);
    }
  }
}

}  // namespace

CoeffTable interpolate_table(int r, const PointEvaluator& evaluator, int threads,
                             EvalStats* stats) {
  if (r < 1) throw std::domain_error("interpolate_table: r must be positive");

  // Every expensive evaluation happens at a sorted triple; the rest of the
  // cube is filled by symmetry and the zero boundary.
  std::vector<std::array<int, 3>> pts;
  for (int m = 1; m <= r; ++m) {
    for (int n = m; n <= r; ++n) {
      for (int lambda = n; lambda <= r; ++lambda) pts.push_back({m, n, lambda});
    }
  }

  std::vector<BigInt> vals(pts.size());
  parallel_for(pts.size(), threads, [&](std::size_t i) {
    vals[i] = evaluator(pts[i][0], pts[i][1], pts[i][2]);
  });

  std::map<std::array<int, 3>, const BigInt*> memo;
  for (std::size_t i = 0; i < pts.size(); ++i) memo.emplace(pts[i], &vals[i]);

  const int d = r + 1;
  auto idx = [d](int i, int j, int k) { return (i * d + j) * d + k; };
  std::vector<BigRat> grid(static_cast<std::size_t>(d) * d * d);
  std::size_t interior = 0;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      for (int k = 1; k <= r; ++k) {
        std::array<int, 3> key{i, j, k};
        std::sort(key.begin(), key.end());
        grid[idx(i, j, k)] = BigRat(*memo.at(key));
        ++interior;
      }
    }
  }
  if (stats) {
    stats->points_computed = pts.size();
    stats->grid_requests = interior;
  }

  // One Newton pass per axis over the exact grid.
  std::vector<BigRat> line(d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      for (int i = 0; i < d; ++i) line[i] = grid[idx(i, j, k)];
      newton_to_monomial(line);
      for (int i = 0; i < d; ++i) grid[idx(i, j, k)] = line[i];
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      for (int j = 0; j < d; ++j) line[j] = grid[idx(i, j, k)];
      newton_to_monomial(line);
      for (int j = 0; j < d; ++j) grid[idx(i, j, k)] = line[j];
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) line[k] = grid[idx(i, j, k)];
      newton_to_monomial(line);
      for (int k = 0; k < d; ++k) grid[idx(i, j, k)] = line[k];
    }
  }

  PolySym3 poly(r);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const BigRat& c = grid[idx(i, j, k)];
        if (c.is_zero()) continue;
        if (!c.is_integer()) {
          throw NonIntegerResult("interpolate_table: non-integer coefficient at (" +
                                 std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ")");
        }
        if (i == 0 || j == 0 || k == 0) {
          throw std::logic_error("interpolate_table: nonzero coefficient with zero exponent");
        }
        poly.add_term(i, j, k, c.to_integer());
      }
    }
  }

  if (!poly.is_symmetric()) {
    throw AsymmetryDetected("interpolate_table: recovered polynomial is not symmetric");
  }

  CoeffTable table;
  table.darts = r;
  for (const auto& [key, c] : poly.terms()) {
    if (c.sign() < 0) {
      throw NegativeCoefficient("interpolate_table: negative coefficient at (" +
                                std::to_string(key[0]) + "," + std::to_string(key[1]) +
                                "," + std::to_string(key[2]) + ")");
    }
    std::array<int, 3> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    table.entries.try_emplace(sorted, c);  // orbit members agree (symmetry checked)
  }
  return table;
}

PolySym3 table_to_poly(const CoeffTable& t) {
  PolySym3 poly(t.darts);
  for (const auto& [key, c] : t.entries) {
    poly.add_term(key[0], key[1], key[2], c);
  }
  poly.symmetrize();
  return poly;
}

}  // namespace hypermap
