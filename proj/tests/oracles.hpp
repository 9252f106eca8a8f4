#pragma once

// Independent reference computations used by the test suites. Nothing here
// calls into the library's numeric or exact kernels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "qspec/matrix.hpp"
#include "qspec/polynomial.hpp"

namespace oracle {

using qspec::BigInt;
using qspec::Rational;
using Grid = std::vector<std::vector<BigInt>>;

/// Bareiss fraction-free elimination with row pivoting.
inline BigInt determinant(Grid a) {
  const std::size_t n = a.size();
  if (n == 0)
    return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline BigInt det_shifted(const qspec::ExactMatrix &m, const BigInt &x) {
  const std::size_t n = m.order();
  Grid a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = (i == j ? x : BigInt(0)) - m(i, j);
  return determinant(std::move(a));
}

/// det(xI - M) sampled at x = 0..n and interpolated (Newton form, exact).
inline qspec::Polynomial charpoly_by_interpolation(const qspec::ExactMatrix &m) {
  const int n = static_cast<int>(m.order());
  std::vector<Rational> xs, dd;
  for (int i = 0; i <= n; ++i) {
    xs.emplace_back(i);
    dd.emplace_back(det_shifted(m, i));
  }
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  // expand sum dd[i] * prod_{j<i} (x - xs[j])
  std::vector<Rational> coeffs(n + 1, 0), basis{Rational(1)};
  for (int i = 0; i <= n; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d)
      coeffs[d] += dd[i] * basis[d];
    std::vector<Rational> next(basis.size() + 1, 0);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= xs[i] * basis[d];
    }
    basis = std::move(next);
  }
  std::vector<BigInt> out;
  for (const auto &c : coeffs) {
    if (denominator(c) != 1)
      throw std::logic_error("non-integral interpolated coefficient");
    out.push_back(numerator(c));
  }
  return qspec::Polynomial(out);
}

/// Largest sign change of f on a fine grid, refined by bisection.
inline double largest_root_bisect(const std::function<double(double)> &f,
                                  double lo, double hi, int steps = 20000) {
  double best = NAN;
  const double h = (hi - lo) / steps;
  for (int i = 0; i < steps; ++i) {
    double a = lo + i * h, b = a + h;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) {
      best = a;
      continue;
    }
    if ((fa < 0) != (fb < 0)) {
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (a + b);
        if ((f(mid) < 0) == (fa < 0))
          a = mid;
        else
          b = mid;
      }
      best = 0.5 * (a + b);
    }
  }
  return best;
}

using Adj = std::vector<std::vector<int>>; // 0/1 adjacency

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> floyd(const Adj &a) {
  const int n = static_cast<int>(a.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j)
        d[i][j] = 0;
      else if (a[i][j])
        d[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto &row : d)
    for (int &x : row)
      if (x >= inf)
        x = -1;
  return d;
}

inline bool strongly_connected_without(const Adj &a, std::uint32_t removed) {
  const int n = static_cast<int>(a.size());
  Adj sub;
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!(removed >> v & 1))
      keep.push_back(v);
  if (keep.empty())
    return false;
  for (int u : keep) {
    std::vector<int> row;
    for (int v : keep)
      row.push_back(a[u][v]);
    sub.push_back(row);
  }
  for (const auto &row : floyd(sub))
    for (int x : row)
      if (x < 0)
        return false;
  return true;
}

/// Smallest removal set breaking (strong) connectivity over all subsets;
/// n-1 if none exists. Works for symmetric adjacency as well.
inline int connectivity_brute(const Adj &a) {
  const int n = static_cast<int>(a.size());
  int best = n - 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size >= best || size > n - 2)
      continue;
    if (!strongly_connected_without(a, s))
      best = size;
  }
  return best;
}

/// Cyclic Jacobi rotations; eigenvalues of a real symmetric matrix, sorted
/// descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        off += a[i][j] * a[i][j];
    if (off < 1e-26)
      break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300)
          continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> out;
  for (int i = 0; i < n; ++i)
    out.push_back(a[i][i]);
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Uniform integer in [lo, hi].
inline long long draw(std::mt19937_64 &rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline qspec::ExactMatrix random_int_matrix(std::mt19937_64 &rng, int n,
                                            int lo, int hi,
                                            bool symmetric = false) {
  qspec::ExactMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = symmetric ? i : 0; j < n; ++j) {
      m(i, j) = draw(rng, lo, hi);
      if (symmetric)
        m(j, i) = m(i, j);
    }
  return m;
}

/// Random ordered partition of {0..n-1} into t nonempty cells.
inline std::vector<std::vector<int>> random_cells(std::mt19937_64 &rng, int n,
                                                  int t) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i)
    perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<int>> cells(t);
  for (int i = 0; i < n; ++i)
    cells[i < t ? i : draw(rng, 0, t - 1)].push_back(perm[i]);
  return cells;
}

} // namespace oracle
