#include "qspec/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace qspec {

Polynomial char_poly(const ExactMatrix &m) {
  const std::size_t n = m.order();
  // Coefficients highest degree first while the recurrence runs.
  std::vector<BigInt> vect{1};
  for (std::size_t step = n; step-- > 0;) {
    const std::size_t size = n - step; // trailing block is step..n-1
    const BigInt &a = m(step, step);

    // Q = [1, -a, -R C, -R A C, ..., -R A^{size-2} C]
    std::vector<BigInt> q(size + 1);
    q[0] = 1;
    q[1] = -a;
    std::vector<BigInt> col(size - 1);
    for (std::size_t i = 0; i + 1 < size; ++i)
      col[i] = m(step + 1 + i, step);
    for (std::size_t power = 2; power <= size; ++power) {
      BigInt dot = 0;
      for (std::size_t j = 0; j + 1 < size; ++j)
        dot += m(step, step + 1 + j) * col[j];
      q[power] = -dot;
      if (power == size)
        break;
      std::vector<BigInt> next(size - 1, 0);
      for (std::size_t i = 0; i + 1 < size; ++i)
        for (std::size_t j = 0; j + 1 < size; ++j)
          next[i] += m(step + 1 + i, step + 1 + j) * col[j];
      col = std::move(next);
    }

    std::vector<BigInt> next(size + 1, 0);
    for (std::size_t i = 0; i <= size; ++i)
      for (std::size_t j = 0; j <= std::min(i, size - 1); ++j)
        next[i] += q[i - j] * vect[j];
    vect = std::move(next);
  }
  std::reverse(vect.begin(), vect.end());
  return Polynomial(std::move(vect));
}

namespace {

Eigen::MatrixXd to_eigen(const NumericMatrix &m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(i, j);
  return out;
}

} // namespace

std::vector<Complex> raw_eigenvalues(const NumericMatrix &m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  std::vector<Complex> values;
  if (n == 0)
    return values;
  Eigen::MatrixXd e = to_eigen(m);
  if (m.is_symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        e, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw ConvergenceFailure("symmetric eigensolver did not converge");
    for (Eigen::Index i = 0; i < n; ++i)
      values.emplace_back(solver.eigenvalues()(i), 0.0);
    return values;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver;
  solver.setMaxIterations(100 * n * n);
  solver.compute(e, false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("QR iteration hit its cap of 100*n^2 steps");
  for (Eigen::Index i = 0; i < n; ++i)
    values.push_back(solver.eigenvalues()(i));
  return values;
}

Spectrum eigenvalues(const NumericMatrix &m) {
  return Spectrum::from_values(raw_eigenvalues(m));
}

double spectral_radius(const NumericMatrix &m) {
  double best = 0.0;
  for (const auto &v : raw_eigenvalues(m))
    best = std::max(best, std::abs(v));
  return best;
}

void require_nonnegative(const NumericMatrix &m) {
  for (double x : m.data())
    if (x < 0.0)
      throw NotNonnegative("matrix has a negative entry");
}

bool is_irreducible(const NumericMatrix &m) {
  const std::size_t n = m.order();
  if (n <= 1)
    return true;
  auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!todo.empty()) {
      std::size_t u = todo.front();
      todo.pop();
      for (std::size_t v = 0; v < n; ++v) {
        double x = forward ? m(u, v) : m(v, u);
        if (v != u && x != 0.0 && !seen[v]) {
          seen[v] = 1;
          ++count;
          todo.push(v);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

double perron_root(const NumericMatrix &m) {
  require_nonnegative(m);
  if (!is_irreducible(m))
    throw NotIrreducible("support digraph is not strongly connected");
  const std::size_t n = m.order();
  if (n == 1)
    return m(0, 0);

  // M + I is primitive, so the iteration cannot cycle.
  std::vector<double> x(n, 1.0), y(n);
  double lo = 0.0, hi = 0.0;
  const int cap = 200000;
  for (int iter = 0; iter < cap; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < n; ++j)
        s += m(i, j) * x[j];
      y[i] = s;
    }
    lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      top = std::max(top, y[i]);
    }
    if (hi - lo <= 1e-14 * hi)
      return 0.5 * (lo + hi) - 1.0;
    for (std::size_t i = 0; i < n; ++i)
      x[i] = y[i] / top;
  }
  if (hi - lo <= 1e-9 * hi)
    return 0.5 * (lo + hi) - 1.0;
  throw ConvergenceFailure("power iteration did not bracket the Perron root");
}

std::pair<double, double> row_sum_bounds(const NumericMatrix &m) {
  require_nonnegative(m);
  if (m.order() == 0)
    throw DimensionMismatch("empty matrix");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < m.order(); ++i) {
    double r = m.row_sum(i);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

MatrixOrder matrix_order(const NumericMatrix &a, const NumericMatrix &b) {
  if (a.order() != b.order())
    throw DimensionMismatch("matrix_order needs equal orders");
  bool any_less = false, any_greater = false, all_less = true,
       all_greater = true;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    double x = a.data()[i], y = b.data()[i];
    any_less |= x < y;
    any_greater |= x > y;
    all_less &= x < y;
    all_greater &= x > y;
  }
  if (any_less && any_greater)
    return MatrixOrder::Incomparable;
  if (!any_less && !any_greater)
    return MatrixOrder::Equal;
  if (any_less)
    return all_less ? MatrixOrder::MuchLess : MatrixOrder::Less;
  return all_greater ? MatrixOrder::MuchGreater : MatrixOrder::Greater;
}

std::string_view order_name(MatrixOrder order) {
  switch (order) {
  case MatrixOrder::Equal:
    return "EQ";
  case MatrixOrder::Less:
    return "LEQ_STRICT";
  case MatrixOrder::MuchLess:
    return "LL";
  case MatrixOrder::Greater:
    return "GEQ_STRICT";
  case MatrixOrder::MuchGreater:
    return "GG";
  case MatrixOrder::Incomparable:
    return "INCOMPARABLE";
  }
  return "?";
}

namespace {

using LComplex = std::complex<long double>;

struct Evaluator {
  std::vector<long double> c; // constant term first

  explicit Evaluator(const Polynomial &p) {
    for (const auto &x : p.coefficients())
      c.push_back(x.convert_to<long double>());
  }

  void eval(LComplex z, LComplex &value, LComplex &slope) const {
    value = 0;
    slope = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      slope = slope * z + value;
      value = value * z + *it;
    }
  }
};

/// Newton steps that are kept only while the residual shrinks.
LComplex polish(const Evaluator &f, LComplex z) {
  LComplex value, slope;
  f.eval(z, value, slope);
  for (int iter = 0; iter < 60 && std::abs(value) > 0; ++iter) {
    if (slope == LComplex(0))
      break;
    LComplex next = z - value / slope;
    LComplex nv, ns;
    f.eval(next, nv, ns);
    if (!(std::abs(nv) < std::abs(value)))
      break;
    z = next;
    value = nv;
    slope = ns;
  }
  return z;
}

/// Roots of a square-free integer polynomial of degree >= 1.
std::vector<Complex> simple_roots(const Polynomial &f) {
  const int d = f.degree();
  std::vector<Complex> out;
  if (d == 1) {
    Rational r(-f.coefficient(0), f.coefficient(1));
    out.emplace_back(r.convert_to<double>(), 0.0);
    return out;
  }
  Evaluator eval(f);
  std::vector<LComplex> guesses;
  if (d == 2) {
    long double a = eval.c[2], b = eval.c[1], c = eval.c[0];
    long double disc = b * b - 4 * a * c;
    if (disc >= 0) {
      long double s = std::sqrt(disc);
      long double q = -0.5L * (b + (b >= 0 ? s : -s));
      guesses.emplace_back(q / a);
      guesses.emplace_back(q == 0 ? 0.0L : c / q);
    } else {
      long double re = -b / (2 * a), im = std::sqrt(-disc) / (2 * a);
      guesses.emplace_back(re, im);
      guesses.emplace_back(re, -im);
    }
  } else {
    using LMatrix =
        Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    LMatrix companion = LMatrix::Zero(d, d);
    for (int i = 1; i < d; ++i)
      companion(i, i - 1) = 1;
    Rational lead(f.leading());
    for (int i = 0; i < d; ++i)
      companion(i, d - 1) =
          Rational(-f.coefficient(i) / lead).convert_to<long double>();
    Eigen::EigenSolver<LMatrix> solver;
    solver.setMaxIterations(100 * d * d);
    solver.compute(companion, false);
    if (solver.info() != Eigen::Success)
      throw ConvergenceFailure("companion matrix eigensolver failed");
    for (int i = 0; i < d; ++i)
      guesses.push_back(solver.eigenvalues()(i));
  }
  for (auto z : guesses) {
    z = polish(eval, z);
    // A real polynomial's lone near-real root is real; drop rounding noise.
    if (std::abs(z.imag()) <= 1e-12L * std::max(1.0L, std::abs(z))) {
      LComplex real = polish(eval, LComplex(z.real(), 0));
      z = LComplex(real.real(), 0);
    }
    out.emplace_back(static_cast<double>(z.real()),
                     static_cast<double>(z.imag()));
  }
  return out;
}

} // namespace

Spectrum poly_roots(const Polynomial &p) {
  if (p.is_zero())
    throw ZeroPolynomial("cannot take roots of the zero polynomial");
  Spectrum s;
  for (const auto &[factor, mult] : square_free_decomposition(p))
    for (const auto &root : simple_roots(factor))
      s.add(root, mult);
  return s;
}

double largest_real_root_cubic(const Polynomial &p) {
  if (p.degree() != 3)
    throw InvalidParameters("expected a cubic");
  Evaluator eval(p);
  long double a = eval.c[3];
  long double b = eval.c[2] / a, c = eval.c[1] / a, d = eval.c[0] / a;
  long double P = c - b * b / 3;
  long double Q = 2 * b * b * b / 27 - b * c / 3 + d;
  long double disc = Q * Q / 4 + P * P * P / 27;
  long double t;
  if (disc <= 0) {
    if (P == 0) {
      t = 0;
    } else {
      long double arg = (3 * Q / (2 * P)) * std::sqrt(-3 / P);
      arg = std::clamp(arg, -1.0L, 1.0L);
      t = 2 * std::sqrt(-P / 3) * std::cos(std::acos(arg) / 3);
    }
  } else {
    long double s = std::sqrt(disc);
    t = std::cbrt(-Q / 2 + s) + std::cbrt(-Q / 2 - s);
  }
  LComplex z = polish(eval, LComplex(t - b / 3, 0));
  return static_cast<double>(z.real());
}

double largest_real_root(const Polynomial &p) {
  Spectrum s = poly_roots(p);
  bool found = false;
  double best = 0.0;
  for (const auto &e : s.entries())
    if (e.value.imag() == 0.0 && (!found || e.value.real() > best)) {
      best = e.value.real();
      found = true;
    }
  if (!found)
    throw InvalidParameters("polynomial has no real root");
  return best;
}

Spectrum exact_spectrum(const ExactMatrix &m) {
  if (m.order() == 0)
    return {};
  return poly_roots(char_poly(m));
}

} // namespace qspec
