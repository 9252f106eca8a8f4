#include "qspec/quotient.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "qspec/linalg.hpp"

namespace qspec {

Partition::Partition(std::vector<std::vector<int>> cells)
    : cells_(std::move(cells)) {
  for (const auto &c : cells_) {
    if (c.empty())
      throw InvalidParameters("partition has an empty cell");
    n_ += static_cast<int>(c.size());
  }
  cell_of_.assign(n_, -1);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    std::sort(cells_[i].begin(), cells_[i].end());
    for (int v : cells_[i]) {
      if (v < 0 || v >= n_)
        throw InvalidParameters("partition index " + std::to_string(v) +
                                " outside 0.." + std::to_string(n_ - 1));
      if (cell_of_[v] >= 0)
        throw InvalidParameters("partition index " + std::to_string(v) +
                                " appears twice");
      cell_of_[v] = static_cast<int>(i);
    }
  }
}

Partition Partition::discrete(int n) {
  std::vector<std::vector<int>> cells;
  for (int i = 0; i < n; ++i)
    cells.push_back({i});
  return Partition(std::move(cells));
}

Partition Partition::trivial(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i)
    all[i] = i;
  return Partition({all});
}

Partition Partition::from_sizes(const std::vector<int> &sizes) {
  std::vector<std::vector<int>> cells;
  int next = 0;
  for (int s : sizes) {
    if (s < 1)
      throw InvalidParameters("cell sizes must be positive");
    std::vector<int> cell;
    for (int i = 0; i < s; ++i)
      cell.push_back(next++);
    cells.push_back(std::move(cell));
  }
  return Partition(std::move(cells));
}

Partition Partition::parse(std::string_view text) {
  std::string body;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      body.push_back(ch);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}')
      throw ParseError("partition: unbalanced braces");
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty())
    throw ParseError("partition: no cells");
  std::vector<std::vector<int>> cells(1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find_first_of(",|", pos);
    if (end == std::string::npos)
      end = body.size();
    std::string_view token(body.data() + pos, end - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size())
      throw ParseError("partition: bad index '" + std::string(token) + "'");
    cells.back().push_back(value);
    if (end < body.size() && body[end] == '|')
      cells.emplace_back();
    pos = end + 1;
  }
  try {
    return Partition(std::move(cells));
  } catch (const InvalidParameters &e) {
    throw ParseError(e.what());
  }
}

std::vector<int> Partition::sizes() const {
  std::vector<int> out;
  for (const auto &c : cells_)
    out.push_back(static_cast<int>(c.size()));
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i)
      out << '|';
    for (std::size_t j = 0; j < cells_[i].size(); ++j)
      out << (j ? "," : "") << cells_[i][j];
  }
  out << '}';
  return out.str();
}

int BlockSpec::order() const {
  int n = 0;
  for (int s : sizes)
    n += s;
  return n;
}

void BlockSpec::validate() const {
  const std::size_t t = sizes.size();
  if (t == 0)
    throw InvalidParameters("block spec needs at least one block");
  if (l.size() != t || p.size() != t || s.size() != t)
    throw InvalidParameters("block spec vectors disagree with block count");
  for (const auto &row : s)
    if (row.size() != t)
      throw InvalidParameters("block spec s must be t x t");
  for (int n : sizes)
    if (n < 1)
      throw InvalidParameters("block sizes must be positive");
}

namespace {

void check_order(std::size_t order, const Partition &part) {
  if (static_cast<int>(order) != part.ground_size())
    throw DimensionMismatch("matrix order " + std::to_string(order) +
                            " but partition covers " +
                            std::to_string(part.ground_size()));
}

template <typename T, typename Out>
Out block_sums(const SquareMatrix<T> &m, const Partition &part) {
  check_order(m.order(), part);
  const auto t = static_cast<std::size_t>(part.cell_count());
  Out b(t);
  const auto &cell_of = part.cell_of();
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      b(cell_of[i], cell_of[j]) += m(i, j);
  return b;
}

template <typename T>
bool equitable_impl(const SquareMatrix<T> &m, const Partition &part,
                    const std::function<bool(const T &, const T &)> &same) {
  check_order(m.order(), part);
  const auto t = static_cast<std::size_t>(part.cell_count());
  const auto &cell_of = part.cell_of();
  for (const auto &cell : part.cells()) {
    std::vector<T> first(t, T(0));
    for (std::size_t j = 0; j < m.order(); ++j)
      first[cell_of[j]] += m(cell.front(), j);
    for (std::size_t r = 1; r < cell.size(); ++r) {
      std::vector<T> row(t, T(0));
      for (std::size_t j = 0; j < m.order(); ++j)
        row[cell_of[j]] += m(cell[r], j);
      for (std::size_t c = 0; c < t; ++c)
        if (!same(row[c], first[c]))
          return false;
    }
  }
  return true;
}

} // namespace

NumericMatrix quotient_matrix(const NumericMatrix &m, const Partition &part) {
  auto b = block_sums<double, NumericMatrix>(m, part);
  const auto sizes = part.sizes();
  for (std::size_t i = 0; i < b.order(); ++i)
    for (std::size_t j = 0; j < b.order(); ++j)
      b(i, j) /= sizes[i];
  return b;
}

RationalMatrix quotient_matrix(const ExactMatrix &m, const Partition &part) {
  check_order(m.order(), part);
  const auto t = static_cast<std::size_t>(part.cell_count());
  RationalMatrix b(t);
  const auto &cell_of = part.cell_of();
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      b(cell_of[i], cell_of[j]) += Rational(m(i, j));
  const auto sizes = part.sizes();
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      b(i, j) /= sizes[i];
  return b;
}

bool is_equitable(const NumericMatrix &m, const Partition &part, double tol) {
  return equitable_impl<double>(m, part, [tol](const double &a, const double &b) {
    return std::abs(a - b) <= tol;
  });
}

bool is_equitable(const ExactMatrix &m, const Partition &part) {
  return equitable_impl<BigInt>(
      m, part, [](const BigInt &a, const BigInt &b) { return a == b; });
}

RationalMatrix realize_rational(const BlockSpec &spec) {
  spec.validate();
  const int n = spec.order();
  const Partition part = spec.partition();
  const auto &cell_of = part.cell_of();
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = cell_of[i], b = cell_of[j];
      if (a != b)
        m(i, j) = spec.s[a][b];
      else
        m(i, j) = spec.l[a] + (i == j ? spec.p[a] : Rational(0));
    }
  return m;
}

ExactMatrix realize_exact(const BlockSpec &spec) {
  return to_exact(realize_rational(spec));
}

NumericMatrix realize_numeric(const BlockSpec &spec) {
  return to_numeric(realize_rational(spec));
}

RationalMatrix block_quotient(const BlockSpec &spec) {
  spec.validate();
  const auto t = static_cast<std::size_t>(spec.blocks());
  RationalMatrix b(t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      b(i, j) = i == j ? Rational(spec.l[i] * spec.sizes[i] + spec.p[i])
                       : Rational(spec.s[i][j] * spec.sizes[j]);
  return b;
}

Spectrum block_spectrum(const BlockSpec &spec) {
  Spectrum s = eigenvalues(to_numeric(block_quotient(spec)));
  for (int i = 0; i < spec.blocks(); ++i)
    s.add(spec.p[i].convert_to<double>(), spec.sizes[i] - 1);
  return s;
}

QuotientReport lift_check(const NumericMatrix &m, const Partition &part,
                          double tol) {
  if (!is_equitable(m, part))
    throw NotEquitable("partition " + part.to_string() +
                       " is not equitable for this matrix");
  QuotientReport report;
  report.B = quotient_matrix(m, part);
  report.equitable = true;
  Spectrum full = Spectrum::from_values(raw_eigenvalues(m), 0.0);
  Spectrum quotient = Spectrum::from_values(raw_eigenvalues(report.B), 0.0);
  report.lifted = spectrum_contains(full, quotient, tol);
  return report;
}

namespace {

std::vector<double> symmetric_eigs_descending(const Eigen::MatrixXd &m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("symmetric eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + m.rows());
  std::sort(out.rbegin(), out.rend());
  return out;
}

} // namespace

InterlacingReport interlacing_check(const NumericMatrix &m,
                                    const Partition &part, double tol) {
  if (!m.is_symmetric())
    throw NotSymmetric("interlacing needs a symmetric matrix");
  check_order(m.order(), part);
  const int n = static_cast<int>(m.order());
  const int t = part.cell_count();

  // D^{1/2} B D^{-1/2} is symmetric and similar to B.
  NumericMatrix b = quotient_matrix(m, part);
  const auto sizes = part.sizes();
  Eigen::MatrixXd sym(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      sym(i, j) = b(i, j) * std::sqrt(double(sizes[i]) / sizes[j]);
  sym = 0.5 * (sym + sym.transpose());

  Eigen::MatrixXd full(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      full(i, j) = m(i, j);

  InterlacingReport r;
  r.matrix_eigs = symmetric_eigs_descending(full);
  r.quotient_eigs = symmetric_eigs_descending(sym);
  const auto &lam = r.matrix_eigs;
  const auto &mu = r.quotient_eigs;
  double scale = 1.0;
  for (double x : lam)
    scale = std::max(scale, std::abs(x));
  const double eps = tol * scale;

  r.interlaces = true;
  for (int i = 0; i < t; ++i)
    if (lam[i] < mu[i] - eps || mu[i] < lam[n - t + i] - eps)
      r.interlaces = false;

  // Tight: some k in [1, t] with mu_i = lam_i for i <= k and
  // mu_i = lam_{n-t+i} for i > k.
  if (r.interlaces) {
    for (int k = 1; k <= t && !r.tight; ++k) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        ok = std::abs(lam[i] - mu[i]) <= eps;
      for (int i = k; i < t && ok; ++i)
        ok = std::abs(lam[n - t + i] - mu[i]) <= eps;
      r.tight = ok;
    }
  }
  if (r.tight)
    r.tight_implies_equitable_ok = is_equitable(m, part, 1e-9 * scale);
  return r;
}

ProbeResult conjecture_probe(const NumericMatrix &m, const Partition &part,
                             double tol) {
  require_nonnegative(m);
  if (!is_equitable(m, part))
    throw NotEquitable("probe needs an equitable partition");
  ProbeResult r;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto &v : raw_eigenvalues(quotient_matrix(m, part)))
    best = std::max(best, v.real());
  r.rho_B = best;
  r.rho_M = spectral_radius(m);
  r.holds = std::abs(r.rho_B - r.rho_M) <= tol * std::max(1.0, r.rho_M);
  return r;
}

} // namespace qspec
