#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qspec/matrix.hpp"

namespace qspec {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored constant term first. The zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial constant(const BigInt &c);
  /// x - root
  static Polynomial linear(const BigInt &root);
  static Polynomial x_power(int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt> &coefficients() const { return coeffs_; }
  BigInt coefficient(int i) const;
  const BigInt &leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  BigInt evaluate(const BigInt &x) const;
  std::complex<double> evaluate(std::complex<double> x) const;
  double evaluate(double x) const;

  Polynomial derivative() const;
  Polynomial pow(int exponent) const;

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const BigInt &s, const Polynomial &a);
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Coefficients as decimal strings, constant term first.
  std::vector<std::string> to_strings() const;
  /// Human-readable form such as "x^3 - 3x^2 - 6x + 4".
  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Product of (x - r)^e over the given (root, exponent) pairs; e may be 0.
Polynomial product_of_linear(const std::vector<std::pair<BigInt, int>> &factors);

/// Yun square-free decomposition over the rationals. Returns primitive
/// integer factors a_i with multiplicity i such that p = c * prod a_i^i,
/// skipping constant factors. Throws ZeroPolynomial on zero input.
std::vector<std::pair<Polynomial, int>>
square_free_decomposition(const Polynomial &p);

} // namespace qspec
