#include "qspec/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qspec {

Polynomial::Polynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Polynomial Polynomial::constant(const BigInt &c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const BigInt &root) {
  return Polynomial({BigInt(-root), BigInt(1)});
}

Polynomial Polynomial::x_power(int exponent) {
  std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1, 0);
  c.back() = 1;
  return Polynomial(std::move(c));
}

BigInt Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree())
    return 0;
  return coeffs_[i];
}

BigInt Polynomial::evaluate(const BigInt &x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->convert_to<double>();
  return acc;
}

double Polynomial::evaluate(double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->convert_to<long double>();
  return static_cast<double>(acc);
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1)
    return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(int exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1)
      result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) {
  return a + BigInt(-1) * b;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const BigInt &s, const Polynomial &a) {
  std::vector<BigInt> c = a.coeffs_;
  for (auto &x : c)
    x *= s;
  return Polynomial(std::move(c));
}

std::vector<std::string> Polynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto &c : coeffs_)
    out.push_back(c.str());
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt &c = coeffs_[i];
    if (c == 0)
      continue;
    BigInt mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (mag != 1 || i == 0)
      out << mag;
    if (i >= 1)
      out << 'x';
    if (i >= 2)
      out << '^' << i;
    first = false;
  }
  return out.str();
}

Polynomial
product_of_linear(const std::vector<std::pair<BigInt, int>> &factors) {
  Polynomial result = Polynomial::constant(1);
  for (const auto &[root, exponent] : factors)
    if (exponent > 0)
      result = result * Polynomial::linear(root).pow(exponent);
  return result;
}

namespace {

// Dense rational polynomial used only inside the gcd machinery.
using RPoly = std::vector<Rational>;

void rtrim(RPoly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

RPoly to_rational(const Polynomial &p) {
  RPoly r;
  for (const auto &c : p.coefficients())
    r.emplace_back(c);
  return r;
}

RPoly rderivative(const RPoly &p) {
  RPoly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * static_cast<long long>(i));
  rtrim(d);
  return d;
}

RPoly rsub(RPoly a, const RPoly &b) {
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  rtrim(a);
  return a;
}

/// Quotient and remainder of a / b (b non-zero).
std::pair<RPoly, RPoly> rdivmod(RPoly a, const RPoly &b) {
  rtrim(a);
  if (a.size() < b.size())
    return {RPoly{}, a};
  RPoly quotient(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational factor = a.back() / b.back();
    quotient[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= factor * b[i];
    a.pop_back();
    rtrim(a);
  }
  rtrim(quotient);
  return {quotient, a};
}

RPoly rmonic(RPoly p) {
  rtrim(p);
  if (p.empty())
    return p;
  Rational lead = p.back();
  for (auto &c : p)
    c /= lead;
  return p;
}

RPoly rgcd(RPoly a, RPoly b) {
  rtrim(a);
  rtrim(b);
  while (!b.empty()) {
    RPoly r = rdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return rmonic(a);
}

/// Scale to integer coefficients with content 1 and positive leading term.
Polynomial primitive(const RPoly &p) {
  BigInt lcm = 1;
  for (const auto &c : p)
    lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<BigInt> ints;
  for (const auto &c : p)
    ints.push_back(numerator(c) * (lcm / denominator(c)));
  BigInt g = 0;
  for (const auto &c : ints)
    g = boost::multiprecision::gcd(g, c);
  if (g != 0)
    for (auto &c : ints)
      c /= g;
  if (!ints.empty() && ints.back() < 0)
    for (auto &c : ints)
      c = -c;
  return Polynomial(std::move(ints));
}

} // namespace

std::vector<std::pair<Polynomial, int>>
square_free_decomposition(const Polynomial &p) {
  if (p.is_zero())
    throw ZeroPolynomial("square-free decomposition of the zero polynomial");
  std::vector<std::pair<Polynomial, int>> result;
  RPoly f = rmonic(to_rational(p));
  if (f.size() <= 1)
    return result;
  RPoly fp = rderivative(f);
  RPoly a0 = rgcd(f, fp);
  RPoly b = rdivmod(f, a0).first;
  RPoly c = rdivmod(fp, a0).first;
  RPoly d = rsub(c, rderivative(b));
  int multiplicity = 1;
  while (b.size() > 1) {
    RPoly a = rgcd(b, d);
    if (a.size() > 1)
      result.emplace_back(primitive(a), multiplicity);
    b = rdivmod(b, a).first;
    c = rdivmod(d, a).first;
    d = rsub(c, rderivative(b));
    ++multiplicity;
  }
  return result;
}

} // namespace qspec
