#include "qspec/matrix.hpp"

#include <cmath>
#include <sstream>

namespace qspec {

NumericMatrix to_numeric(const ExactMatrix &m) {
  NumericMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      out(i, j) = m(i, j).convert_to<double>();
  return out;
}

NumericMatrix to_numeric(const RationalMatrix &m) {
  NumericMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      out(i, j) = m(i, j).convert_to<double>();
  return out;
}

ExactMatrix to_exact(const RationalMatrix &m) {
  ExactMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) {
      const Rational &x = m(i, j);
      if (denominator(x) != 1)
        throw InvalidParameters("matrix entry is not an integer");
      out(i, j) = numerator(x);
    }
  return out;
}

ExactMatrix to_exact(const NumericMatrix &m) {
  ExactMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) {
      double x = m(i, j);
      if (!std::isfinite(x) || x != std::nearbyint(x))
        throw InvalidParameters("matrix entry is not an integer");
      out(i, j) = static_cast<long long>(x);
    }
  return out;
}

ExactMatrix row_sum_diagonal(const ExactMatrix &m) {
  ExactMatrix d(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    d(i, i) = m.row_sum(i);
  return d;
}

std::string to_string(const ExactMatrix &m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j)
      out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

} // namespace qspec
