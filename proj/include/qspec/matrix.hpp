#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qspec/errors.hpp"

namespace qspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense square matrix in row-major order.
template <typename T> class SquareMatrix {
public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order, const T &fill = T(0))
      : order_(order), data_(order * order, fill) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
      : order_(rows.size()) {
    data_.reserve(order_ * order_);
    for (const auto &row : rows) {
      if (row.size() != order_)
        throw DimensionMismatch("initializer rows must form a square matrix");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t order) {
    SquareMatrix m(order);
    for (std::size_t i = 0; i < order; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t order() const { return order_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }

  const std::vector<T> &data() const { return data_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = i + 1; j < order_; ++j)
        if ((*this)(i, j) != (*this)(j, i))
          return false;
    return true;
  }

  T row_sum(std::size_t i) const {
    T s(0);
    for (std::size_t j = 0; j < order_; ++j)
      s += (*this)(i, j);
    return s;
  }

  friend bool operator==(const SquareMatrix &a, const SquareMatrix &b) {
    return a.order_ == b.order_ && a.data_ == b.data_;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) {
    a.require_same_order(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      a.data_[i] += b.data_[i];
    return a;
  }

  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) {
    a.require_same_order(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      a.data_[i] -= b.data_[i];
    return a;
  }

  friend SquareMatrix operator*(const T &s, SquareMatrix a) {
    for (auto &x : a.data_)
      x *= s;
    return a;
  }

  friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
    a.require_same_order(b);
    SquareMatrix c(a.order_);
    for (std::size_t i = 0; i < a.order_; ++i)
      for (std::size_t k = 0; k < a.order_; ++k) {
        const T &aik = a(i, k);
        if (aik == T(0))
          continue;
        for (std::size_t j = 0; j < a.order_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

private:
  void require_same_order(const SquareMatrix &other) const {
    if (order_ != other.order_)
      throw DimensionMismatch("orders " + std::to_string(order_) + " and " +
                              std::to_string(other.order_));
  }

  std::size_t order_ = 0;
  std::vector<T> data_;
};

/// Integer matrix; all graph matrices live here.
using ExactMatrix = SquareMatrix<BigInt>;
using NumericMatrix = SquareMatrix<double>;
using RationalMatrix = SquareMatrix<Rational>;

NumericMatrix to_numeric(const ExactMatrix &m);
NumericMatrix to_numeric(const RationalMatrix &m);

/// Exact conversion; throws InvalidParameters when an entry is not integral.
ExactMatrix to_exact(const RationalMatrix &m);

/// Exact conversion; throws InvalidParameters when an entry is not an integer.
ExactMatrix to_exact(const NumericMatrix &m);

/// Diagonal matrix carrying the row sums of m.
ExactMatrix row_sum_diagonal(const ExactMatrix &m);

std::string to_string(const ExactMatrix &m);

} // namespace qspec
