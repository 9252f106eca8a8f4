#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qspec/families.hpp"
#include "qspec/graph.hpp"
#include "qspec/linalg.hpp"

using namespace qspec;

namespace {

Polynomial poly(std::initializer_list<long long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return Polynomial(v);
}

NumericMatrix grid(std::initializer_list<std::initializer_list<double>> rows) {
  return NumericMatrix(rows);
}

/// Random nonnegative matrix with a Hamiltonian cycle of positive entries,
/// hence irreducible.
NumericMatrix random_irreducible(std::mt19937_64 &rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::bernoulli_distribution sparse(0.5);
  NumericMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = sparse(rng) ? u(rng) : 0.0;
  for (int i = 0; i < n; ++i)
    m(i, (i + 1) % n) += 0.5;
  return m;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
  Polynomial p = poly({-1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  CHECK(p == Polynomial::linear(1) * Polynomial::linear(-1));
  CHECK(p.evaluate(BigInt(3)) == 8);
  CHECK(p.derivative() == poly({0, 2}));
  CHECK(Polynomial::linear(2).pow(3) == poly({-8, 12, -6, 1}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(poly({4, -6, -3, 1}).to_string() == "x^3 - 3x^2 - 6x + 4");
  CHECK(poly({0, 0, 1}).to_strings() == std::vector<std::string>{"0", "0", "1"});
  CHECK(product_of_linear({{0, 1}, {5, 2}}) ==
        Polynomial::x_power(1) * Polynomial::linear(5).pow(2));
}

TEST_CASE("square-free decomposition") {
  Polynomial p = Polynomial::linear(2).pow(3) * Polynomial::linear(-1) *
                 poly({1, 0, 1}).pow(2);
  auto parts = square_free_decomposition(p);
  Polynomial rebuilt = Polynomial::constant(1);
  for (const auto &[factor, mult] : parts)
    rebuilt = rebuilt * factor.pow(mult);
  CHECK(rebuilt == p);
  CHECK_THROWS_AS(square_free_decomposition(Polynomial()), ZeroPolynomial);
}

TEST_CASE("char_poly") {
  CHECK(char_poly(ExactMatrix(2)) == Polynomial::x_power(2));
  CHECK(char_poly(ExactMatrix(0)) == Polynomial::constant(1));
  // petersen factors as (x-3)(x-1)^5(x+2)^4
  CHECK(char_poly(build_matrix(build_graph(Petersen{}), MatrixKind::A)) ==
        product_of_linear({{3, 1}, {1, 5}, {-2, 4}}));

  SUBCASE("agrees with determinant at random points") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = static_cast<int>(oracle::draw(rng, 1, 8));
      ExactMatrix m = oracle::random_int_matrix(rng, n, -3, 3);
      Polynomial cp = char_poly(m);
      REQUIRE(cp.is_monic());
      REQUIRE(cp.degree() == n);
      for (int k = 0; k < 5; ++k) {
        BigInt x = oracle::draw(rng, -20, 20);
        REQUIRE(cp.evaluate(x) == oracle::det_shifted(m, x));
      }
    }
  }
  SUBCASE("large entries need big integers") {
    // distance matrix of a long directed cycle overflows 64-bit intermediates
    ExactMatrix d = build_matrix(build_digraph(DirectedCycle{16}), MatrixKind::D);
    CHECK(char_poly(d) == oracle::charpoly_by_interpolation(d));
  }
}

TEST_CASE("eigenvalues") {
  CHECK(spectra_equal(eigenvalues(NumericMatrix::identity(3)),
                      [] { Spectrum s; s.add(1.0, 3); return s; }()));
  Spectrum petersen = eigenvalues(to_numeric(build_matrix(build_graph(Petersen{}), MatrixKind::A)));
  REQUIRE(petersen.entries().size() == 3);
  CHECK(petersen.entries()[0].value.real() == doctest::Approx(3));
  CHECK(petersen.entries()[1].mult == 5);
  CHECK(petersen.entries()[2].mult == 4);

  Spectrum c3 = eigenvalues(to_numeric(build_matrix(build_digraph(DirectedCycle{3}), MatrixKind::A)));
  Spectrum roots;
  roots.add(1.0);
  roots.add(Complex(-0.5, std::sqrt(3.0) / 2));
  roots.add(Complex(-0.5, -std::sqrt(3.0) / 2));
  CHECK(spectra_equal(c3, roots));

  SUBCASE("symmetric inputs match Jacobi rotations") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = static_cast<int>(oracle::draw(rng, 1, 12));
      ExactMatrix m = oracle::random_int_matrix(rng, n, -6, 6, true);
      std::vector<std::vector<double>> g(n, std::vector<double>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          g[i][j] = m(i, j).convert_to<double>();
      auto ref = oracle::jacobi_eigenvalues(g);
      auto raw = raw_eigenvalues(to_numeric(m));
      std::vector<double> got;
      for (auto z : raw) {
        REQUIRE(z.imag() == 0.0);
        got.push_back(z.real());
      }
      std::sort(got.rbegin(), got.rend());
      for (int i = 0; i < n; ++i)
        REQUIRE(got[i] == doctest::Approx(ref[i]).epsilon(1e-9));
    }
  }
  SUBCASE("roots satisfy the characteristic polynomial") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = static_cast<int>(oracle::draw(rng, 1, 12));
      ExactMatrix m = oracle::random_int_matrix(rng, n, -4, 4);
      Polynomial cp = char_poly(m);
      double scale = 0.0;
      for (const auto &c : cp.coefficients())
        scale = std::max(scale, abs(c).convert_to<double>());
      for (auto z : raw_eigenvalues(to_numeric(m))) {
        double mag = std::max(1.0, std::abs(z));
        REQUIRE(std::abs(cp.evaluate(z)) <=
                1e-6 * scale * std::pow(mag, n));
      }
    }
  }
}

TEST_CASE("spectral radius and Perron root") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(spectral_radius(to_numeric(build_matrix(build_digraph(DirectedCycle{n}), MatrixKind::A))) ==
          doctest::Approx(1));
    CHECK(spectral_radius(to_numeric(build_matrix(build_digraph(BidirectedComplete{n}), MatrixKind::Q))) ==
          doctest::Approx(2 * (n - 1)));
  }
  CHECK(spectral_radius(to_numeric(build_matrix(build_graph(Petersen{}), MatrixKind::DQ))) ==
        doctest::Approx(30));

  NumericMatrix J(5, 1.0);
  CHECK(perron_root(J) == doctest::Approx(5).epsilon(1e-12));
  CHECK(perron_root(to_numeric(build_matrix(build_digraph(DirectedCycle{4}), MatrixKind::D))) ==
        doctest::Approx(6).epsilon(1e-10));
  CHECK_THROWS_AS(perron_root(grid({{1, -1}, {1, 1}})), NotNonnegative);
  CHECK_THROWS_AS(perron_root(grid({{1, 1}, {0, 1}})), NotIrreducible);

  SUBCASE("agrees with the eigensolver and the row-sum bounds") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = static_cast<int>(oracle::draw(rng, 1, 9));
      NumericMatrix m = random_irreducible(rng, n);
      double rho = perron_root(m);
      REQUIRE(rho == doctest::Approx(spectral_radius(m)).epsilon(1e-8));
      auto [lo, hi] = row_sum_bounds(m);
      REQUIRE(lo <= rho + 1e-9);
      REQUIRE(rho <= hi + 1e-9);
      const bool regular = hi - lo <= 1e-9;
      const bool touches = rho - lo <= 1e-9 || hi - rho <= 1e-9;
      REQUIRE(regular == touches);
    }
  }
}

TEST_CASE("row-sum bounds") {
  for (int n = 2; n <= 6; ++n) {
    auto [lo, hi] = row_sum_bounds(to_numeric(build_matrix(build_digraph(DirectedCycle{n}), MatrixKind::DQ)));
    CHECK(lo == n * (n - 1));
    CHECK(hi == n * (n - 1));
  }
  auto [a, b] = row_sum_bounds(NumericMatrix::identity(2));
  CHECK(a == 1);
  CHECK(b == 1);
  auto [lo, hi] = row_sum_bounds(to_numeric(build_matrix(build_digraph(KnkpDigraph{6, 2, 1}), MatrixKind::D)));
  CHECK(lo == 5);
  CHECK(hi == 6);
  CHECK_THROWS_AS(row_sum_bounds(grid({{-1}})), NotNonnegative);
}

TEST_CASE("matrix order") {
  NumericMatrix a = grid({{0, 1}, {1, 0}});
  CHECK(matrix_order(a, a) == MatrixOrder::Equal);
  auto cycle = to_numeric(build_matrix(build_digraph(DirectedCycle{4}), MatrixKind::A));
  auto complete = to_numeric(build_matrix(build_digraph(BidirectedComplete{4}), MatrixKind::A));
  CHECK(matrix_order(cycle, complete) == MatrixOrder::Less);
  CHECK(matrix_order(complete, cycle) == MatrixOrder::Greater);
  CHECK(matrix_order(NumericMatrix(3), NumericMatrix(3, 1.0)) == MatrixOrder::MuchLess);
  CHECK(matrix_order(NumericMatrix(3, 1.0), NumericMatrix(3)) == MatrixOrder::MuchGreater);
  CHECK(matrix_order(a, grid({{1, 0}, {0, 1}})) == MatrixOrder::Incomparable);
  CHECK(order_name(MatrixOrder::MuchLess) == "LL");
  CHECK_THROWS_AS(matrix_order(a, NumericMatrix(3)), DimensionMismatch);

  SUBCASE("radius is monotone in the entrywise order") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = static_cast<int>(oracle::draw(rng, 1, 7));
      NumericMatrix big = random_irreducible(rng, n);
      NumericMatrix small = big;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          small(i, j) *= u(rng) < 0.3 ? u(rng) : 1.0;
      small(0, 0) = 0.0;
      big(0, 0) += 0.25; // guarantees small < big
      REQUIRE(spectral_radius(small) < spectral_radius(big));
    }
  }
}

TEST_CASE("poly_roots") {
  Spectrum s = poly_roots(poly({-1, 0, 1}));
  CHECK(spectra_equal(s, [] { Spectrum t; t.add(1.0); t.add(-1.0); return t; }()));
  Spectrum triple = poly_roots(Polynomial::linear(2).pow(3));
  REQUIRE(triple.entries().size() == 1);
  CHECK(triple.entries()[0].mult == 3);
  CHECK(triple.entries()[0].value.real() == 2.0);
  CHECK_THROWS_AS(poly_roots(Polynomial()), ZeroPolynomial);

  Polynomial cubic = poly({4, -6, -3, 1});
  double root = oracle::largest_root_bisect([&](double x) { return cubic.evaluate(x); }, -10, 10);
  CHECK(largest_real_root_cubic(cubic) == doctest::Approx(root).epsilon(1e-12));
  CHECK(largest_real_root_cubic(cubic) == doctest::Approx(4.2014723).epsilon(1e-7));

  SUBCASE("random factored polynomials") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::pair<BigInt, int>> factors;
      Spectrum expected;
      int terms = static_cast<int>(oracle::draw(rng, 1, 4));
      for (int i = 0; i < terms; ++i) {
        long long r = oracle::draw(rng, -9, 9);
        int m = static_cast<int>(oracle::draw(rng, 1, 3));
        factors.emplace_back(r, m);
        expected.add(double(r), m);
      }
      // times an irreducible quadratic with complex roots
      Polynomial p = product_of_linear(factors) * poly({5, 2, 1});
      expected.add(Complex(-1, 2));
      expected.add(Complex(-1, -2));
      REQUIRE(spectrum_distance(poly_roots(p), expected) < 1e-10);
    }
  }
}

TEST_CASE("spectrum multiset comparison") {
  Spectrum a, b;
  a.add(1.0, 2);
  a.add(Complex(0, 1));
  b.add(Complex(0, 1) + 1e-9);
  b.add(1.0 - 1e-9, 2);
  CHECK(spectra_equal(a, a));
  CHECK(spectra_equal(a, b) == spectra_equal(b, a));
  CHECK(spectra_equal(a, b, 1e-7));
  CHECK_FALSE(spectra_equal(a, b, 1e-10));
  CHECK(spectrum_distance(a, b) == doctest::Approx(1e-9).epsilon(1e-3));

  SUBCASE("monotone in the tolerance") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> noise(0.0, 1e-6);
    for (int trial = 0; trial < 200; ++trial) {
      Spectrum x, y;
      int n = static_cast<int>(oracle::draw(rng, 1, 6));
      for (int i = 0; i < n; ++i) {
        double v = double(oracle::draw(rng, -3, 3));
        x.add(v);
        y.add(v + noise(rng));
      }
      bool prev = false;
      for (double tol : {1e-8, 1e-7, 1e-6, 1e-5, 1e-4}) {
        bool now = spectra_equal(x, y, tol);
        REQUIRE(now == spectra_equal(y, x, tol));
        REQUIRE((!prev || now));
        prev = now;
      }
    }
  }
  SUBCASE("clustering and formatting") {
    Spectrum s = Spectrum::from_values({1.0, 1.0 + 1e-9, 3.0, -2.0, -2.0});
    CHECK(to_string(s) == "{3, 1^[2], -2^[2]}");
    CHECK(s.size() == 5);
  }
}
