#pragma once

#include <string_view>
#include <utility>

#include "qspec/matrix.hpp"
#include "qspec/polynomial.hpp"
#include "qspec/spectrum.hpp"

namespace qspec {

/// det(xI - M), exact. Division-free (Berkowitz), so entries may be any
/// integers and the result is always monic.
Polynomial char_poly(const ExactMatrix &m);

/// All eigenvalues, clustered within 1e-6. Symmetric input goes through a
/// self-adjoint solver and yields real values.
Spectrum eigenvalues(const NumericMatrix &m);

/// Unclustered eigenvalues, one per index.
std::vector<Complex> raw_eigenvalues(const NumericMatrix &m);

/// Largest eigenvalue modulus.
double spectral_radius(const NumericMatrix &m);

/// Perron root of a nonnegative irreducible matrix by power iteration on
/// M + I with Collatz-Wielandt bracketing.
double perron_root(const NumericMatrix &m);

/// Throws NotNonnegative if any entry is negative.
void require_nonnegative(const NumericMatrix &m);
/// True iff the support digraph of m is strongly connected.
bool is_irreducible(const NumericMatrix &m);

/// (min row sum, max row sum) of a nonnegative matrix.
std::pair<double, double> row_sum_bounds(const NumericMatrix &m);

/// Entrywise comparison: A <= B with A != B is Less, A < B everywhere is
/// MuchLess, and the mirrored cases for >=.
enum class MatrixOrder { Equal, Less, MuchLess, Greater, MuchGreater, Incomparable };

MatrixOrder matrix_order(const NumericMatrix &a, const NumericMatrix &b);
std::string_view order_name(MatrixOrder order);

/// All complex roots with exact multiplicities (taken from the square-free
/// decomposition), Newton-polished on the integer polynomial.
Spectrum poly_roots(const Polynomial &p);

/// Largest real root of a polynomial of degree 3 with real roots or a single
/// real root: trigonometric / Cardano closed form plus Newton polish.
double largest_real_root_cubic(const Polynomial &p);

/// Largest real root of any polynomial with at least one real root.
double largest_real_root(const Polynomial &p);

/// Spectrum of an integer matrix via char_poly and poly_roots, so
/// multiplicities are exact.
Spectrum exact_spectrum(const ExactMatrix &m);

} // namespace qspec
