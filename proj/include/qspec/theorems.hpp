#pragma once

#include <utility>
#include <vector>

#include "qspec/families.hpp"
#include "qspec/polynomial.hpp"
#include "qspec/spectrum.hpp"

namespace qspec {

/// An extremal value together with the family members claimed to attain it.
struct BoundResult {
  double value = 0.0;
  std::vector<FamilySpec> extremal;
};

/// Integer eigenvalue multiset, e.g. {(0,1), (n,p+k-1), (n-p,q)}.
using IntegerSpectrum = std::vector<std::pair<long long, int>>;

Spectrum to_spectrum(const IntegerSpectrum &s);
Polynomial to_polynomial(const IntegerSpectrum &s);

// Digraphs with vertex connectivity k: A and Q are maximized, D and DQ
// minimized, by K(n,k,p) for the listed p.

BoundResult digraph_bound(int n, int k, MatrixKind kind);

/// The three eigenvalues of the 3x3 quotient of the K(n,k,p) digraph matrix.
Spectrum digraph_quotient_eigs(int n, int k, int p, MatrixKind kind);

/// Largest of digraph_quotient_eigs, in closed form.
double digraph_quotient_radius(int n, int k, int p, MatrixKind kind);

/// L and DL spectra of the K(n,k,p) digraph.
IntegerSpectrum digraph_laplacian_spectra(int n, int k, int p,
                                          MatrixKind kind);

// Undirected graphs with vertex connectivity k.

/// Cubic whose largest root is the extremal value for A, D and DQ at p = 1.
Polynomial graph_bound_cubic(int n, int k, MatrixKind kind);

/// The DQ cubic with -19kn in place of -3kn in the lambda coefficient; kept
/// to show that variant disagrees with the quotient.
Polynomial graph_dq_cubic_uncorrected(int n, int k);

BoundResult graph_bound(int n, int k, MatrixKind kind);

/// Characteristic polynomial of the 3x3 quotient of the K(n,k,p) matrix.
/// A and D come from the closed-form coefficients, Q from its factored
/// form, and DQ from the determinant of the quotient itself.
Polynomial graph_quotient_charpoly(int n, int k, int p, MatrixKind kind);

/// Q only: the root n-2 and the quadratic factor of the cubic above.
std::pair<long long, Polynomial> graph_q_factored(int n, int k, int p);

/// The expanded DQ cubic written in p, q, k (used once as an identity check).
Polynomial graph_dq_cubic_expanded(int p, int q, int k);

IntegerSpectrum graph_laplacian_spectra(int n, int k, int p, MatrixKind kind);

// Factored characteristic polynomials.

Polynomial multipartite_charpoly(const std::vector<int> &parts,
                                 MatrixKind kind);

/// Clique star with clique orders `sizes`. The L and DL forms carry the
/// product over all cliques, and the Q form has the hub factor (x - n + 1).
Polynomial cliquestar_charpoly(const std::vector<int> &sizes, MatrixKind kind);

/// The Q form with a bare x as hub factor; kept to show it is wrong.
Polynomial cliquestar_q_charpoly_uncorrected(const std::vector<int> &sizes);

} // namespace qspec
