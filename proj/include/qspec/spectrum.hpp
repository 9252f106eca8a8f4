#pragma once

#include <complex>
#include <string>
#include <vector>

namespace qspec {

using Complex = std::complex<double>;

struct Eigenvalue {
  Complex value;
  int mult = 1;
};

/// Multiset of complex eigenvalues. Entries are kept sorted by real part
/// then imaginary part, both descending.
class Spectrum {
public:
  Spectrum() = default;

  /// Builds a spectrum from raw values, merging values closer than
  /// `cluster_tol` (single linkage) into one entry at the cluster mean.
  static Spectrum from_values(const std::vector<Complex> &values,
                              double cluster_tol = 1e-6);

  /// Appends an entry; mult == 0 is ignored.
  void add(Complex value, int mult = 1);
  void add(double value, int mult = 1) { add(Complex(value, 0.0), mult); }
  void merge(const Spectrum &other);

  const std::vector<Eigenvalue> &entries() const { return entries_; }
  /// Total multiplicity.
  int size() const;
  bool empty() const { return entries_.empty(); }

  /// Every value repeated by its multiplicity, in entry order.
  std::vector<Complex> expanded() const;

  double max_modulus() const;
  /// Value with the largest real part (first entry).
  Complex max_real() const;

private:
  void sort();
  std::vector<Eigenvalue> entries_;
};

/// Multiset equality: true iff the expanded values admit a one-to-one
/// pairing with every paired distance below `tol`.
bool spectra_equal(const Spectrum &a, const Spectrum &b, double tol = 1e-7);

/// True iff every value of `sub` (with multiplicity) pairs with a distinct
/// value of `super` within `tol`.
bool spectrum_contains(const Spectrum &super, const Spectrum &sub,
                       double tol = 1e-7);

/// Smallest tolerance at which the two multisets pair up (bottleneck
/// matching distance); infinity when the sizes differ.
double spectrum_distance(const Spectrum &a, const Spectrum &b);

std::string to_string(const Spectrum &s);

} // namespace qspec
