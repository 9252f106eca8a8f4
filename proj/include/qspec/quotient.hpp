#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qspec/matrix.hpp"
#include "qspec/spectrum.hpp"

namespace qspec {

/// Ordered cells covering {0..n-1}. Cell order is preserved; indices inside
/// a cell are sorted.
class Partition {
public:
  explicit Partition(std::vector<std::vector<int>> cells);

  static Partition discrete(int n);
  static Partition trivial(int n);
  /// Consecutive cells of the given sizes: {0..s0-1 | s0..s0+s1-1 | ...}.
  static Partition from_sizes(const std::vector<int> &sizes);
  /// Syntax `{0,1,2|3,4|5}`; braces optional.
  static Partition parse(std::string_view text);

  int ground_size() const { return n_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::vector<std::vector<int>> &cells() const { return cells_; }
  std::vector<int> sizes() const;
  /// cell index of every element
  const std::vector<int> &cell_of() const { return cell_of_; }

  std::string to_string() const;

private:
  int n_ = 0;
  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_;
};

/// Block data: M_ii = l_i J + p_i I and M_ij = s_ij J on cells of the given
/// sizes. Diagonal entries of s are ignored.
struct BlockSpec {
  std::vector<int> sizes;
  std::vector<Rational> l;
  std::vector<Rational> p;
  std::vector<std::vector<Rational>> s;

  int blocks() const { return static_cast<int>(sizes.size()); }
  int order() const;
  /// Throws InvalidParameters when the shapes disagree or a size is < 1.
  void validate() const;
  Partition partition() const { return Partition::from_sizes(sizes); }
};

struct QuotientReport {
  NumericMatrix B;
  bool equitable = false;
  bool lifted = false;
};

struct InterlacingReport {
  bool interlaces = false;
  bool tight = false;
  /// False only if tight interlacing was seen on a non-equitable partition.
  bool tight_implies_equitable_ok = true;
  std::vector<double> matrix_eigs;   // descending
  std::vector<double> quotient_eigs; // descending
};

struct ProbeResult {
  bool holds = false;
  double rho_B = 0.0;
  double rho_M = 0.0;
};

/// b_ij = (sum of block (i,j) entries) / n_i.
NumericMatrix quotient_matrix(const NumericMatrix &m, const Partition &part);
RationalMatrix quotient_matrix(const ExactMatrix &m, const Partition &part);

/// Every block has constant row sums, within `tol` for floating input.
bool is_equitable(const NumericMatrix &m, const Partition &part,
                  double tol = 1e-12);
bool is_equitable(const ExactMatrix &m, const Partition &part);

RationalMatrix realize_rational(const BlockSpec &spec);
/// Throws InvalidParameters if a coefficient is not an integer.
ExactMatrix realize_exact(const BlockSpec &spec);
NumericMatrix realize_numeric(const BlockSpec &spec);

/// The t x t quotient: b_ii = l_i n_i + p_i, b_ij = s_ij n_j.
RationalMatrix block_quotient(const BlockSpec &spec);

/// sigma(B) together with p_i of multiplicity n_i - 1.
Spectrum block_spectrum(const BlockSpec &spec);

/// Checks that every quotient eigenvalue occurs in sigma(m).
QuotientReport lift_check(const NumericMatrix &m, const Partition &part,
                          double tol = 1e-7);

/// Interlacing of the quotient eigenvalues inside those of symmetric m.
InterlacingReport interlacing_check(const NumericMatrix &m,
                                    const Partition &part, double tol = 1e-9);

/// Compares the largest-real-part eigenvalue of the quotient with the
/// spectral radius of a nonnegative m under an equitable partition.
ProbeResult conjecture_probe(const NumericMatrix &m, const Partition &part,
                             double tol = 1e-7);

} // namespace qspec
