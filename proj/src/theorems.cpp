#include "qspec/theorems.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>

#include "qspec/linalg.hpp"

namespace qspec {

namespace {

/// Merges equal eigenvalues and drops empty multiplicities.
IntegerSpectrum normalized(IntegerSpectrum s) {
  std::map<long long, int, std::greater<>> merged;
  for (auto [value, mult] : s)
    if (mult > 0)
      merged[value] += mult;
  return IntegerSpectrum(merged.begin(), merged.end());
}

void check_params(int n, int k) {
  if (k < 1 || k > n - 2)
    throw InvalidParameters("need 1 <= k <= n-2, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
}

void check_params(int n, int k, int p) {
  check_params(n, k);
  if (p < 1 || p > n - k - 1)
    throw InvalidParameters("need 1 <= p <= n-k-1, got p=" +
                            std::to_string(p));
}

void require_kind(MatrixKind kind, std::initializer_list<MatrixKind> allowed) {
  for (auto a : allowed)
    if (a == kind)
      return;
  throw InvalidParameters("matrix kind " + std::string(kind_name(kind)) +
                          " not covered here");
}

Polynomial poly(std::initializer_list<long long> coefficients) {
  std::vector<BigInt> c;
  for (long long x : coefficients)
    c.emplace_back(x);
  return Polynomial(std::move(c));
}

Polynomial poly(std::vector<BigInt> coefficients) {
  return Polynomial(std::move(coefficients));
}

/// head * prod(x - r_i) - tail * sum_i w_i prod_{j != i} (x - r_j)
Polynomial arrow_determinant(const Polynomial &head, const Polynomial &tail,
                             const std::vector<long long> &roots,
                             const std::vector<long long> &weights) {
  Polynomial all = Polynomial::constant(1);
  for (long long r : roots)
    all = all * Polynomial::linear(r);
  Polynomial sum;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Polynomial term = Polynomial::constant(weights[i]);
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i)
        term = term * Polynomial::linear(roots[j]);
    sum = sum + term;
  }
  return head * all - tail * sum;
}

Spectrum surd_triple(double fixed, double centre2, double disc) {
  // fixed, (centre2 +- sqrt(disc)) / 2
  Spectrum s;
  s.add(fixed);
  std::complex<double> r = std::sqrt(std::complex<double>(disc, 0.0));
  s.add((centre2 + r) / 2.0);
  s.add((centre2 - r) / 2.0);
  return s;
}

FamilySpec dknkp(int n, int k, int p) { return KnkpDigraph{n, k, p}; }

} // namespace

Spectrum to_spectrum(const IntegerSpectrum &s) {
  std::map<long long, int> merged;
  for (const auto &[value, mult] : s)
    merged[value] += mult;
  Spectrum out;
  for (const auto &[value, mult] : merged)
    out.add(static_cast<double>(value), mult);
  return out;
}

Polynomial to_polynomial(const IntegerSpectrum &s) {
  std::vector<std::pair<BigInt, int>> factors;
  for (const auto &[value, mult] : s)
    factors.emplace_back(value, mult);
  return product_of_linear(factors);
}

BoundResult digraph_bound(int n, int k, MatrixKind kind) {
  check_params(n, k);
  require_kind(kind, {MatrixKind::A, MatrixKind::Q, MatrixKind::D,
                      MatrixKind::DQ});
  const double N = n, K = k;
  BoundResult r;
  const bool single = k == n - 2; // only p = 1 is available
  switch (kind) {
  case MatrixKind::A:
    r.value = (N - 2 + std::sqrt((N - 2) * (N - 2) + 4 * K)) / 2;
    r.extremal = {dknkp(n, k, 1)};
    if (!single)
      r.extremal.push_back(dknkp(n, k, n - k - 1));
    break;
  case MatrixKind::Q:
    r.value = (2 * N + K - 3 +
               std::sqrt((2 * N - K - 3) * (2 * N - K - 3) + 4 * K)) / 2;
    r.extremal = {dknkp(n, k, n - k - 1)};
    break;
  case MatrixKind::D:
    r.value = (N - 2 + std::sqrt((N + 2) * (N + 2) - 4 * K - 8)) / 2;
    r.extremal = {dknkp(n, k, 1)};
    if (!single)
      r.extremal.push_back(dknkp(n, k, n - k - 1));
    break;
  default:
    r.value = (3 * N - 3 + std::sqrt((N + 3) * (N + 3) - 8 * K - 16)) / 2;
    r.extremal = {dknkp(n, k, 1)};
    break;
  }
  return r;
}

Spectrum digraph_quotient_eigs(int n, int k, int p, MatrixKind kind) {
  check_params(n, k, p);
  require_kind(kind, {MatrixKind::A, MatrixKind::Q, MatrixKind::D,
                      MatrixKind::DQ});
  const double N = n, K = k, P = p;
  switch (kind) {
  case MatrixKind::A:
    return surd_triple(-1, N - 2, 4 * P * P - 4 * (N - K) * P + N * N);
  case MatrixKind::Q:
    return surd_triple(N - 2, 3 * N - P - 4,
                       (N - 3 * P) * (N - 3 * P) + 8 * P * K);
  case MatrixKind::D:
    return surd_triple(-1, N - 2, -4 * P * P + 4 * (N - K) * P + N * N);
  default:
    return surd_triple(N - 2, 3 * N + P - 4,
                       (N + 3 * P) * (N + 3 * P) - 16 * P * P - 8 * K * P);
  }
}

double digraph_quotient_radius(int n, int k, int p, MatrixKind kind) {
  return digraph_quotient_eigs(n, k, p, kind).max_real().real();
}

IntegerSpectrum digraph_laplacian_spectra(int n, int k, int p,
                                          MatrixKind kind) {
  check_params(n, k, p);
  require_kind(kind, {MatrixKind::L, MatrixKind::DL});
  const int q = n - p - k;
  if (kind == MatrixKind::L)
    return {{0, 1}, {n, p + k - 1}, {n - p, q}};
  return {{0, 1}, {n, p + k - 1}, {n + p, q}};
}

Polynomial graph_bound_cubic(int n, int k, MatrixKind kind) {
  check_params(n, k);
  require_kind(kind, {MatrixKind::A, MatrixKind::D, MatrixKind::DQ});
  const long long N = n, K = k;
  switch (kind) {
  case MatrixKind::A:
    return poly({K * (N - K - 2), -(N + K - 2), -(N - 3), 1});
  case MatrixKind::D:
    return poly({K * N - K * K + 2 * K - 4 * N + 4, -(5 * N - 3 * K - 6),
                 -(N - 3), 1});
  default:
    return poly({-4 * N * N * N + (2 * K + 20) * N * N - (10 * K + 32) * N +
                     12 * K + 16,
                 8 * N * N - 3 * K * N - 24 * N + 8 * K + 16,
                 -(5 * N - K - 6), 1});
  }
}

Polynomial graph_dq_cubic_uncorrected(int n, int k) {
  check_params(n, k);
  const long long N = n, K = k;
  return poly({-4 * N * N * N + 2 * (K + 10) * N * N - 2 * (5 * K + 16) * N +
                   12 * K + 16,
               8 * N * N - 19 * K * N - 24 * N + 8 * K + 16, -(5 * N - K - 6),
               1});
}

BoundResult graph_bound(int n, int k, MatrixKind kind) {
  check_params(n, k);
  require_kind(kind, {MatrixKind::A, MatrixKind::Q, MatrixKind::D,
                      MatrixKind::DQ});
  BoundResult r;
  r.extremal = {KnkpGraph{n, k, 1}};
  if (kind == MatrixKind::Q) {
    const double N = n, K = k;
    r.value = (2 * N + K - 4 +
               std::sqrt((2 * N - K - 4) * (2 * N - K - 4) + 8 * K)) / 2;
  } else {
    r.value = largest_real_root_cubic(graph_bound_cubic(n, k, kind));
  }
  return r;
}

std::pair<long long, Polynomial> graph_q_factored(int n, int k, int p) {
  check_params(n, k, p);
  const long long N = n, K = k, P = p;
  return {N - 2, poly({2 * (K - 2) * (N - 1) - 4 * P * (K - N + P),
                       -(2 * N + K - 4), 1})};
}

Polynomial graph_dq_cubic_expanded(int p, int q, int k) {
  const BigInt P = p, Q = q, K = k;
  BigInt c2 = -(5 * P + 5 * Q + 4 * K - 6);
  BigInt c1 = 8 * P * P + 8 * Q * Q + 5 * K * K + 12 * P * Q + 13 * P * K +
              13 * Q * K - 20 * P - 20 * Q - 16 * K + 12;
  BigInt c0 = -4 * P * P * P - 4 * Q * Q * Q - 2 * K * K * K - 8 * P * P * Q -
              8 * P * Q * Q - 10 * P * P * K - 10 * Q * Q * K - 8 * P * K * K -
              8 * Q * K * K - 16 * P * Q * K + 16 * P * P + 16 * Q * Q +
              10 * K * K + 24 * P * Q + 26 * P * K + 26 * Q * K - 20 * P -
              20 * Q - 16 * K + 8;
  return poly({c0, c1, c2, BigInt(1)});
}

Polynomial graph_quotient_charpoly(int n, int k, int p, MatrixKind kind) {
  check_params(n, k, p);
  require_kind(kind, {MatrixKind::A, MatrixKind::Q, MatrixKind::D,
                      MatrixKind::DQ});
  const long long N = n, K = k, P = p, Q = n - p - k;
  switch (kind) {
  case MatrixKind::A:
    return poly({P * Q - N + P * Q * K + 1, P * Q - 2 * N + 3, -(N - 3), 1});
  case MatrixKind::D:
    return poly({P * Q * K - 3 * P * Q - N + 1, -(3 * P * Q + 2 * N - 3),
                 -(N - 3), 1});
  case MatrixKind::Q: {
    auto [root, quadratic] = graph_q_factored(n, k, p);
    return Polynomial::linear(root) * quadratic;
  }
  default: {
    BlockSpec spec = adjacency_blockspec(KnkpGraph{n, k, p}, MatrixKind::DQ);
    return char_poly(to_exact(block_quotient(spec)));
  }
  }
}

IntegerSpectrum graph_laplacian_spectra(int n, int k, int p, MatrixKind kind) {
  check_params(n, k, p);
  require_kind(kind, {MatrixKind::L, MatrixKind::DL});
  const int q = n - p - k;
  if (kind == MatrixKind::L)
    return normalized({{0, 1}, {k, 1}, {n, k}, {p + k, p - 1}, {q + k, q - 1}});
  return normalized(
      {{0, 1}, {n + p + q, 1}, {n, k}, {n + q, p - 1}, {n + p, q - 1}});
}

Polynomial multipartite_charpoly(const std::vector<int> &parts,
                                 MatrixKind kind) {
  validate(CompleteMultipartite{parts});
  long long n = 0;
  for (int x : parts)
    n += x;
  const long long t = static_cast<long long>(parts.size());
  std::vector<long long> weights(parts.begin(), parts.end());
  std::vector<long long> roots;
  auto prefactor = [&](auto root_of) {
    Polynomial out = Polynomial::constant(1);
    for (long long ni : weights)
      out = out * Polynomial::linear(root_of(ni)).pow(static_cast<int>(ni - 1));
    return out;
  };
  const Polynomial one = Polynomial::constant(1);
  switch (kind) {
  case MatrixKind::A:
    for (long long ni : weights)
      roots.push_back(-ni);
    return Polynomial::x_power(static_cast<int>(n - t)) *
           arrow_determinant(one, one, roots, weights);
  case MatrixKind::L:
    return Polynomial::x_power(1) *
           Polynomial::linear(n).pow(static_cast<int>(t - 1)) *
           prefactor([n](long long ni) { return n - ni; });
  case MatrixKind::Q:
    for (long long ni : weights)
      roots.push_back(n - 2 * ni);
    return prefactor([n](long long ni) { return n - ni; }) *
           arrow_determinant(one, one, roots, weights);
  case MatrixKind::D:
    for (long long ni : weights)
      roots.push_back(ni - 2);
    return Polynomial::linear(-2).pow(static_cast<int>(n - t)) *
           arrow_determinant(one, one, roots, weights);
  case MatrixKind::DL:
    return Polynomial::x_power(1) *
           Polynomial::linear(n).pow(static_cast<int>(t - 1)) *
           prefactor([n](long long ni) { return n + ni; });
  case MatrixKind::DQ:
    for (long long ni : weights)
      roots.push_back(n + 2 * ni - 4);
    return prefactor([n](long long ni) { return n + ni - 4; }) *
           arrow_determinant(one, one, roots, weights);
  }
  throw InvalidParameters("unknown matrix kind");
}

namespace {

struct StarData {
  long long n = 1;
  long long k = 0;
  std::vector<long long> sizes;
  std::vector<long long> weights; // n_i - 1
};

StarData star_data(const std::vector<int> &sizes) {
  validate(CliqueStar{sizes});
  StarData d;
  d.k = static_cast<long long>(sizes.size());
  for (int s : sizes) {
    d.sizes.push_back(s);
    d.weights.push_back(s - 1);
    d.n += s - 1;
  }
  return d;
}

Polynomial star_prefactor(const StarData &d, long long shift) {
  // prod (x - (n_i + shift))^{n_i - 2}
  Polynomial out = Polynomial::constant(1);
  for (long long ni : d.sizes)
    out = out * Polynomial::linear(ni + shift).pow(static_cast<int>(ni - 2));
  return out;
}

} // namespace

Polynomial cliquestar_charpoly(const std::vector<int> &sizes,
                               MatrixKind kind) {
  StarData d = star_data(sizes);
  const long long n = d.n, k = d.k;
  const Polynomial x = Polynomial::x_power(1);
  const Polynomial one = Polynomial::constant(1);
  std::vector<long long> roots;
  switch (kind) {
  case MatrixKind::A:
    for (long long ni : d.sizes)
      roots.push_back(ni - 2);
    return Polynomial::linear(-1).pow(static_cast<int>(n - k - 1)) *
           arrow_determinant(x, one, roots, d.weights);
  case MatrixKind::L: {
    Polynomial out = x * Polynomial::linear(n) *
                     Polynomial::linear(1).pow(static_cast<int>(k - 1));
    return out * star_prefactor(d, 0);
  }
  case MatrixKind::Q:
    for (long long ni : d.sizes)
      roots.push_back(2 * ni - 3);
    return star_prefactor(d, -2) *
           arrow_determinant(Polynomial::linear(n - 1), one, roots, d.weights);
  case MatrixKind::D:
    for (long long ni : d.sizes)
      roots.push_back(-ni);
    return Polynomial::linear(-1).pow(static_cast<int>(n - k - 1)) *
           arrow_determinant(x, poly({1, 2}), roots, d.weights);
  case MatrixKind::DL: {
    Polynomial out = x * Polynomial::linear(n) *
                     Polynomial::linear(2 * n - 1).pow(static_cast<int>(k - 1));
    Polynomial tail = Polynomial::constant(1);
    for (long long ni : d.sizes)
      tail = tail *
             Polynomial::linear(2 * n - ni).pow(static_cast<int>(ni - 2));
    return out * tail;
  }
  case MatrixKind::DQ: {
    for (long long ni : d.sizes)
      roots.push_back(2 * n - 2 * ni - 1);
    Polynomial pre = Polynomial::constant(1);
    for (long long ni : d.sizes)
      pre = pre *
            Polynomial::linear(2 * n - ni - 2).pow(static_cast<int>(ni - 2));
    return pre * arrow_determinant(Polynomial::linear(n - 1),
                                   poly({-(2 * n - 3), 2}), roots, d.weights);
  }
  }
  throw InvalidParameters("unknown matrix kind");
}

Polynomial cliquestar_q_charpoly_uncorrected(const std::vector<int> &sizes) {
  StarData d = star_data(sizes);
  std::vector<long long> roots;
  for (long long ni : d.sizes)
    roots.push_back(2 * ni - 3);
  return star_prefactor(d, -2) *
         arrow_determinant(Polynomial::x_power(1), Polynomial::constant(1),
                           roots, d.weights);
}

} // namespace qspec
