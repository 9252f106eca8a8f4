#include "qspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qspec {

namespace {

bool descending(const Eigenvalue &a, const Eigenvalue &b) {
  if (a.value.real() != b.value.real())
    return a.value.real() > b.value.real();
  return a.value.imag() > b.value.imag();
}

int find_root(std::vector<int> &parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Kuhn's augmenting paths on the bipartite "within tol" graph.
bool augment(int u, const std::vector<std::vector<int>> &adj,
             std::vector<int> &match_right, std::vector<char> &seen) {
  for (int v : adj[u]) {
    if (seen[v])
      continue;
    seen[v] = 1;
    if (match_right[v] < 0 || augment(match_right[v], adj, match_right, seen)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

/// Size of a maximum matching pairing `left` values with `right` values.
int max_pairing(const std::vector<Complex> &left,
                const std::vector<Complex> &right, double tol) {
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (std::abs(left[i] - right[j]) < tol)
        adj[i].push_back(static_cast<int>(j));
  std::vector<int> match_right(right.size(), -1);
  int matched = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::vector<char> seen(right.size(), 0);
    if (augment(static_cast<int>(i), adj, match_right, seen))
      ++matched;
    else
      return matched; // caller only needs to know whether every left pairs
  }
  return matched;
}

} // namespace

Spectrum Spectrum::from_values(const std::vector<Complex> &values,
                               double cluster_tol) {
  const int n = static_cast<int>(values.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  // Sorting by real part lets the linkage scan stop early.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return values[a].real() < values[b].real();
  });
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Complex &x = values[order[a]];
      const Complex &y = values[order[b]];
      if (y.real() - x.real() >= cluster_tol)
        break;
      if (std::abs(x - y) < cluster_tol)
        parent[find_root(parent, order[a])] = find_root(parent, order[b]);
    }

  std::vector<Complex> sum(n, 0.0);
  std::vector<int> count(n, 0);
  for (int i = 0; i < n; ++i) {
    int r = find_root(parent, i);
    sum[r] += values[i];
    ++count[r];
  }
  Spectrum s;
  for (int i = 0; i < n; ++i)
    if (count[i] > 0)
      s.entries_.push_back({sum[i] / static_cast<double>(count[i]), count[i]});
  s.sort();
  return s;
}

void Spectrum::add(Complex value, int mult) {
  if (mult < 0)
    throw std::invalid_argument("negative multiplicity");
  if (mult == 0)
    return;
  entries_.push_back({value, mult});
  sort();
}

void Spectrum::merge(const Spectrum &other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  sort();
}

void Spectrum::sort() {
  std::stable_sort(entries_.begin(), entries_.end(), descending);
}

int Spectrum::size() const {
  int total = 0;
  for (const auto &e : entries_)
    total += e.mult;
  return total;
}

std::vector<Complex> Spectrum::expanded() const {
  std::vector<Complex> out;
  for (const auto &e : entries_)
    out.insert(out.end(), e.mult, e.value);
  return out;
}

double Spectrum::max_modulus() const {
  double best = 0.0;
  for (const auto &e : entries_)
    best = std::max(best, std::abs(e.value));
  return best;
}

Complex Spectrum::max_real() const {
  if (entries_.empty())
    throw std::out_of_range("empty spectrum");
  return entries_.front().value;
}

bool spectra_equal(const Spectrum &a, const Spectrum &b, double tol) {
  if (a.size() != b.size())
    return false;
  auto x = a.expanded();
  return max_pairing(x, b.expanded(), tol) == static_cast<int>(x.size());
}

bool spectrum_contains(const Spectrum &super, const Spectrum &sub,
                       double tol) {
  if (sub.size() > super.size())
    return false;
  auto x = sub.expanded();
  return max_pairing(x, super.expanded(), tol) == static_cast<int>(x.size());
}

double spectrum_distance(const Spectrum &a, const Spectrum &b) {
  if (a.size() != b.size())
    return std::numeric_limits<double>::infinity();
  auto x = a.expanded();
  auto y = b.expanded();
  if (x.empty())
    return 0.0;
  std::vector<double> candidates;
  for (const auto &u : x)
    for (const auto &v : y)
      candidates.push_back(std::abs(u - v));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  // pairing within (d + tiny) is monotone in d; find the smallest feasible d
  std::size_t lo = 0, hi = candidates.size() - 1;
  auto feasible = [&](double d) {
    return max_pairing(x, y, std::nextafter(d, 2 * d + 1)) ==
           static_cast<int>(x.size());
  };
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

std::string to_string(const Spectrum &s) {
  std::ostringstream out;
  out.precision(9);
  out << '{';
  bool first = true;
  for (const auto &e : s.entries()) {
    if (!first)
      out << ", ";
    first = false;
    out << e.value.real();
    if (e.value.imag() != 0.0)
      out << (e.value.imag() < 0 ? "-" : "+") << std::abs(e.value.imag())
          << 'i';
    if (e.mult > 1)
      out << "^[" << e.mult << ']';
  }
  out << '}';
  return out.str();
}

} // namespace qspec
