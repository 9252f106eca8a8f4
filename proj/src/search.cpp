#include "qspec/search.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "qspec/linalg.hpp"
#include "qspec/theorems.hpp"

namespace qspec {

std::string_view objective_name(Objective o) {
  switch (o) {
  case Objective::Rho:
    return "rho";
  case Objective::Q:
    return "q";
  case Objective::RhoD:
    return "rhoD";
  case Objective::QD:
    return "qD";
  }
  return "?";
}

Objective parse_objective(std::string_view text) {
  for (auto o : kAllObjectives)
    if (objective_name(o) == text)
      return o;
  throw ParseError("unknown objective '" + std::string(text) +
                   "' (expected rho, q, rhoD or qD)");
}

std::string_view mode_name(Mode m) { return m == Mode::Max ? "max" : "min"; }

Mode parse_mode(std::string_view text) {
  if (text == "max")
    return Mode::Max;
  if (text == "min")
    return Mode::Min;
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

MatrixKind objective_kind(Objective o) {
  switch (o) {
  case Objective::Rho:
    return MatrixKind::A;
  case Objective::Q:
    return MatrixKind::Q;
  case Objective::RhoD:
    return MatrixKind::D;
  case Objective::QD:
    return MatrixKind::DQ;
  }
  return MatrixKind::A;
}

int worker_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1)
    hw = 1;
  if (const char *env = std::getenv("SPECTRA_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1)
      hw = std::min(hw, cap);
  }
  return hw;
}

// ---------------------------------------------------------------------------
// Bitmask encodings. Rows hold out-neighbour sets; n <= 8.

namespace {

constexpr int kMaxRows = 8;
using Rows = std::array<std::uint8_t, kMaxRows>;

struct Slot {
  int u, v;
};

std::vector<Slot> slots_for(int n, bool directed) {
  std::vector<Slot> out;
  for (int u = 0; u < n; ++u)
    for (int v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v)
        out.push_back({u, v});
  return out;
}

Rows rows_of(std::uint64_t mask, const std::vector<Slot> &slots,
             bool directed) {
  Rows rows{};
  while (mask) {
    int b = std::countr_zero(mask);
    mask &= mask - 1;
    const Slot &s = slots[b];
    rows[s.u] |= std::uint8_t(1u << s.v);
    if (!directed)
      rows[s.v] |= std::uint8_t(1u << s.u);
  }
  return rows;
}

Rows transpose(const Rows &rows, int n) {
  Rows t{};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (rows[u] >> v & 1)
        t[v] |= std::uint8_t(1u << u);
  return t;
}

std::uint8_t reach(const Rows &rows, std::uint8_t alive, int start) {
  std::uint8_t seen = std::uint8_t(1u << start), frontier = seen;
  while (frontier) {
    std::uint8_t next = 0;
    for (std::uint8_t f = frontier; f; f &= f - 1)
      next |= rows[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool alive_connected(const Rows &rows, const Rows &rev, std::uint8_t alive,
                     bool directed) {
  int start = std::countr_zero(alive);
  if (reach(rows, alive, start) != alive)
    return false;
  return !directed || reach(rev, alive, start) == alive;
}

/// Vertex subsets of {0..n-1} of size 1..n-2 ordered by size.
const std::vector<std::uint8_t> &cut_candidates(int n) {
  static std::array<std::vector<std::uint8_t>, kMaxRows + 1> cache;
  static std::once_flag flags[kMaxRows + 1];
  std::call_once(flags[n], [n] {
    auto &list = cache[n];
    for (int size = 1; size <= n - 2; ++size)
      for (unsigned s = 0; s < (1u << n); ++s)
        if (std::popcount(s) == size)
          list.push_back(static_cast<std::uint8_t>(s));
  });
  return cache[n];
}

/// 0 when not (strongly) connected, else the vertex connectivity.
int kappa_of(const Rows &rows, int n, bool directed) {
  const std::uint8_t full = std::uint8_t((1u << n) - 1);
  Rows rev = directed ? transpose(rows, n) : rows;
  if (!alive_connected(rows, rev, full, directed))
    return 0;
  for (std::uint8_t s : cut_candidates(n))
    if (!alive_connected(rows, rev, full & ~s, directed))
      return std::popcount(s);
  return n - 1;
}

using Small = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0,
                            kMaxRows, kMaxRows>;

double radius(const Small &m, bool symmetric) {
  if (symmetric) {
    Eigen::SelfAdjointEigenSolver<Small> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw ConvergenceFailure("symmetric eigensolver did not converge");
    return std::max(std::abs(solver.eigenvalues().maxCoeff()),
                    std::abs(solver.eigenvalues().minCoeff()));
  }
  // the default iteration cap is too small for some 0/1 digraph matrices
  Eigen::EigenSolver<Small> solver;
  solver.setMaxIterations(100 * m.rows() * m.rows());
  solver.compute(m, false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("QR iteration hit its cap of 100*n^2 steps");
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    best = std::max(best, std::abs(solver.eigenvalues()(i)));
  return best;
}

/// Objective values for the requested objectives (others left at 0).
std::array<double, 4> objectives(const Rows &rows, int n, bool directed,
                                 unsigned which) {
  std::array<double, 4> out{};
  const bool sym = !directed;
  if (which & 0b0011) {
    Small a = Small::Zero(n, n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        a(u, v) = rows[u] >> v & 1;
    if (which & 0b0001)
      out[0] = radius(a, sym);
    if (which & 0b0010) {
      for (int u = 0; u < n; ++u)
        a(u, u) = std::popcount(rows[u]);
      out[1] = radius(a, sym);
    }
  }
  if (which & 0b1100) {
    Small d = Small::Zero(n, n);
    const std::uint8_t full = std::uint8_t((1u << n) - 1);
    for (int s = 0; s < n; ++s) {
      std::uint8_t seen = std::uint8_t(1u << s), frontier = seen;
      for (int level = 1; frontier; ++level) {
        std::uint8_t next = 0;
        for (std::uint8_t f = frontier; f; f &= f - 1)
          next |= rows[std::countr_zero(f)];
        next &= full & ~seen;
        for (std::uint8_t x = next; x; x &= x - 1)
          d(s, std::countr_zero(x)) = level;
        seen |= next;
        frontier = next;
      }
    }
    if (which & 0b0100)
      out[2] = radius(d, sym);
    if (which & 0b1000) {
      for (int u = 0; u < n; ++u)
        d(u, u) = d.row(u).sum();
      out[3] = radius(d, sym);
    }
  }
  return out;
}

constexpr double kTieTol = 1e-9;
constexpr std::size_t kOptimizerCap = 200000;

bool ties(double a, double b) {
  return std::abs(a - b) <= kTieTol * std::max(1.0, std::abs(b));
}

void offer(Optimum &o, double value, std::uint64_t mask, Mode mode) {
  if (!o.found) {
    o.found = true;
    o.value = value;
    o.masks = {mask};
    return;
  }
  if (ties(value, o.value)) {
    if (o.masks.size() < kOptimizerCap)
      o.masks.push_back(mask);
    else
      o.truncated = true;
    if (mode == Mode::Max ? value > o.value : value < o.value)
      o.value = value;
    return;
  }
  if (mode == Mode::Max ? value > o.value : value < o.value) {
    o.value = value;
    o.masks = {mask};
    o.truncated = false;
  }
}

void merge_optimum(Optimum &into, const Optimum &other, Mode mode) {
  if (!other.found)
    return;
  if (!into.found) {
    into = other;
    return;
  }
  if (ties(other.value, into.value) || ties(into.value, other.value)) {
    into.value = mode == Mode::Max ? std::max(into.value, other.value)
                                   : std::min(into.value, other.value);
    std::vector<std::uint64_t> all;
    std::merge(into.masks.begin(), into.masks.end(), other.masks.begin(),
               other.masks.end(), std::back_inserter(all));
    all.erase(std::unique(all.begin(), all.end()), all.end());
    into.truncated = into.truncated || other.truncated;
    if (all.size() > kOptimizerCap) {
      all.resize(kOptimizerCap);
      into.truncated = true;
    }
    into.masks = std::move(all);
    return;
  }
  if (mode == Mode::Max ? other.value > into.value : other.value < into.value)
    into = other;
}

void check_budget(int n, bool directed) {
  const int limit = directed ? kMaxDirectedOrder : kMaxUndirectedOrder;
  if (n < 2 || n > limit)
    throw BudgetExceeded(std::string(directed ? "directed" : "undirected") +
                         " enumeration supports 2 <= n <= " +
                         std::to_string(limit) + ", got n=" +
                         std::to_string(n));
}

ScanTable empty_table(int n, bool directed) {
  ScanTable t;
  t.n = n;
  t.directed = directed;
  t.members.assign(n, 0);
  t.max.resize(n);
  t.min.resize(n);
  return t;
}

/// Scans masks in [lo, hi); `which` selects objectives, `only_kappa` (if
/// positive) skips objective work for other connectivity classes.
ScanTable scan_range(int n, bool directed, std::uint64_t lo, std::uint64_t hi,
                     unsigned which, int only_kappa) {
  ScanTable t = empty_table(n, directed);
  const auto slots = slots_for(n, directed);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    ++t.examined;
    Rows rows = rows_of(mask, slots, directed);
    int kappa = kappa_of(rows, n, directed);
    if (kappa == 0)
      continue;
    ++t.members[0];
    ++t.members[kappa];
    if (only_kappa > 0 && kappa != only_kappa)
      continue;
    auto values = objectives(rows, n, directed, which);
    for (int o = 0; o < 4; ++o) {
      if (!(which >> o & 1))
        continue;
      for (int bucket : {0, kappa}) {
        offer(t.max[bucket][o], values[o], mask, Mode::Max);
        offer(t.min[bucket][o], values[o], mask, Mode::Min);
      }
    }
  }
  for (auto *side : {&t.max, &t.min})
    for (auto &bucket : *side)
      for (auto &opt : bucket)
        std::sort(opt.masks.begin(), opt.masks.end());
  return t;
}

ScanTable sharded_scan(int n, bool directed, int shards, unsigned which,
                       int only_kappa) {
  check_budget(n, directed);
  const std::uint64_t total = std::uint64_t(1) << slot_count(n, directed);
  const int workers = worker_threads();
  if (shards <= 0)
    shards = workers;
  shards = static_cast<int>(std::min<std::uint64_t>(shards, total));
  std::vector<ScanTable> parts(shards);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int s; (s = next.fetch_add(1)) < shards;) {
      std::uint64_t lo = total * s / shards, hi = total * (s + 1) / shards;
      parts[s] = scan_range(n, directed, lo, hi, which, only_kappa);
    }
  };
  const int threads = std::min(workers, shards);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i)
    pool.emplace_back(work);
  work();
  for (auto &th : pool)
    th.join();
  ScanTable result = empty_table(n, directed);
  for (const auto &part : parts)
    result.merge(part);
  return result;
}

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

int slot_count(int n, bool directed) {
  return directed ? n * (n - 1) : n * (n - 1) / 2;
}

AnyGraph decode_mask(std::uint64_t mask, int n, bool directed) {
  const auto slots = slots_for(n, directed);
  if (slots.size() < 64 && (mask >> slots.size()) != 0)
    throw InvalidParameters("mask has bits beyond the edge slots");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t b = 0; b < slots.size(); ++b)
    if (mask >> b & 1)
      edges.emplace_back(slots[b].u, slots[b].v);
  if (directed)
    return Digraph(n, edges);
  return Graph(n, edges);
}

std::uint64_t encode_mask(const AnyGraph &g) {
  return std::visit(
      [](const auto &graph) {
        const int n = graph.order();
        constexpr bool directed = std::decay_t<decltype(graph)>::directed;
        if (slot_count(n, directed) > 64)
          throw BudgetExceeded("graph too large for a 64-bit mask");
        std::uint64_t mask = 0;
        for (auto [u, v] : graph.edges()) {
          int index = directed ? u * (n - 1) + (v < u ? v : v - 1)
                               : u * n - u * (u + 1) / 2 + (v - u - 1);
          mask |= std::uint64_t(1) << index;
        }
        return mask;
      },
      g);
}

std::vector<std::uint64_t> enumerate(int n, bool directed, int kappa) {
  check_budget(n, directed);
  if (kappa < 1 || kappa > n - 1)
    throw InvalidParameters("kappa must lie in [1, n-1]");
  const auto slots = slots_for(n, directed);
  const std::uint64_t total = std::uint64_t(1) << slots.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (kappa_of(rows_of(mask, slots, directed), n, directed) == kappa)
      out.push_back(mask);
  return out;
}

std::vector<std::uint64_t> labeled_isomorphs(const AnyGraph &g) {
  return std::visit(
      [](const auto &graph) {
        std::vector<Vertex> perm(graph.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::uint64_t> out;
        do {
          out.push_back(encode_mask(graph.relabeled(perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      },
      g);
}

bool isomorphic(const AnyGraph &a, const AnyGraph &b) {
  if (a.index() != b.index() || order(a) != order(b))
    return false;
  std::uint64_t target = encode_mask(b);
  auto copies = labeled_isomorphs(a);
  return std::binary_search(copies.begin(), copies.end(), target);
}

void ScanTable::merge(const ScanTable &other) {
  if (members.empty()) {
    *this = other;
    return;
  }
  examined += other.examined;
  for (std::size_t b = 0; b < members.size(); ++b) {
    members[b] += other.members[b];
    for (int o = 0; o < 4; ++o) {
      merge_optimum(max[b][o], other.max[b][o], Mode::Max);
      merge_optimum(min[b][o], other.min[b][o], Mode::Min);
    }
  }
}

ScanTable scan_all(int n, bool directed, int shards) {
  return sharded_scan(n, directed, shards, 0b1111, 0);
}

std::vector<FamilySpec> claimed_extremal(int n, int k, bool directed,
                                         Objective o, Mode m) {
  const bool claimed_direction =
      (o == Objective::Rho || o == Objective::Q) ? m == Mode::Max
                                                 : m == Mode::Min;
  if (!claimed_direction || k < 1 || k > n - 2)
    return {};
  if (directed)
    return digraph_bound(n, k, objective_kind(o)).extremal;
  return graph_bound(n, k, objective_kind(o)).extremal;
}

ExtremalCertificate certify(const ScanTable &table, int k, Objective o,
                            Mode m, const std::vector<FamilySpec> &claimed) {
  if (k < 0 || k >= static_cast<int>(table.members.size()))
    throw InvalidParameters("connectivity bucket out of range");
  ExtremalCertificate c;
  c.n = table.n;
  c.k = k;
  c.directed = table.directed;
  c.objective = o;
  c.mode = m;
  c.examined = table.examined;
  c.members = table.members[k];
  const Optimum &opt = (m == Mode::Max ? table.max : table.min)[k]
                                                              [static_cast<int>(o)];
  c.value = opt.value;
  c.optimizers = opt.masks;

  std::vector<char> matched(c.optimizers.size(), 0);
  std::vector<std::vector<std::uint64_t>> seen_sets;
  for (const auto &spec : claimed) {
    auto copies = labeled_isomorphs(build(spec));
    if (std::find(seen_sets.begin(), seen_sets.end(), copies) !=
        seen_sets.end())
      continue; // isomorphic to a member already listed
    seen_sets.push_back(copies);
    MemberCheck check{family_name(spec), copies.size(), 0};
    for (std::size_t i = 0; i < c.optimizers.size(); ++i)
      if (std::binary_search(copies.begin(), copies.end(), c.optimizers[i])) {
        matched[i] = 1;
        ++check.found;
      }
    c.classification.push_back(check);
  }
  c.unclassified = static_cast<std::size_t>(
      std::count(matched.begin(), matched.end(), 0));
  c.claim_holds = opt.found && !claimed.empty() && !opt.truncated &&
                  c.unclassified == 0;
  for (const auto &check : c.classification)
    c.claim_holds = c.claim_holds && check.found == check.isomorphs;
  c.note = "exhaustive over labeled " +
           std::string(table.directed ? "digraphs" : "graphs") + " with n=" +
           std::to_string(table.n) +
           "; equality for larger n is not covered by this certificate";
  if (opt.truncated)
    c.note += "; optimizer list truncated";
  if (claimed.empty())
    c.note += "; no extremal members claimed for this objective and mode";
  return c;
}

ExtremalCertificate extremal_scan(const ScanJob &job) {
  check_budget(job.n, job.directed);
  if (job.k < 1 || job.k > job.n - 2)
    throw InvalidParameters("k must lie in [1, n-2]");
  unsigned which = 1u << static_cast<int>(job.objective);
  ScanTable table = sharded_scan(job.n, job.directed, job.shards, which, job.k);
  return certify(table, job.k, job.objective, job.mode,
                 claimed_extremal(job.n, job.k, job.directed, job.objective,
                                  job.mode));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Vertex> complement_of(const std::vector<Vertex> &set, int n) {
  std::vector<char> in(n, 0);
  for (Vertex v : set)
    in[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[v])
      out.push_back(v);
  return out;
}

Domination finish(int n, const std::vector<Vertex> &cut,
                  const std::vector<Vertex> &first, bool directed) {
  Domination d;
  d.k = static_cast<int>(cut.size());
  d.p = static_cast<int>(first.size());
  d.witness.assign(n, -1);
  int next = 0;
  for (Vertex v : first)
    d.witness[v] = next++;
  for (Vertex v : cut)
    d.witness[v] = next++;
  for (Vertex v = 0; v < n; ++v)
    if (d.witness[v] < 0)
      d.witness[v] = next++;
  if (directed)
    d.host = build(KnkpDigraph{n, d.k, d.p});
  else
    d.host = build(KnkpGraph{n, d.k, d.p});
  return d;
}

} // namespace

Domination dominate_with_extremal(const Digraph &dg) {
  if (!is_strongly_connected(dg))
    throw NotStronglyConnected("input digraph is not strongly connected");
  const int n = dg.order();
  std::vector<Vertex> cut = minimum_vertex_cut(dg);
  std::vector<Vertex> rest = complement_of(cut, n);
  Digraph h = dg.induced(rest);
  auto comps = strong_components(h);
  std::vector<int> comp_of(rest.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c])
      comp_of[v] = static_cast<int>(c);
  std::vector<char> has_in(comps.size(), 0);
  for (auto [u, v] : h.edges())
    if (comp_of[u] != comp_of[v])
      has_in[comp_of[v]] = 1;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (!has_in[c]) {
      std::vector<Vertex> first;
      for (Vertex v : comps[c])
        first.push_back(rest[v]);
      return finish(n, cut, first, true);
    }
  throw NotStronglyConnected("no source component after removing the cut");
}

Domination dominate_with_extremal(const Graph &g) {
  if (!is_connected(g))
    throw DisconnectedInput("input graph is not connected");
  const int n = g.order();
  std::vector<Vertex> cut = minimum_vertex_cut(g);
  std::vector<Vertex> rest = complement_of(cut, n);
  Graph h = g.induced(rest);
  // component of the first remaining vertex
  std::vector<char> seen(rest.size(), 0);
  std::vector<Vertex> stack{0}, first;
  seen[0] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    first.push_back(rest[u]);
    for (Vertex v : h.out_neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  std::sort(first.begin(), first.end());
  return finish(n, cut, first, false);
}

bool is_spanning_subgraph(const AnyGraph &g, const AnyGraph &host,
                          const std::vector<Vertex> &witness) {
  if (g.index() != host.index() || order(g) != order(host))
    return false;
  return std::visit(
      overloaded{[&](const Graph &a) {
                   const auto &b = std::get<Graph>(host);
                   for (auto [u, v] : a.edges())
                     if (!b.has_edge(witness[u], witness[v]))
                       return false;
                   return true;
                 },
                 [&](const Digraph &a) {
                   const auto &b = std::get<Digraph>(host);
                   for (auto [u, v] : a.edges())
                     if (!b.has_edge(witness[u], witness[v]))
                       return false;
                   return true;
                 }},
      g);
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

} // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ splitmix64(trial + 1));
}

BlockSpec random_nonnegative_spec(std::uint64_t seed, int n_max, int t_max) {
  if (t_max < 1 || n_max < t_max)
    throw InvalidParameters("need 1 <= t_max <= n_max");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
  };
  auto coefficient = [&] {
    return Rational(static_cast<long long>(uniform(0, 1000)), 100);
  };
  const int t = static_cast<int>(uniform(1, t_max));
  const int n = static_cast<int>(uniform(t, n_max));
  BlockSpec spec;
  spec.sizes.assign(t, 1);
  for (int extra = n - t; extra > 0; --extra)
    ++spec.sizes[uniform(0, t - 1)];
  for (int i = 0; i < t; ++i) {
    spec.l.push_back(coefficient());
    spec.p.push_back(coefficient());
  }
  spec.s.assign(t, std::vector<Rational>(t, 0));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j)
        spec.s[i][j] = coefficient();
  return spec;
}

std::optional<Counterexample> conjecture_search(std::uint64_t trials,
                                                int n_max, int t_max,
                                                std::uint64_t seed,
                                                int threads) {
  if (threads <= 0)
    threads = worker_threads();
  std::atomic<std::uint64_t> first_fail{trials};
  std::mutex lock;
  std::optional<Counterexample> found;
  auto work = [&](int id) {
    for (std::uint64_t i = id; i < trials && i < first_fail.load();
         i += threads) {
      BlockSpec spec = random_nonnegative_spec(trial_seed(seed, i), n_max, t_max);
      ProbeResult r = conjecture_probe(realize_numeric(spec), spec.partition());
      if (!r.holds) {
        std::lock_guard<std::mutex> guard(lock);
        if (!found || i < found->trial) {
          found = Counterexample{i, spec, r};
          first_fail = i;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i)
    pool.emplace_back(work, i);
  work(0);
  for (auto &th : pool)
    th.join();
  return found;
}

} // namespace qspec
