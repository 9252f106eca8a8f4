#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qspec/families.hpp"
#include "qspec/quotient.hpp"

namespace qspec {

/// rho = rho(A), q = rho(Q), rhoD = rho(D), qD = rho(DQ).
enum class Objective { Rho, Q, RhoD, QD };
enum class Mode { Max, Min };

inline constexpr Objective kAllObjectives[] = {Objective::Rho, Objective::Q,
                                               Objective::RhoD, Objective::QD};

std::string_view objective_name(Objective o);
Objective parse_objective(std::string_view text);
std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view text);
MatrixKind objective_kind(Objective o);

/// Largest (di)graph orders the exhaustive scans accept.
inline constexpr int kMaxUndirectedOrder = 7;
inline constexpr int kMaxDirectedOrder = 5;

/// Edge slots: pairs i<j in lexicographic order (graphs) or ordered pairs
/// i != j in lexicographic order (digraphs). Bit b set = slot b present.
int slot_count(int n, bool directed);
AnyGraph decode_mask(std::uint64_t mask, int n, bool directed);
std::uint64_t encode_mask(const AnyGraph &g);

/// Every labeled (strongly) connected (di)graph on n vertices with vertex
/// connectivity `kappa`, as masks in increasing order.
std::vector<std::uint64_t> enumerate(int n, bool directed, int kappa);

/// Distinct masks of all relabelings of g.
std::vector<std::uint64_t> labeled_isomorphs(const AnyGraph &g);

/// Brute-force isomorphism over all n! relabelings.
bool isomorphic(const AnyGraph &a, const AnyGraph &b);

struct ScanJob {
  int n = 0;
  int k = 1;
  bool directed = false;
  Objective objective = Objective::Rho;
  Mode mode = Mode::Max;
  int shards = 0; // 0: one per worker thread
};

/// Best value found and the masks attaining it (ties within 1e-9).
struct Optimum {
  double value = 0.0;
  bool found = false;
  std::vector<std::uint64_t> masks;
  bool truncated = false; // list capped; value is still exact
};

struct MemberCheck {
  std::string member;          // family syntax, e.g. "knkp-d:5,2,1"
  std::size_t isomorphs = 0;   // labeled copies of the member
  std::size_t found = 0;       // of those, how many are optimizers
};

struct ExtremalCertificate {
  int n = 0;
  int k = 0;
  bool directed = false;
  Objective objective = Objective::Rho;
  Mode mode = Mode::Max;
  double value = 0.0;
  std::vector<std::uint64_t> optimizers;
  std::vector<MemberCheck> classification;
  std::size_t unclassified = 0; // optimizers matching no claimed member
  std::uint64_t examined = 0;   // masks enumerated
  std::uint64_t members = 0;    // of those, in the connectivity class
  /// Optimizers are exactly the isomorphs of the claimed members.
  bool claim_holds = false;
  std::string note;
};

/// Per-connectivity extremes of all four objectives from one enumeration
/// pass. Bucket 0 collects every (strongly) connected graph; bucket k those
/// with vertex connectivity k.
struct ScanTable {
  int n = 0;
  bool directed = false;
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> members;                 // per bucket
  std::vector<std::array<Optimum, 4>> max, min;       // [bucket][objective]

  void merge(const ScanTable &other);
};

/// One pass over all masks; `shards` as in ScanJob.
ScanTable scan_all(int n, bool directed, int shards = 0);

/// Family members claimed to attain the optimum for (k, o, m).
std::vector<FamilySpec> claimed_extremal(int n, int k, bool directed,
                                         Objective o, Mode m);

/// Builds the certificate for one (k, objective, mode) from a table.
ExtremalCertificate certify(const ScanTable &table, int k, Objective o,
                            Mode m, const std::vector<FamilySpec> &claimed);

ExtremalCertificate extremal_scan(const ScanJob &job);

struct Domination {
  int k = 0;
  int p = 0;
  AnyGraph host;
  /// Input vertex v becomes host vertex witness[v].
  std::vector<Vertex> witness;
};

/// Embeds a (strongly) connected non-complete input as a spanning subgraph
/// of K(n,k,p), k the vertex connectivity, p the order of a source
/// component of the input minus a minimum cut.
Domination dominate_with_extremal(const Digraph &dg);
Domination dominate_with_extremal(const Graph &g);

/// True iff every edge of `g`, relabeled by `witness`, is an edge of host.
bool is_spanning_subgraph(const AnyGraph &g, const AnyGraph &host,
                          const std::vector<Vertex> &witness);

struct Counterexample {
  std::uint64_t trial = 0;
  BlockSpec spec;
  ProbeResult probe;
};

/// Seed of trial i; independent of thread count.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Random nonnegative block data with t <= t_max blocks and order <= n_max,
/// coefficients a/100 for integer a in [0, 1000].
BlockSpec random_nonnegative_spec(std::uint64_t seed, int n_max, int t_max);

/// Runs the quotient-radius probe on `trials` random specs; returns the
/// failing instance with the smallest trial index, if any.
std::optional<Counterexample> conjecture_search(std::uint64_t trials,
                                                int n_max, int t_max,
                                                std::uint64_t seed,
                                                int threads = 0);

/// Worker count: hardware concurrency capped by SPECTRA_THREADS.
int worker_threads();

} // namespace qspec
