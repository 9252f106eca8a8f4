#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qspec/matrix.hpp"

namespace qspec {

using Vertex = int;

/// Simple (di)graph on vertices 0..n-1 stored as sorted out-neighbour lists.
/// For undirected graphs every edge appears in both endpoint lists.
template <bool Directed> class BasicGraph {
public:
  static constexpr bool directed = Directed;

  explicit BasicGraph(int n = 1);
  BasicGraph(int n, const std::vector<std::pair<Vertex, Vertex>> &edges);

  int order() const { return static_cast<int>(out_.size()); }

  /// Number of edges (undirected) or arcs (directed).
  std::size_t size() const;

  /// Adds u->v (and v->u for graphs). Rejects loops, duplicates, bad indices.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex> &out_neighbors(Vertex v) const { return out_[v]; }
  std::vector<Vertex> in_neighbors(Vertex v) const;
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }

  /// Edges as (u,v) with u<v for graphs; all arcs for digraphs. Sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Subgraph induced on `keep` (relabelled in the given order).
  BasicGraph induced(const std::vector<Vertex> &keep) const;

  /// Relabelled copy: vertex v becomes perm[v].
  BasicGraph relabeled(const std::vector<Vertex> &perm) const;

  friend bool operator==(const BasicGraph &a, const BasicGraph &b) {
    return a.out_ == b.out_;
  }

private:
  void check_vertex(Vertex v) const;
  std::vector<std::vector<Vertex>> out_;
};

using Graph = BasicGraph<false>;
using Digraph = BasicGraph<true>;
using AnyGraph = std::variant<Graph, Digraph>;

/// The six matrices: adjacency, Laplacian, signless Laplacian, distance,
/// distance Laplacian, distance signless Laplacian.
enum class MatrixKind { A, L, Q, D, DL, DQ };

inline constexpr MatrixKind kAllKinds[] = {MatrixKind::A,  MatrixKind::L,
                                           MatrixKind::Q,  MatrixKind::D,
                                           MatrixKind::DL, MatrixKind::DQ};

std::string_view kind_name(MatrixKind kind);
MatrixKind parse_kind(std::string_view text);
bool is_distance_kind(MatrixKind kind);

bool is_connected(const Graph &g);
bool is_strongly_connected(const Digraph &dg);

template <bool Directed> ExactMatrix distance_matrix(const BasicGraph<Directed> &g);
template <bool Directed>
std::vector<BigInt> transmissions(const BasicGraph<Directed> &g);
template <bool Directed>
ExactMatrix build_matrix(const BasicGraph<Directed> &g, MatrixKind kind);

/// Minimum vertex cut size; n-1 for complete (di)graphs.
template <bool Directed> int vertex_connectivity(const BasicGraph<Directed> &g);

/// A minimum vertex cut (sorted). Throws CompleteInput for complete inputs.
template <bool Directed>
std::vector<Vertex> minimum_vertex_cut(const BasicGraph<Directed> &g);

/// Disjoint union plus all cross edges; g2 is shifted by g1.order().
template <bool Directed>
BasicGraph<Directed> join(const BasicGraph<Directed> &g1,
                          const BasicGraph<Directed> &g2);

template <bool Directed>
BasicGraph<Directed> disjoint_union(const BasicGraph<Directed> &g1,
                                    const BasicGraph<Directed> &g2);

/// Strongly connected components, each sorted, listed by smallest vertex.
std::vector<std::vector<Vertex>> strong_components(const Digraph &dg);

/// Text format: `graph <n>` / `digraph <n>` header then `u v` lines.
AnyGraph parse_graph_text(std::string_view text);
std::string format_graph_text(const AnyGraph &g);

int order(const AnyGraph &g);

} // namespace qspec
