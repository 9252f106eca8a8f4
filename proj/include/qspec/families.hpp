#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qspec/graph.hpp"
#include "qspec/quotient.hpp"

namespace qspec {

struct DirectedCycle {
  int n;
};
struct BidirectedComplete {
  int n;
};
struct Petersen {};
struct CompleteMultipartite {
  std::vector<int> parts;
};
/// Cliques K_{n_i} glued at a common hub; `sizes` are the clique orders.
struct CliqueStar {
  std::vector<int> sizes;
};
/// K_k join (K_p + K_q), q = n - p - k, plus one-way arcs from the p-cell
/// to the q-cell.
struct KnkpDigraph {
  int n, k, p;
};
/// K_k join (K_p + K_q), q = n - p - k.
struct KnkpGraph {
  int n, k, p;
};

using FamilySpec =
    std::variant<DirectedCycle, BidirectedComplete, Petersen,
                 CompleteMultipartite, CliqueStar, KnkpDigraph, KnkpGraph>;

/// Throws InvalidParameters naming the violated bound.
void validate(const FamilySpec &spec);

/// Vertex order: K(n,k,p) lists the p-cell, then the k-cell, then the
/// q-cell; the clique star puts the hub at 0 followed by each clique's
/// remaining vertices.
AnyGraph build(const FamilySpec &spec);
Graph build_graph(const FamilySpec &spec);
Digraph build_digraph(const FamilySpec &spec);

/// Block data whose realization equals the family's matrix of `kind`
/// (complete multipartite, clique star and both K(n,k,p) only).
BlockSpec adjacency_blockspec(const FamilySpec &spec, MatrixKind kind);

/// `cycle:n`, `bicomplete:n`, `petersen`, `multipartite:n1,n2,...`,
/// `cliquestar:n2,n3,...`, `knkp-d:n,k,p`, `knkp-g:n,k,p`.
FamilySpec parse_family(std::string_view text);
std::string family_name(const FamilySpec &spec);

bool is_directed(const FamilySpec &spec);

} // namespace qspec
