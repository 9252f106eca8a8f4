#include "qspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>

namespace qspec {

template <bool Directed> BasicGraph<Directed>::BasicGraph(int n) {
  if (n < 1)
    throw InvalidParameters("a graph needs at least one vertex, got n=" +
                            std::to_string(n));
  out_.resize(static_cast<std::size_t>(n));
}

template <bool Directed>
BasicGraph<Directed>::BasicGraph(
    int n, const std::vector<std::pair<Vertex, Vertex>> &edges)
    : BasicGraph(n) {
  for (auto [u, v] : edges)
    add_edge(u, v);
}

template <bool Directed>
void BasicGraph<Directed>::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw InvalidParameters("vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(order()));
}

template <bool Directed>
void BasicGraph<Directed>::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw InvalidParameters("loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw InvalidParameters("duplicate edge " + std::to_string(u) + " " +
                            std::to_string(v));
  auto insert = [](std::vector<Vertex> &list, Vertex x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert(out_[u], v);
  if constexpr (!Directed)
    insert(out_[v], u);
}

template <bool Directed>
bool BasicGraph<Directed>::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

template <bool Directed> std::size_t BasicGraph<Directed>::size() const {
  std::size_t total = 0;
  for (const auto &list : out_)
    total += list.size();
  return Directed ? total : total / 2;
}

template <bool Directed>
std::vector<Vertex> BasicGraph<Directed>::in_neighbors(Vertex v) const {
  check_vertex(v);
  if constexpr (!Directed)
    return out_[v];
  std::vector<Vertex> result;
  for (Vertex u = 0; u < order(); ++u)
    if (std::binary_search(out_[u].begin(), out_[u].end(), v))
      result.push_back(u);
  return result;
}

template <bool Directed>
std::vector<std::pair<Vertex, Vertex>> BasicGraph<Directed>::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : out_[u])
      if (Directed || u < v)
        result.emplace_back(u, v);
  return result;
}

template <bool Directed>
BasicGraph<Directed>
BasicGraph<Directed>::induced(const std::vector<Vertex> &keep) const {
  std::vector<int> index(out_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    index[keep[i]] = static_cast<int>(i);
  }
  BasicGraph result(static_cast<int>(keep.size()));
  for (auto [u, v] : edges())
    if (index[u] >= 0 && index[v] >= 0)
      result.add_edge(index[u], index[v]);
  return result;
}

template <bool Directed>
BasicGraph<Directed>
BasicGraph<Directed>::relabeled(const std::vector<Vertex> &perm) const {
  if (perm.size() != out_.size())
    throw DimensionMismatch("permutation length differs from vertex count");
  BasicGraph result(order());
  for (auto [u, v] : edges())
    result.add_edge(perm[u], perm[v]);
  return result;
}

template class BasicGraph<false>;
template class BasicGraph<true>;

std::string_view kind_name(MatrixKind kind) {
  switch (kind) {
  case MatrixKind::A:
    return "A";
  case MatrixKind::L:
    return "L";
  case MatrixKind::Q:
    return "Q";
  case MatrixKind::D:
    return "D";
  case MatrixKind::DL:
    return "DL";
  case MatrixKind::DQ:
    return "DQ";
  }
  return "?";
}

MatrixKind parse_kind(std::string_view text) {
  for (MatrixKind kind : kAllKinds)
    if (kind_name(kind) == text)
      return kind;
  throw ParseError("unknown matrix kind '" + std::string(text) +
                   "' (expected A, L, Q, D, DL or DQ)");
}

bool is_distance_kind(MatrixKind kind) {
  return kind == MatrixKind::D || kind == MatrixKind::DL ||
         kind == MatrixKind::DQ;
}

namespace {

using Mask = std::uint64_t;

/// Bitmask adjacency for the cut search; limited to 64 vertices.
struct MaskAdjacency {
  std::vector<Mask> out;
  std::vector<Mask> in;
};

template <bool Directed>
MaskAdjacency mask_adjacency(const BasicGraph<Directed> &g) {
  if (g.order() > 64)
    throw InvalidParameters("vertex cut search supports at most 64 vertices");
  MaskAdjacency adj{std::vector<Mask>(g.order(), 0),
                    std::vector<Mask>(g.order(), 0)};
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.out_neighbors(u)) {
      adj.out[u] |= Mask{1} << v;
      adj.in[v] |= Mask{1} << u;
    }
  return adj;
}

Mask reach(const std::vector<Mask> &next, Mask alive, int start) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask grown = 0;
    for (Mask f = frontier; f; f &= f - 1)
      grown |= next[std::countr_zero(f)];
    grown &= alive & ~seen;
    seen |= grown;
    frontier = grown;
  }
  return seen;
}

/// True iff the sub(di)graph on `alive` is (strongly) connected.
bool alive_connected(const MaskAdjacency &adj, Mask alive, bool directed) {
  if (!alive)
    return true;
  int start = std::countr_zero(alive);
  if (reach(adj.out, alive, start) != alive)
    return false;
  return !directed || reach(adj.in, alive, start) == alive;
}

template <bool Directed> void require_connected(const BasicGraph<Directed> &g) {
  if constexpr (Directed) {
    if (!is_strongly_connected(g))
      throw DisconnectedInput("digraph is not strongly connected");
  } else {
    if (!is_connected(g))
      throw DisconnectedInput("graph is not connected");
  }
}

/// Smallest cut found by increasing-size enumeration; empty when complete.
template <bool Directed>
std::vector<Vertex> search_min_cut(const BasicGraph<Directed> &g) {
  require_connected(g);
  const int n = g.order();
  const MaskAdjacency adj = mask_adjacency(g);
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<int> pick;
  for (int size = 1; size <= n - 2; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Mask cut = 0;
      for (int v : pick)
        cut |= Mask{1} << v;
      if (!alive_connected(adj, all & ~cut, Directed))
        return {pick.begin(), pick.end()};
      // next combination in lexicographic order
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i)
        --i;
      if (i < 0)
        break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

template <bool Directed>
std::vector<int> bfs_distances(const BasicGraph<Directed> &g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.out_neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
  }
  return dist;
}

} // namespace

bool is_connected(const Graph &g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_strongly_connected(const Digraph &dg) {
  auto forward = bfs_distances(dg, 0);
  if (std::any_of(forward.begin(), forward.end(), [](int d) { return d < 0; }))
    return false;
  Digraph reversed(dg.order());
  for (auto [u, v] : dg.edges())
    reversed.add_edge(v, u);
  auto backward = bfs_distances(reversed, 0);
  return std::none_of(backward.begin(), backward.end(),
                      [](int d) { return d < 0; });
}

template <bool Directed>
ExactMatrix distance_matrix(const BasicGraph<Directed> &g) {
  require_connected(g);
  const int n = g.order();
  ExactMatrix d(n);
  for (Vertex u = 0; u < n; ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = 0; v < n; ++v)
      d(u, v) = dist[v];
  }
  return d;
}

template <bool Directed>
std::vector<BigInt> transmissions(const BasicGraph<Directed> &g) {
  ExactMatrix d = distance_matrix(g);
  std::vector<BigInt> tr(d.order());
  for (std::size_t i = 0; i < d.order(); ++i)
    tr[i] = d.row_sum(i);
  return tr;
}

template <bool Directed>
ExactMatrix build_matrix(const BasicGraph<Directed> &g, MatrixKind kind) {
  const int n = g.order();
  if (is_distance_kind(kind)) {
    ExactMatrix d = distance_matrix(g);
    if (kind == MatrixKind::D)
      return d;
    ExactMatrix tr = row_sum_diagonal(d);
    return kind == MatrixKind::DL ? tr - d : tr + d;
  }
  ExactMatrix a(n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    if constexpr (!Directed)
      a(v, u) = 1;
  }
  if (kind == MatrixKind::A)
    return a;
  // out-degree diagonal; equals the degree diagonal for graphs
  ExactMatrix deg = row_sum_diagonal(a);
  return kind == MatrixKind::L ? deg - a : deg + a;
}

template <bool Directed>
int vertex_connectivity(const BasicGraph<Directed> &g) {
  auto cut = search_min_cut(g);
  return cut.empty() ? g.order() - 1 : static_cast<int>(cut.size());
}

template <bool Directed>
std::vector<Vertex> minimum_vertex_cut(const BasicGraph<Directed> &g) {
  auto cut = search_min_cut(g);
  if (cut.empty())
    throw CompleteInput("complete (di)graph has no vertex cut");
  return cut;
}

template <bool Directed>
BasicGraph<Directed> disjoint_union(const BasicGraph<Directed> &g1,
                                    const BasicGraph<Directed> &g2) {
  const int shift = g1.order();
  BasicGraph<Directed> result(g1.order() + g2.order());
  for (auto [u, v] : g1.edges())
    result.add_edge(u, v);
  for (auto [u, v] : g2.edges())
    result.add_edge(u + shift, v + shift);
  return result;
}

template <bool Directed>
BasicGraph<Directed> join(const BasicGraph<Directed> &g1,
                          const BasicGraph<Directed> &g2) {
  BasicGraph<Directed> result = disjoint_union(g1, g2);
  const int shift = g1.order();
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) {
      result.add_edge(u, v + shift);
      if constexpr (Directed)
        result.add_edge(v + shift, u);
    }
  return result;
}

std::vector<std::vector<Vertex>> strong_components(const Digraph &dg) {
  // Tarjan, iterative
  const int n = dg.order();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<Vertex> stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<Vertex>> components;
  int counter = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0)
      continue;
    std::vector<std::pair<Vertex, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto &[u, next] = call.back();
      const auto &out = dg.out_neighbors(u);
      if (next < out.size()) {
        Vertex v = out[next++];
        if (index[v] < 0) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          call.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != u);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      Vertex finished = u;
      call.pop_back();
      if (!call.empty())
        low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  std::sort(components.begin(), components.end());
  return components;
}

namespace {

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <bool Directed>
void add_parsed_edge(BasicGraph<Directed> &g, int u, int v, int line_no) {
  try {
    g.add_edge(u, v);
  } catch (const InvalidParameters &e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

} // namespace

AnyGraph parse_graph_text(std::string_view text) {
  std::optional<AnyGraph> result;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty())
      continue;
    if (!result) {
      if (tokens.size() != 2 || (tokens[0] != "graph" && tokens[0] != "digraph"))
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'graph <n>' or 'digraph <n>'");
      int n = parse_int(tokens[1], line_no);
      if (n < 1)
        throw ParseError("line " + std::to_string(line_no) +
                         ": vertex count must be at least 1");
      if (tokens[0] == "graph")
        result.emplace(Graph(n));
      else
        result.emplace(Digraph(n));
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<u> <v>'");
    int u = parse_int(tokens[0], line_no);
    int v = parse_int(tokens[1], line_no);
    std::visit([&](auto &g) { add_parsed_edge(g, u, v, line_no); }, *result);
  }
  if (!result)
    throw ParseError("empty graph file");
  return *result;
}

std::string format_graph_text(const AnyGraph &g) {
  std::ostringstream out;
  std::visit(
      [&](const auto &h) {
        out << (h.directed ? "digraph " : "graph ") << h.order() << '\n';
        for (auto [u, v] : h.edges())
          out << u << ' ' << v << '\n';
      },
      g);
  return out.str();
}

int order(const AnyGraph &g) {
  return std::visit([](const auto &h) { return h.order(); }, g);
}

#define QSPEC_INSTANTIATE(D)                                                   \
  template ExactMatrix distance_matrix(const BasicGraph<D> &);                 \
  template std::vector<BigInt> transmissions(const BasicGraph<D> &);           \
  template ExactMatrix build_matrix(const BasicGraph<D> &, MatrixKind);        \
  template int vertex_connectivity(const BasicGraph<D> &);                     \
  template std::vector<Vertex> minimum_vertex_cut(const BasicGraph<D> &);      \
  template BasicGraph<D> join(const BasicGraph<D> &, const BasicGraph<D> &);   \
  template BasicGraph<D> disjoint_union(const BasicGraph<D> &,                 \
                                        const BasicGraph<D> &);
QSPEC_INSTANTIATE(false)
QSPEC_INSTANTIATE(true)
#undef QSPEC_INSTANTIATE

} // namespace qspec
