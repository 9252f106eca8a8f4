#include "qspec/families.hpp"

#include <charconv>
#include <sstream>

namespace qspec {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void check_knkp(int n, int k, int p) {
  if (k < 1 || k > n - 2)
    throw InvalidParameters("need 1 <= k <= n-2, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  if (p < 1 || p > n - k - 1)
    throw InvalidParameters("need 1 <= p <= n-k-1, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k) +
                            " p=" + std::to_string(p));
}

template <bool Directed> BasicGraph<Directed> complete(int n) {
  BasicGraph<Directed> g(n);
  for (int u = 0; u < n; ++u)
    for (int v = Directed ? 0 : u + 1; v < n; ++v)
      if (u != v)
        g.add_edge(u, v);
  return g;
}

template <bool Directed> BasicGraph<Directed> knkp(int n, int k, int p) {
  check_knkp(n, k, p);
  const int q = n - p - k;
  // Vertices of K_p first, then K_k, then K_q.
  BasicGraph<Directed> g(n);
  auto clique = [&](int lo, int hi) {
    for (int u = lo; u < hi; ++u)
      for (int v = u + 1; v < hi; ++v) {
        g.add_edge(u, v);
        if constexpr (Directed)
          g.add_edge(v, u);
      }
  };
  clique(0, p);
  clique(p, p + k);
  clique(p + k, n);
  for (int c = p; c < p + k; ++c)
    for (int v = 0; v < n; ++v)
      if (v < p || v >= p + k) {
        if constexpr (Directed) {
          g.add_edge(c, v);
          g.add_edge(v, c);
        } else if (!g.has_edge(c, v)) {
          g.add_edge(c, v);
        }
      }
  if constexpr (Directed)
    for (int u = 0; u < p; ++u)
      for (int v = p + k; v < p + k + q; ++v)
        g.add_edge(u, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);                  // outer cycle
    g.add_edge(i, i + 5);                        // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);          // inner pentagram
  }
  return g;
}

Graph multipartite(const std::vector<int> &parts) {
  int n = 0;
  std::vector<int> cell;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j, ++n)
      cell.push_back(static_cast<int>(i));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cell[u] != cell[v])
        g.add_edge(u, v);
  return g;
}

Graph clique_star(const std::vector<int> &sizes) {
  int n = 1;
  for (int s : sizes)
    n += s - 1;
  Graph g(n);
  int next = 1;
  for (int s : sizes) {
    std::vector<int> members{0};
    for (int j = 0; j < s - 1; ++j)
      members.push_back(next++);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        g.add_edge(members[a], members[b]);
  }
  return g;
}

Rational R(long long x) { return Rational(x); }

BlockSpec uniform(std::vector<int> sizes, Rational l, std::vector<Rational> p,
                  Rational s) {
  const std::size_t t = sizes.size();
  BlockSpec spec;
  spec.sizes = std::move(sizes);
  spec.l.assign(t, l);
  spec.p = std::move(p);
  spec.s.assign(t, std::vector<Rational>(t, s));
  for (std::size_t i = 0; i < t; ++i)
    spec.s[i][i] = 0;
  return spec;
}

BlockSpec multipartite_spec(const std::vector<int> &parts, MatrixKind kind) {
  int n = 0;
  for (int x : parts)
    n += x;
  std::vector<Rational> p;
  auto per_part = [&](auto f) {
    for (int ni : parts)
      p.push_back(R(f(ni)));
  };
  switch (kind) {
  case MatrixKind::A:
    per_part([](int) { return 0; });
    return uniform(parts, 0, p, 1);
  case MatrixKind::L:
    per_part([n](int ni) { return n - ni; });
    return uniform(parts, 0, p, -1);
  case MatrixKind::Q:
    per_part([n](int ni) { return n - ni; });
    return uniform(parts, 0, p, 1);
  case MatrixKind::D:
    per_part([](int) { return -2; });
    return uniform(parts, 2, p, 1);
  case MatrixKind::DL:
    per_part([n](int ni) { return n + ni; });
    return uniform(parts, -2, p, -1);
  case MatrixKind::DQ:
    per_part([n](int ni) { return n + ni - 4; });
    return uniform(parts, 2, p, 1);
  }
  throw UnsupportedFamily("unknown matrix kind");
}

BlockSpec clique_star_spec(const std::vector<int> &sizes, MatrixKind kind) {
  const int k = static_cast<int>(sizes.size());
  int n = 1;
  for (int s : sizes)
    n += s - 1;
  BlockSpec spec;
  spec.sizes.push_back(1);
  for (int s : sizes)
    spec.sizes.push_back(s - 1);
  const bool distance = is_distance_kind(kind);
  // hub coefficients, leaf l, hub-leaf s, leaf-leaf s
  Rational hub_l = 0, leaf_l = 1, hub_s = 1, leaf_s = distance ? 2 : 0;
  if (kind == MatrixKind::L || kind == MatrixKind::Q ||
      kind == MatrixKind::DL || kind == MatrixKind::DQ)
    hub_l = n - 1;
  if (kind == MatrixKind::L || kind == MatrixKind::DL) {
    leaf_l = -1;
    hub_s = -1;
    leaf_s = -leaf_s;
  }
  spec.l.push_back(hub_l);
  spec.p.push_back(0);
  for (int ni : sizes) {
    spec.l.push_back(leaf_l);
    switch (kind) {
    case MatrixKind::A:
    case MatrixKind::D:
      spec.p.push_back(-1);
      break;
    case MatrixKind::L:
      spec.p.push_back(ni);
      break;
    case MatrixKind::Q:
      spec.p.push_back(ni - 2);
      break;
    case MatrixKind::DL:
      spec.p.push_back(2 * n - ni);
      break;
    case MatrixKind::DQ:
      spec.p.push_back(2 * n - ni - 2);
      break;
    }
  }
  spec.s.assign(k + 1, std::vector<Rational>(k + 1, leaf_s));
  for (int i = 0; i <= k; ++i) {
    spec.s[i][i] = 0;
    if (i > 0)
      spec.s[0][i] = spec.s[i][0] = hub_s;
  }
  return spec;
}

BlockSpec knkp_spec(int n, int k, int p, bool directed, MatrixKind kind) {
  check_knkp(n, k, p);
  const int q = n - p - k;
  const bool laplacian = kind == MatrixKind::L || kind == MatrixKind::DL;
  const Rational sign = laplacian ? -1 : 1;
  BlockSpec spec;
  spec.sizes = {p, k, q};
  spec.l.assign(3, sign);
  spec.s.assign(3, std::vector<Rational>(3, sign));
  for (int i = 0; i < 3; ++i)
    spec.s[i][i] = 0;
  // p-cell and q-cell: adjacent one way (digraph) or not at all (graph).
  const Rational far = is_distance_kind(kind) ? 2 * sign : Rational(0);
  spec.s[2][0] = far;
  spec.s[0][2] = directed ? sign : far;

  std::vector<long long> diag;
  switch (kind) {
  case MatrixKind::A:
  case MatrixKind::D:
    diag = {-1, -1, -1};
    break;
  case MatrixKind::Q:
    diag = directed ? std::vector<long long>{n - 2, n - 2, n - p - 2}
                    : std::vector<long long>{p + k - 2, n - 2, n - p - 2};
    break;
  case MatrixKind::L:
    diag = directed ? std::vector<long long>{n, n, n - p}
                    : std::vector<long long>{p + k, n, q + k};
    break;
  case MatrixKind::DQ:
    diag = directed ? std::vector<long long>{n - 2, n - 2, n + p - 2}
                    : std::vector<long long>{n + q - 2, n - 2, n + p - 2};
    break;
  case MatrixKind::DL:
    diag = directed ? std::vector<long long>{n, n, n + p}
                    : std::vector<long long>{n + q, n, n + p};
    break;
  }
  for (long long d : diag)
    spec.p.push_back(R(d));
  return spec;
}

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size())
      throw ParseError(std::string(what) + ": bad integer '" +
                       std::string(token) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int> &xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

} // namespace

void validate(const FamilySpec &spec) {
  std::visit(
      overloaded{
          [](const DirectedCycle &c) {
            if (c.n < 2)
              throw InvalidParameters("directed cycle needs n >= 2");
          },
          [](const BidirectedComplete &c) {
            if (c.n < 1)
              throw InvalidParameters("complete digraph needs n >= 1");
          },
          [](const Petersen &) {},
          [](const CompleteMultipartite &m) {
            if (m.parts.size() < 2)
              throw InvalidParameters("complete multipartite needs t >= 2");
            for (int x : m.parts)
              if (x < 1)
                throw InvalidParameters("part sizes must be >= 1");
          },
          [](const CliqueStar &c) {
            if (c.sizes.empty())
              throw InvalidParameters("clique star needs k >= 1 cliques");
            for (int x : c.sizes)
              if (x < 2)
                throw InvalidParameters("clique sizes must be >= 2");
          },
          [](const KnkpDigraph &f) { check_knkp(f.n, f.k, f.p); },
          [](const KnkpGraph &f) { check_knkp(f.n, f.k, f.p); },
      },
      spec);
}

bool is_directed(const FamilySpec &spec) {
  return std::holds_alternative<DirectedCycle>(spec) ||
         std::holds_alternative<BidirectedComplete>(spec) ||
         std::holds_alternative<KnkpDigraph>(spec);
}

AnyGraph build(const FamilySpec &spec) {
  validate(spec);
  return std::visit(
      overloaded{
          [](const DirectedCycle &c) -> AnyGraph {
            Digraph g(c.n);
            for (int i = 0; i < c.n; ++i)
              g.add_edge(i, (i + 1) % c.n);
            return g;
          },
          [](const BidirectedComplete &c) -> AnyGraph {
            return complete<true>(c.n);
          },
          [](const Petersen &) -> AnyGraph { return petersen(); },
          [](const CompleteMultipartite &m) -> AnyGraph {
            return multipartite(m.parts);
          },
          [](const CliqueStar &c) -> AnyGraph { return clique_star(c.sizes); },
          [](const KnkpDigraph &f) -> AnyGraph {
            return knkp<true>(f.n, f.k, f.p);
          },
          [](const KnkpGraph &f) -> AnyGraph {
            return knkp<false>(f.n, f.k, f.p);
          },
      },
      spec);
}

Graph build_graph(const FamilySpec &spec) {
  AnyGraph g = build(spec);
  if (auto *u = std::get_if<Graph>(&g))
    return *u;
  throw UnsupportedFamily(family_name(spec) + " is a digraph");
}

Digraph build_digraph(const FamilySpec &spec) {
  AnyGraph g = build(spec);
  if (auto *d = std::get_if<Digraph>(&g))
    return *d;
  throw UnsupportedFamily(family_name(spec) + " is an undirected graph");
}

BlockSpec adjacency_blockspec(const FamilySpec &spec, MatrixKind kind) {
  validate(spec);
  return std::visit(
      overloaded{
          [kind](const CompleteMultipartite &m) {
            return multipartite_spec(m.parts, kind);
          },
          [kind](const CliqueStar &c) { return clique_star_spec(c.sizes, kind); },
          [kind](const KnkpDigraph &f) {
            return knkp_spec(f.n, f.k, f.p, true, kind);
          },
          [kind](const KnkpGraph &f) {
            return knkp_spec(f.n, f.k, f.p, false, kind);
          },
          [&spec](const auto &) -> BlockSpec {
            throw UnsupportedFamily("no block spec for " + family_name(spec));
          },
      },
      spec);
}

FamilySpec parse_family(std::string_view text) {
  std::size_t colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need = [&](std::size_t count) {
    auto v = parse_ints(args, head);
    if (count && v.size() != count)
      throw ParseError(std::string(head) + ": expected " +
                       std::to_string(count) + " integers");
    return v;
  };
  FamilySpec spec;
  if (head == "petersen") {
    if (!args.empty())
      throw ParseError("petersen takes no arguments");
    spec = Petersen{};
  } else if (head == "cycle") {
    spec = DirectedCycle{need(1)[0]};
  } else if (head == "bicomplete") {
    spec = BidirectedComplete{need(1)[0]};
  } else if (head == "multipartite") {
    spec = CompleteMultipartite{need(0)};
  } else if (head == "cliquestar") {
    spec = CliqueStar{need(0)};
  } else if (head == "knkp-d" || head == "knkp-g") {
    auto v = need(3);
    if (head == "knkp-d")
      spec = KnkpDigraph{v[0], v[1], v[2]};
    else
      spec = KnkpGraph{v[0], v[1], v[2]};
  } else {
    throw ParseError("unknown family '" + std::string(head) + "'");
  }
  try {
    validate(spec);
  } catch (const InvalidParameters &e) {
    throw ParseError(e.what());
  }
  return spec;
}

std::string family_name(const FamilySpec &spec) {
  return std::visit(
      overloaded{
          [](const DirectedCycle &c) { return "cycle:" + std::to_string(c.n); },
          [](const BidirectedComplete &c) {
            return "bicomplete:" + std::to_string(c.n);
          },
          [](const Petersen &) { return std::string("petersen"); },
          [](const CompleteMultipartite &m) {
            return "multipartite:" + join_ints(m.parts);
          },
          [](const CliqueStar &c) { return "cliquestar:" + join_ints(c.sizes); },
          [](const KnkpDigraph &f) {
            return "knkp-d:" + join_ints({f.n, f.k, f.p});
          },
          [](const KnkpGraph &f) {
            return "knkp-g:" + join_ints({f.n, f.k, f.p});
          },
      },
      spec);
}

} // namespace qspec
