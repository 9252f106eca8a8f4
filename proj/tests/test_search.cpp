#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qspec/graph.hpp"
#include "qspec/search.hpp"
#include "qspec/theorems.hpp"

using namespace qspec;

TEST_CASE("objective and mode names") {
  for (auto o : kAllObjectives)
    CHECK(parse_objective(objective_name(o)) == o);
  CHECK(parse_mode("min") == Mode::Min);
  CHECK(objective_kind(Objective::QD) == MatrixKind::DQ);
  CHECK_THROWS_AS(parse_objective("mu"), ParseError);
  CHECK_THROWS_AS(parse_mode("best"), ParseError);
}

TEST_CASE("mask encoding round trips") {
  std::mt19937_64 rng(2);
  for (bool directed : {false, true})
    for (int n = 2; n <= 7; ++n) {
      const int slots = slot_count(n, directed);
      CHECK(slots == (directed ? n * (n - 1) : n * (n - 1) / 2));
      for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t mask = rng() & ((std::uint64_t(1) << slots) - 1);
        REQUIRE(encode_mask(decode_mask(mask, n, directed)) == mask);
      }
    }
  // slot 0 is the pair (0,1) either way; the last undirected slot is (n-2,n-1)
  CHECK(std::get<Digraph>(decode_mask(1, 3, true)).has_edge(0, 1));
  CHECK(std::get<Graph>(decode_mask(4, 3, false)).has_edge(1, 2));
}

TEST_CASE("enumeration counts labeled connected graphs") {
  auto total = [](int n, bool directed) {
    std::size_t sum = 0;
    for (int k = 1; k <= n - 1; ++k)
      sum += enumerate(n, directed, k).size();
    return sum;
  };
  CHECK(total(3, false) == 4);
  CHECK(total(4, false) == 38);
  CHECK(total(5, false) == 728);
  CHECK(total(3, true) == 18);
  CHECK(total(4, true) == 1606);
  CHECK(enumerate(4, false, 3).size() == 1);
  CHECK(enumerate(4, true, 3).size() == 1);
  for (auto mask : enumerate(5, true, 2))
    REQUIRE(vertex_connectivity(std::get<Digraph>(decode_mask(mask, 5, true))) == 2);
}

TEST_CASE("labeled isomorphs") {
  CHECK(labeled_isomorphs(build(DirectedCycle{4})).size() == 6);
  CHECK(labeled_isomorphs(build(Petersen{})).size() == 3628800 / 120);
  CHECK(labeled_isomorphs(build(KnkpGraph{5, 1, 1})).size() == 5 * 4);
  CHECK(isomorphic(build(DirectedCycle{4}), AnyGraph(Digraph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}))));
  CHECK_FALSE(isomorphic(build(DirectedCycle{4}), build(BidirectedComplete{4})));
  CHECK_FALSE(isomorphic(build(KnkpGraph{5, 1, 1}), build(KnkpDigraph{5, 1, 1})));
}

TEST_CASE("every non-complete input embeds in an extremal member") {
  std::mt19937_64 rng(31);
  int digraphs = 0, graphs = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = static_cast<int>(oracle::draw(rng, 3, 8));
    std::bernoulli_distribution coin(0.6);
    Digraph d(n);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u != v && coin(rng))
          d.add_edge(u, v);
        if (u < v && coin(rng))
          g.add_edge(u, v);
      }
    if (is_strongly_connected(d) && d.size() < std::size_t(n * (n - 1))) {
      ++digraphs;
      Domination dom = dominate_with_extremal(d);
      REQUIRE(dom.k == vertex_connectivity(d));
      REQUIRE(std::get<Digraph>(dom.host) == build_digraph(KnkpDigraph{n, dom.k, dom.p}));
      REQUIRE(is_spanning_subgraph(AnyGraph(d), dom.host, dom.witness));
    }
    if (is_connected(g) && g.size() < std::size_t(n * (n - 1) / 2)) {
      ++graphs;
      Domination dom = dominate_with_extremal(g);
      REQUIRE(dom.k == vertex_connectivity(g));
      REQUIRE(is_spanning_subgraph(AnyGraph(g), dom.host, dom.witness));
    }
  }
  CHECK(digraphs > 50);
  CHECK(graphs > 50);
  CHECK_THROWS_AS(dominate_with_extremal(build_digraph(BidirectedComplete{4})), CompleteInput);
}

TEST_CASE("spanning subgraph test") {
  AnyGraph path = Graph(3, {{0, 1}, {1, 2}});
  AnyGraph host = Graph(3, {{0, 1}, {1, 2}});
  CHECK(is_spanning_subgraph(path, host, {0, 1, 2}));
  CHECK_FALSE(is_spanning_subgraph(path, host, {1, 0, 2}));
}

TEST_CASE("small exhaustive certificates") {
  ScanTable table = scan_all(4, true, 3);
  CHECK(table.examined == (std::uint64_t(1) << 12));
  CHECK(table.members[0] == 1606);
  for (int k = 1; k <= 2; ++k)
    for (auto o : kAllObjectives) {
      Mode m = (o == Objective::Rho || o == Objective::Q) ? Mode::Max : Mode::Min;
      ExtremalCertificate c = certify(table, k, o, m, claimed_extremal(4, k, true, o, m));
      INFO(k, " ", objective_name(o));
      CHECK(c.claim_holds);
      CHECK(c.unclassified == 0);
    }

  // shard count does not change the table
  ScanTable single = scan_all(4, true, 1);
  for (std::size_t b = 0; b < table.max.size(); ++b)
    for (int o = 0; o < 4; ++o) {
      CHECK(single.max[b][o].masks == table.max[b][o].masks);
      CHECK(single.min[b][o].value == table.min[b][o].value);
    }

  ScanJob job;
  job.n = 5;
  job.k = 2;
  job.objective = Objective::RhoD;
  job.mode = Mode::Min;
  ExtremalCertificate c = extremal_scan(job);
  CHECK(c.claim_holds);
  CHECK(c.value == doctest::Approx(graph_bound(5, 2, MatrixKind::D).value));
}

TEST_CASE("scan budgets") {
  ScanJob job;
  job.n = 8;
  CHECK_THROWS_AS(extremal_scan(job), BudgetExceeded);
  job.n = 6;
  job.directed = true;
  CHECK_THROWS_AS(extremal_scan(job), BudgetExceeded);
  job.n = 5;
  job.k = 4;
  CHECK_THROWS_AS(extremal_scan(job), InvalidParameters);
}

TEST_CASE("conjecture search is reproducible") {
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 5) == trial_seed(1, 5));
  BlockSpec a = random_nonnegative_spec(99, 12, 4), b = random_nonnegative_spec(99, 12, 4);
  CHECK(a.sizes == b.sizes);
  CHECK(a.s == b.s);
  int total = 0;
  for (int n : a.sizes)
    total += n;
  CHECK(total <= 12);
  CHECK(a.sizes.size() <= 4);
  for (const auto &x : a.l)
    CHECK((x >= 0 && x <= 10));

  auto one = conjecture_search(2000, 12, 4, 7, 1);
  auto three = conjecture_search(2000, 12, 4, 7, 3);
  CHECK_FALSE(one.has_value());
  CHECK_FALSE(three.has_value());
}
