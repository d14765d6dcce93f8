#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pathex/graph_io.hpp"
#include "pathex/oracle.hpp"

using namespace pathex;

namespace {

std::uint64_t oracle(int n, PatternSpec pattern, OracleMode mode = OracleMode::MaximalPlanarOnly,
                     OracleStrategy strategy = OracleStrategy::Canonical) {
  OracleQuery q;
  q.n = n;
  q.pattern = pattern;
  q.mode = mode;
  q.strategy = strategy;
  return max_copies_planar(q).max_count;
}

}  // namespace

TEST_CASE("count_copies") {
  CHECK(count_copies(SimpleGraph::cycle(5), CyclePattern{5}) == 1);
  CHECK(count_copies(SimpleGraph::complete(4), CyclePattern{3}) == 4);
  CHECK(count_copies(SimpleGraph::complete(4), PathPattern{3}) == 12);
  CHECK(count_copies(SimpleGraph::complete_bipartite(2, 4), PathPattern{5}) == 24);
  CHECK(count_copies(SimpleGraph::path(6), PathPattern{6}) == 1);
  CHECK_THROWS_AS(count_copies(SimpleGraph::complete(4), RhoPattern{3}), Error);
}

TEST_CASE("P3 maxima on small planar graphs") {
  CHECK(oracle(3, PathPattern{3}) == 3);
  CHECK(oracle(4, PathPattern{3}) == 12);
  CHECK(oracle(5, PathPattern{3}) == 24);
  // n^2 + 3n - 16 from n = 4 on.
  for (int n = 4; n <= 8; ++n) CHECK(oracle(n, PathPattern{3}) == static_cast<std::uint64_t>(n * n + 3 * n - 16));
}

TEST_CASE("P4 and C5 maxima") {
  // n = 4..7 cross-checked against networkx on every labeled triangulation.
  const std::uint64_t p4[] = {12, 42, 87, 147, 222};
  const std::uint64_t c5[] = {6, 24, 41, 60};
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(oracle(n, PathPattern{4}) == p4[n - 4]);
    if (n >= 5) CHECK(oracle(n, CyclePattern{5}) == c5[n - 5]);
  }
  // The quadratic large-n formulas already hold at n = 6, not yet at n = 7.
  CHECK(oracle(6, PathPattern{4}) == 7 * 36 - 32 * 6 + 27);
  CHECK(oracle(6, CyclePattern{5}) == 2 * 36 - 10 * 6 + 12);
  CHECK(oracle(8, CyclePattern{5}) == 2 * 64 - 10 * 8 + 12);
}

TEST_CASE("triangulation counts") {
  // Unlabeled maximal planar graphs (OEIS A000109, shifted).
  const std::size_t expected[] = {1, 1, 2, 5, 14};
  for (int n = 4; n <= 8; ++n) {
    const auto graphs = planar_graphs(n, true);
    CHECK(graphs.size() == expected[n - 4]);
    for (const auto& g : graphs) {
      CHECK(g.size() == 3 * n - 6);
      CHECK(is_planar(g));
    }
  }
  // Unlabeled planar graphs on up to 6 vertices (OEIS A005470).
  const std::size_t all[] = {1, 2, 4, 11, 33, 142};
  for (int n = 1; n <= 6; ++n) CHECK(planar_graphs(n, false).size() == all[n - 1]);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(71);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 8;
    SimpleGraph g(n);
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j)
        if (coin(rng)) g.add_edge(i, j);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SimpleGraph c = canonical_form(g);
    CHECK(c == canonical_form(g.relabeled(perm)));
    CHECK(c.size() == g.size());
  }
  // Non-isomorphic graphs with equal degree sequences: C6 versus two triangles.
  SimpleGraph two_triangles(6);
  for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}) two_triangles.add_edge(u, v);
  CHECK_FALSE(canonical_form(SimpleGraph::cycle(6)) == canonical_form(two_triangles));
}

TEST_CASE("strategies and modes agree") {
  for (int n = 4; n <= 6; ++n)
    for (PatternSpec pattern : {PatternSpec{PathPattern{3}}, PatternSpec{PathPattern{4}}, PatternSpec{CyclePattern{4}}}) {
      CAPTURE(n);
      const auto canonical_all = oracle(n, pattern, OracleMode::AllGraphs);
      CHECK(canonical_all == oracle(n, pattern, OracleMode::MaximalPlanarOnly));
      if (n <= 5) CHECK(canonical_all == oracle(n, pattern, OracleMode::AllGraphs, OracleStrategy::LabeledFilter));
    }
  CHECK(oracle(6, PathPattern{3}, OracleMode::MaximalPlanarOnly, OracleStrategy::LabeledFilter) == 38);
}

TEST_CASE("witnesses attain the maximum and the maximum grows with n") {
  std::uint64_t previous = 0;
  for (int n = 4; n <= 8; ++n) {
    OracleQuery q;
    q.n = n;
    q.pattern = PathPattern{4};
    const auto result = max_copies_planar(q);
    CHECK(result.max_count > previous);
    previous = result.max_count;
    REQUIRE_FALSE(result.witnesses.empty());
    CHECK(result.witnesses.size() <= static_cast<std::size_t>(q.witness_cap));
    for (const auto& w : result.witnesses) {
      const SimpleGraph g = from_graph6(w);
      CHECK(g.order() == n);
      CHECK(is_planar(g));
      CHECK(count_copies(g, q.pattern) == result.max_count);
    }
  }
}

TEST_CASE("resource limits") {
  OracleQuery q;
  q.n = 9;
  try {
    max_copies_planar(q);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
  q.n = 7;
  q.strategy = OracleStrategy::LabeledFilter;
  CHECK_THROWS_AS(max_copies_planar(q), Error);
  q.n = 12;
  q.cap = 12;
  q.strategy = OracleStrategy::Canonical;
  CHECK_THROWS_AS(max_copies_planar(q), Error);
}
