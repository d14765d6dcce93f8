#include <doctest.h>

#include <cmath>

#include "pathex/constructions.hpp"
#include "pathex/density.hpp"
#include "pathex/oracle.hpp"

using namespace pathex;

TEST_CASE("balanced class sizes") {
  const auto spec = BlowupSpec::balanced(3, 11);
  CHECK(spec.class_sizes == std::vector<int>{3, 3, 2});
  CHECK(BlowupSpec::balanced(2, 6).class_sizes == std::vector<int>{2, 2});
  CHECK_THROWS_AS(BlowupSpec::balanced(1, 6), Error);
  CHECK_THROWS_AS(BlowupSpec::balanced(3, 5), Error);
}

TEST_CASE("blow-up of C_4 is K_{2,n-2}") {
  for (int n = 4; n <= 9; ++n) {
    const SimpleGraph g = blowup_cycle(2, n);
    CHECK(g.size() == 2 * (n - 2));
    CHECK(canonical_form(g) == canonical_form(SimpleGraph::complete_bipartite(2, n - 2)));
  }
  // A P5 in K_{2,4} is leaf-hub-leaf-hub-leaf: 4*3*2 ordered leaf choices, two hub orders,
  // each path counted twice.
  CHECK(count_copies(blowup_cycle(2, 6), PathPattern{5}) == 24);
  CHECK(count_copies(SimpleGraph::complete_bipartite(2, 4), PathPattern{5}) == 24);
}

TEST_CASE("blow-ups are planar with 2(n-m) edges") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2 * m; n <= 3 * m + 4; ++n) {
      const SimpleGraph g = blowup_cycle(m, n);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(g.order() == n);
      CHECK(g.size() == 2 * (n - m));
      CHECK(is_planar(g));
      for (Vertex v = m + 1; v <= n; ++v) CHECK(g.degree(v) == 2);
    }
  CHECK(is_planar(blowup_cycle(3, 9)));
  // n = 2m is the cycle itself.
  CHECK(canonical_form(blowup_cycle(4, 8)) == canonical_form(SimpleGraph::cycle(8)));
}

TEST_CASE("uniform cycle measure") {
  const auto mu = uniform_cycle_measure<Rational>(4, 6);
  CHECK(mu.mass() == 1);
  CHECK(mu(1, 2) == Rational(1, 4));
  CHECK(mu(4, 1) == Rational(1, 4));
  CHECK(mu(1, 3) == 0);
  CHECK(mu.support().size() == 4);
  CHECK_THROWS_AS(uniform_cycle_measure<double>(2, 6), Error);
  CHECK_THROWS_AS(uniform_cycle_measure<double>(7, 6), Error);
}

TEST_CASE("gap report") {
  const auto rows = conjecture_gap_report(2, {6, 10, 14, 18});
  REQUIRE(rows.size() == 4);
  const std::uint64_t counts[] = {24, 336, 1320, 3360};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double n = rows[i].n;
    CHECK(rows[i].count == counts[i]);
    CHECK(rows[i].target == doctest::Approx(n * n * n));
    CHECK(rows[i].ratio == doctest::Approx(counts[i] / (n * n * n)));
    CHECK(rows[i].ratio < 1.0);
    if (i > 0) CHECK(rows[i].ratio > rows[i - 1].ratio);
    CHECK(static_cast<double>(rows[i].count) <= 1e4 * 0.25 * n * n * n);
  }
  // K_{2,k} closed form: k(k-1)(k-2) ordered leaves, 2 hub orders, halved.
  for (const auto& row : rows) {
    const std::uint64_t k = row.n - 2;
    CHECK(row.count == k * (k - 1) * (k - 2));
  }
  const auto m3 = conjecture_gap_report(3, {9, 12});
  CHECK(m3[0].count > 0);
  CHECK(m3[1].count > m3[0].count);
}
