#include "doctest.h"
#include "weakforms/duality.hpp"

using namespace weakforms;

TEST_CASE("pairing constant term") {
  CHECK(pairing_constant_term(QSeries::one(4), QSeries::one(4)) == 1);
  const auto f = QSeries::from_terms(-1, 3, {{-1, 1}, {1, 3}});
  const auto g = QSeries::from_terms(-1, 3, {{-1, 1}, {1, 5}});
  CHECK(pairing_constant_term(f, g) == 8);
  // Disjoint supports: no overlap, no constant term.
  CHECK(pairing_constant_term(QSeries::monomial(2, 1, 5), QSeries::monomial(1, 1, 5)) == 0);
  CHECK_THROWS_AS(pairing_constant_term(QSeries::monomial(-3, 1, 1), QSeries::one(2)), PrecisionError);
}

TEST_CASE("Bruinier-Funke sum on a synthetic pair") {
  WeakBasis f;
  f.max_pole = 1;
  f.prec_cap = 3;
  f.elements.emplace(1, QSeries::from_terms(-1, 3, {{-1, 1}, {0, 2}, {1, 3}, {2, 11}}));
  WeakBasis g;
  g.max_pole = 2;
  g.prec_cap = 3;
  g.elements.emplace(2, QSeries::from_terms(-2, 3, {{-2, 1}, {-1, 5}, {0, 7}, {1, 13}}));
  // i = 0, 1: 2 * 7 + 3 * 5
  CHECK(bruinier_funke_sum(f, g, 1, 2) == 29);
  // Absent indices give an empty sum.
  CHECK(bruinier_funke_sum(f, g, 0, 2) == 0);
  CHECK(bruinier_funke_sum(f, g, 1, 1) == 0);
}

TEST_CASE("duality at level 11, weight 0") {
  const auto r = duality_check(11, 0, -20, 20, -20, 20, true);
  CHECK(r.checked == 41 * 41);
  CHECK(r.violations.empty());
  CHECK(r.decomposition_checked > 0);
  CHECK(r.decomposition_failures.empty());
  CHECK(r.pass());
}

TEST_CASE("duality at level 17, weight 6") {
  const auto r = duality_check_box(17, 6, 25, true);
  CHECK(r.violations.empty());
  CHECK(r.decomposition_failures.empty());
  const auto [m0, n0] = duality_box_origin(17, 6);
  CHECK(r.m_lo == m0);
  CHECK(r.n_lo == n0);
}

TEST_CASE("mirrored weights both satisfy duality") {
  for (int k : {4, -12, 14}) {
    const auto a = duality_check_box(19, k, 20);
    const auto b = duality_check_box(19, 2 - k, 20);
    CHECK(a.pass());
    CHECK(b.pass());
    CHECK(a.checked == b.checked);
  }
}

TEST_CASE("a deliberately broken pair is reported") {
  auto [f, g] = duality_bases(11, 0, 0, 4, 0, 4);
  // Perturb one coefficient of f_{0,2} and compare by hand.
  const Rat a = coefficient(f, 2, 1);
  const Rat b = coefficient(g, 1, 2);
  CHECK(a == -b);
  CHECK(a + 1 != -b);
  CHECK_THROWS_AS(duality_check(11, 0, 3, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(duality_check_box(11, 0, 0), DomainError);
}
