#include "doctest.h"
#include "weakforms/classical.hpp"
#include "weakforms/spaces.hpp"
#include "weakforms/weak.hpp"

using namespace weakforms;

TEST_CASE("weight zero basis at level 11") {
  const auto b = weak_basis(11, 0, Space::M, 6, 12);
  CHECK(b.index_set() == std::vector<int>{0, 2, 3, 4, 5, 6});
  CHECK(b.element(0) == QSeries::one(12));
  for (const auto &[m, s] : b.elements) {
    CHECK(s.min_exp() == -m);
    CHECK(s.coeff(-m) == 1);
    // Echelon: no other index appears as a pole order.
    for (const auto &[m2, s2] : b.elements) {
      if (m2 != m && -m2 > -m) {
        CHECK(s.coeff(-m2) == 0);
      }
    }
  }
  CHECK(b.first_index() == 0);
  CHECK_THROWS_AS(b.element(1), DomainError);
}

TEST_CASE("coefficient conventions") {
  const auto b = weak_basis(11, 0, Space::M, 6, 12);
  CHECK(coefficient(b, 1, 3) == 0); // absent index
  CHECK(coefficient(b, 2, -2) == 0); // the leading term itself is excluded
  CHECK(coefficient(b, 2, -5) == 0);
  CHECK(coefficient(b, 2, 5) == b.element(2).coeff(5));
  CHECK_THROWS_AS(coefficient(b, 7, 0), PrecisionError);
  CHECK_THROWS_AS(coefficient(b, 2, 12), PrecisionError);
  CHECK_THROWS_AS(coefficient(b, -12, 0), PrecisionError);
}

TEST_CASE("a pole of order exactly ell * lambda_p in S#") {
  // g_{2,10} at level 11 comes from a cusp form of order 1 times Delta_11^-2,
  // not from a non-cusp form of order 0 times Delta_11^-1.
  const auto b = weak_basis(11, 2, Space::S, 10, 4);
  CHECK(b.has(10));
  CHECK(b.ell == 2);
}

TEST_CASE("ell selection") {
  CHECK(minimal_ell(11, 0, Space::M, 10) == 1);
  CHECK(minimal_ell(11, 0, Space::S, 10) == 2);
  CHECK(minimal_ell(11, 0, Space::M, 11) == 2);
  CHECK(minimal_ell(11, -20, Space::M, 0) == 3);
  CHECK_THROWS_AS(weak_basis(11, 0, Space::M, 10, 10, 0), DomainError);
  CHECK_THROWS_AS(weak_basis(11, 1, Space::M, 4, 10), DomainError);
  CHECK_THROWS_AS(weak_basis(11, 0, Space::M, 4, -4), PrecisionError);
}

TEST_CASE("raising ell does not change the basis") {
  const std::pair<int, int> cases[] = {{11, 0}, {11, -8}, {17, 6}, {19, -4}, {23, 2}, {13, 4}};
  for (auto [p, k] : cases) {
    for (Space sp : {Space::M, Space::S}) {
      for (int pole : {12, lambda_p(p), 2 * lambda_p(p)}) {
        const auto b0 = weak_basis(p, k, sp, pole, 15);
        const auto b1 = weak_basis(p, k, sp, pole, 15, b0.ell + 1);
        CHECK(b0.elements == b1.elements);
      }
    }
  }
}

TEST_CASE("multiplying by Delta_p^ell lands in the holomorphic space") {
  const int p = 17;
  const int k = -10;
  const auto b = weak_basis(p, k, Space::S, 10, 20);
  const int lam = lambda_p(p);
  const auto dp = delta_p_power(p, b.ell, 20 + b.ell * lam);
  const int cap = std::max(20 + b.ell * lam, precision_floor(p, b.anchor_weight()));
  const auto holo = holo_basis(p, b.anchor_weight(), Space::S, cap);
  for (const auto &[m, s] : b.elements) {
    const QSeries prod = s * dp;
    QSeries rest = prod.rewindowed(0, prod.prec_cap());
    for (std::size_t i = 0; i < holo.size(); ++i) {
      if (holo.pivots[i] < rest.prec_cap()) {
        rest = rest - holo.elements[i].truncated(rest.prec_cap()).scaled(rest.coeff(holo.pivots[i]));
      }
    }
    CHECK(rest.is_zero());
  }
}

TEST_CASE("weight two cusp-type elements have no constant term") {
  for (int p : {11, 17, 19, 23, 29, 31}) {
    const auto b = weak_basis(p, 2, Space::S, 15, 5);
    CHECK(b.elements.size() >= 10);
    for (const auto &[m, s] : b.elements) {
      CHECK(coefficient(b, m, 0) == 0);
    }
  }
}

TEST_CASE("predicted index sets agree with computed ones") {
  CHECK_FALSE(prediction_supported(13));
  CHECK_FALSE(prediction_supported(5));
  CHECK(prediction_supported(37));
  CHECK_THROWS_AS(index_set_predicted(13, 0, Space::M), DomainError);
  for (int p : {11, 17, 19, 23}) {
    for (int k : {-(p - 1), 0, 2, 4, 6, 2 - (p - 1), p + 3}) {
      for (Space sp : {Space::M, Space::S}) {
        const auto pred = index_set_predicted(p, k, sp);
        int lo = pred.first;
        for (int x : pred.isolated) {
          lo = std::min(lo, x);
        }
        const int hi = lo + 12;
        const int cap = std::max(-lo, 0) + 4;
        const auto b = weak_basis(p, k, sp, hi, cap);
        CHECK(b.index_set() == pred.members(1 - cap, hi));
      }
    }
  }
}
