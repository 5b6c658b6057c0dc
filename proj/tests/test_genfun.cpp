#include "doctest.h"
#include "weakforms/genfun.hpp"

using namespace weakforms;

TEST_CASE("parameters") {
  const auto p11 = genfun_params(11, 0);
  CHECK(p11.n0 == 0);
  CHECK(p11.gap_case);
  CHECK_FALSE(genfun_params(17, 4).gap_case);
  CHECK(genfun_gap_case(17, 6));
  CHECK(genfun_gap_case(17, -10));
  CHECK(genfun_gap_case(19, 4));
  CHECK(genfun_gap_case(19, 8));
  CHECK_FALSE(genfun_gap_case(19, 6));
  CHECK(genfun_gap_case(11, -10));
  CHECK_THROWS_AS(genfun_gap_case(23, 0), DomainError);
  CHECK_THROWS_AS(genfun_gap_case(11, 1), DomainError);
  CHECK(parse_variant("f") == Variant::FDenominator);
  CHECK(to_string(Variant::GDenominator) == "g");
  CHECK_THROWS_AS(parse_variant("h"), DomainError);
}

TEST_CASE("residue rule agrees with the computed index sets") {
  for (int p : {11, 17, 19}) {
    for (int k = -(p - 1); k <= p - 1; k += 2) {
      CHECK_NOTHROW(genfun_params(p, k));
    }
  }
}

TEST_CASE("f - g is constant") {
  for (int p : {11, 17, 19}) {
    const auto d = genfun_constant_difference(p, 25);
    CHECK(d.valuation() == 0);
    for (int n = 1; n < 25; ++n) {
      CHECK(d.coeff(n) == 0);
    }
  }
}

TEST_CASE("generating function identities") {
  const auto a = genfun_check(11, 0, 15, 15, Variant::FDenominator);
  CHECK(a.pass());
  CHECK(a.numerator_products == 5);
  CHECK(a.z_last == 15);
  CHECK(a.tau_last == 15);
  const auto b = genfun_check(17, 4, 15, 15, Variant::GDenominator);
  CHECK(b.pass());
  CHECK(b.numerator_products == 3);
  for (int k : {-8, 2, 6}) {
    for (Variant v : {Variant::FDenominator, Variant::GDenominator}) {
      CHECK(genfun_check(19, k, 10, 10, v).pass());
    }
  }
  CHECK_THROWS_AS(genfun_check(11, 0, -1, 5, Variant::FDenominator), DomainError);
}

TEST_CASE("gap-case recurrence") {
  CHECK(recurrence_check(11, 0, 2));
  CHECK(recurrence_check(11, 0, 0));
  const int n0 = genfun_params(17, 6).n0;
  for (int j : {0, 2, 3, 5}) {
    CHECK(recurrence_check(17, 6, -n0 + j));
  }
  CHECK_THROWS_AS(recurrence_check(11, 0, 1), DomainError);
  CHECK_THROWS_AS(recurrence_check(11, 0, -1), DomainError);
  CHECK_THROWS_AS(recurrence_check(17, 4, 3), DomainError);
}
