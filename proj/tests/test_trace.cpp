#include <numeric>

#include "doctest.h"
#include "weakforms/classical.hpp"
#include "weakforms/spaces.hpp"
#include "weakforms/trace.hpp"

using namespace weakforms;

namespace {

// sum_{d | n} min(d, n/d)
long lambda_sum(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) {
      s += std::min(d, n / d);
    }
  }
  return s;
}

long sigma1(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) {
      s += d;
    }
  }
  return s;
}

QSeries eta_form(std::initializer_list<EtaFactor> f, int cap) {
  const std::vector<EtaFactor> v(f);
  return eta_quotient_expand(v, cap);
}

} // namespace

TEST_CASE("Hurwitz class numbers") {
  CHECK(hurwitz(0) == ratio(-1, 12));
  CHECK(hurwitz(1) == 0);
  CHECK(hurwitz(2) == 0);
  CHECK(hurwitz(3) == ratio(1, 3));
  CHECK(hurwitz(4) == ratio(1, 2));
  CHECK(hurwitz(7) == 1);
  CHECK(hurwitz(8) == 1);
  CHECK(hurwitz(12) == ratio(4, 3));
  CHECK(hurwitz(15) == 2);
  CHECK(hurwitz(16) == ratio(3, 2));
  CHECK(hurwitz(23) == 3);
  CHECK_THROWS_AS(hurwitz(-1), DomainError);
}

TEST_CASE("Kronecker-Hurwitz class number relation") {
  // sum_{t^2 <= 4n} H(4n - t^2) = 2 sigma(n) - lambda(n)
  for (long n = 1; n <= 300; ++n) {
    Rat s = 0;
    for (long t = -2 * n; t <= 2 * n; ++t) {
      if (t * t <= 4 * n) {
        s += hurwitz(4 * n - t * t);
      }
    }
    CHECK(s == 2 * sigma1(n) - lambda_sum(n));
  }
}

TEST_CASE("Tr T_1 is the dimension of the cusp space") {
  for (int p = 5; p <= 37; ++p) {
    if (!linalg::is_prime(static_cast<std::uint64_t>(p))) {
      continue;
    }
    for (int k = 2; k <= p - 1; k += 2) {
      CHECK(trace_tn(p, k, 1) == dim_S(p, k));
    }
  }
}

TEST_CASE("traces on one-dimensional cusp spaces are eta coefficients") {
  const auto f11 = eta_form({{1, 2}, {11, 2}}, 51);
  for (long n = 1; n <= 50; ++n) {
    CHECK(trace_tn(11, 2, n) == f11.coeff(static_cast<int>(n)));
  }
  const auto f5 = eta_form({{1, 4}, {5, 4}}, 41);
  REQUIRE(dim_S(5, 4) == 1);
  for (long n = 1; n <= 40; ++n) {
    CHECK(trace_tn(5, 4, n) == f5.coeff(static_cast<int>(n)));
  }
}

TEST_CASE("trace products") {
  for (int p : {11, 13, 23}) {
    for (long m = 1; m <= 6; ++m) {
      for (long n = 1; n <= 6; ++n) {
        CHECK(trace_product(p, 4, m, n) == trace_product(p, 4, n, m));
        if (std::gcd(m, n) == 1) {
          CHECK(trace_product(p, 4, m, n) == trace_tn(p, 4, m * n));
        }
      }
    }
  }
  // T_2 T_2 = T_4 + 2^{k-1}
  CHECK(trace_product(11, 2, 2, 2) == trace_tn(11, 2, 4) + 2 * trace_tn(11, 2, 1));
  // T_p T_p = T_{p^2} for the level p
  CHECK(trace_product(11, 2, 11, 11) == trace_tn(11, 2, 121));
}

TEST_CASE("trace table and domain errors") {
  const auto t = trace_table(11, 2, 5);
  CHECK(t.traces.size() == 5);
  CHECK(t.traces[1] == -2);
  CHECK_THROWS_AS(trace_tn(4, 2, 1), DomainError);
  CHECK_THROWS_AS(trace_tn(11, 3, 1), DomainError);
  CHECK_THROWS_AS(trace_tn(11, 2, 0), DomainError);
}

TEST_CASE("cusp space from traces") {
  const auto b = cusp_space(11, 2, 30);
  REQUIRE(b.size() == 1);
  CHECK(b.pivots == std::vector<int>{1});
  CHECK(b.elements[0] == eta_form({{1, 2}, {11, 2}}, 30).rewindowed(0, 30));
  for (int p : {13, 23, 37}) {
    for (int k : {2, 4, 12}) {
      CHECK(static_cast<int>(cusp_space(p, k, precision_floor(p, k)).size()) == dim_S(p, k));
    }
  }
}
