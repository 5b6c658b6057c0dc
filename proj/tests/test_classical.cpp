#include <vector>

#include "doctest.h"
#include "weakforms/classical.hpp"
#include "weakforms/spaces.hpp"

using namespace weakforms;

namespace {

// prod_{n >= 1} (1 - q^{d n})^r to `len` terms by repeated multiplication of
// polynomials with machine integers (exact for the sizes used here).
std::vector<long> brute_eta_product(int d, int r, int len) {
  std::vector<long> acc(static_cast<std::size_t>(len), 0);
  acc[0] = 1;
  for (int rep = 0; rep < r; ++rep) {
    for (int n = 1; d * n < len; ++n) {
      const int step = d * n;
      for (int i = len - 1; i >= step; --i) {
        acc[static_cast<std::size_t>(i)] -= acc[static_cast<std::size_t>(i - step)];
      }
    }
  }
  return acc;
}

std::vector<long> brute_mul(const std::vector<long> &a, const std::vector<long> &b) {
  std::vector<long> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

long brute_sigma(int j, int n) {
  long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      long pw = 1;
      for (int e = 0; e < j; ++e) {
        pw *= d;
      }
      s += pw;
    }
  }
  return s;
}

} // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == ratio(-1, 2));
  CHECK(bernoulli(2) == ratio(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == ratio(-1, 30));
  CHECK(bernoulli(12) == ratio(-691, 2730));
  CHECK(bernoulli(20) == ratio(-174611, 330));
}

TEST_CASE("divisor sums match brute force") {
  for (int j = 0; j <= 5; ++j) {
    const auto s = divisor_sums(j, 60);
    CHECK(s[0] == 0);
    for (int n = 1; n < 60; ++n) {
      CHECK(s[static_cast<std::size_t>(n)] == brute_sigma(j, n));
    }
  }
}

TEST_CASE("eta quotients match direct products") {
  const int len = 60;
  // eta(z)^2 eta(11z)^2 = q prod (1 - q^n)^2 (1 - q^{11n})^2
  const std::vector<EtaFactor> f11 = {{1, 2}, {11, 2}};
  const auto s = eta_quotient_expand(f11, len + 1);
  const auto want = brute_mul(brute_eta_product(1, 2, len), brute_eta_product(11, 2, len));
  CHECK(s.min_exp() == 1);
  for (int n = 1; n <= len; ++n) {
    CHECK(s.coeff(n) == want[static_cast<std::size_t>(n - 1)]);
  }
  // Delta = eta^24
  const auto d = delta(40);
  const auto dw = brute_eta_product(1, 24, 40);
  for (int n = 1; n < 40; ++n) {
    CHECK(d.coeff(n) == dw[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(d.coeff(2) == -24);
  CHECK(d.coeff(12) == -370944);

  const std::vector<EtaFactor> bad = {{1, 1}};
  CHECK_THROWS_AS(eta_quotient_expand(bad, 10), DomainError);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta on 200 terms") {
  const int cap = 200;
  const auto e4 = eisenstein(4, cap);
  const auto e6 = eisenstein(6, cap);
  const auto lhs = e4 * e4 * e4 - e6 * e6;
  CHECK(lhs == delta(cap).rewindowed(0, cap).scaled(1728));
}

TEST_CASE("Ramanujan congruence tau(n) = sigma_11(n) mod 691") {
  const auto d = delta(120);
  const auto s11 = divisor_sums(11, 120);
  for (int n = 1; n < 120; ++n) {
    const mpz_class diff = d.coeff(n).get_num() - s11[static_cast<std::size_t>(n)];
    CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), 691) != 0);
  }
}

TEST_CASE("Eisenstein series") {
  const auto e4 = eisenstein(4, 10);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);
  CHECK(eisenstein(12, 3).coeff(1) == ratio(65520, 691));
  CHECK_THROWS_AS(eisenstein(2, 10), DomainError);

  // (p E_k(pz) - E_k(z)) / (p - 1) from level-one data.
  for (int p : {5, 11, 17}) {
    const auto ek = eisenstein(6, 40);
    const auto want = (v_operator(ek.truncated(8), p).truncated(40).scaled(p) - ek).scaled(ratio(1, p - 1));
    CHECK(eisenstein_level_p(6, p, 40) == want.truncated(40));
    const auto e2 = eisenstein_level_p(2, p, 30);
    CHECK(e2.coeff(0) == 1);
    // (E_2(q) - p E_2(q^p)) / (1 - p): the q^1 coefficient is 24 / (p - 1).
    CHECK(e2.coeff(1) == ratio(24, p - 1));
  }
}

TEST_CASE("Delta_p") {
  for (int p : {5, 7, 11, 13, 37}) {
    const int lam = lambda_p(p);
    const auto d = delta_p(p, lam + 20);
    CHECK(d.valuation() == lam);
    CHECK(d.coeff(lam) == 1);
    const auto inv = delta_p_power(p, -1, 20);
    CHECK(inv.min_exp() == -lam);
    CHECK(inv * d == QSeries::one(20));
    CHECK(delta_p_power(p, 2, 2 * lam + 10) == (d * d).truncated(2 * lam + 10));
  }
  CHECK_THROWS_AS(delta_p(3, 10), DomainError);
}
