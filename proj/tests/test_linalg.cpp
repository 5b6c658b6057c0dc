#include <random>

#include "doctest.h"
#include "weakforms/linalg.hpp"

using namespace weakforms;
using linalg::RatRow;

namespace {

// Textbook Gauss-Jordan over Q.
linalg::Rref naive_rref(std::vector<RatRow> m) {
  linalg::Rref out;
  if (m.empty()) {
    return out;
  }
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) {
      ++piv;
    }
    if (piv == m.size()) {
      continue;
    }
    std::swap(m[r], m[piv]);
    const Rat inv = 1 / m[r][c];
    for (auto &x : m[r]) {
      x *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r && sgn(m[i][c]) != 0) {
        const Rat f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) {
          m[i][j] -= f * m[r][j];
        }
      }
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

} // namespace

TEST_CASE("modular arithmetic helpers") {
  CHECK(linalg::is_prime(2147483647));
  CHECK_FALSE(linalg::is_prime(2147483649ULL));
  CHECK_FALSE(linalg::is_prime(1));
  CHECK(linalg::is_prime(37));
  CHECK(linalg::working_prime(0) == 2147483647);
  CHECK(linalg::working_prime(1) < linalg::working_prime(0));
  linalg::Modulus m(101);
  CHECK(m.mul(m.inv(7), 7) == 1);
  CHECK(m.pow(3, 100) == 1);
  CHECK(m.of(mpz_class(-1)) == 100);
}

TEST_CASE("primitive integer rows") {
  const std::vector<Rat> row = {ratio(1, 2), ratio(-3, 4), 0};
  const auto ints = linalg::primitive_integer_row(row);
  CHECK(ints[0] == 2);
  CHECK(ints[1] == -3);
  CHECK(ints[2] == 0);
}

TEST_CASE("rref matches Gauss-Jordan on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<int> dim(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = dim(rng);
    const int cols = dim(rng);
    std::vector<RatRow> m(static_cast<std::size_t>(rows), RatRow(static_cast<std::size_t>(cols)));
    for (auto &r : m) {
      for (auto &x : r) {
        x = ratio(entry(rng), den(rng));
      }
    }
    // Force rank deficiency now and then.
    if (rows > 2 && trial % 3 == 0) {
      for (int j = 0; j < cols; ++j) {
        m[2][static_cast<std::size_t>(j)] = m[0][static_cast<std::size_t>(j)] * 3 - m[1][static_cast<std::size_t>(j)];
      }
    }
    const auto got = linalg::rref(std::span<const RatRow>(m));
    const auto want = naive_rref(m);
    CHECK(got.pivots == want.pivots);
    CHECK(got.rows == want.rows);
  }
}

TEST_CASE("rref with large entries needs several primes") {
  std::vector<linalg::IntRow> m = {{mpz_class("123456789012345678901234567890"), 1, 0},
                                  {mpz_class("987654321098765432109876543210"), 0, 1}};
  const auto r = linalg::rref(std::span<const linalg::IntRow>(m));
  REQUIRE(r.pivots == std::vector<int>{0, 1});
  const auto want = naive_rref({{Rat(m[0][0]), 1, 0}, {Rat(m[1][0]), 0, 1}});
  CHECK(r.rows == want.rows);
}

TEST_CASE("incremental independence test") {
  linalg::ModularEchelon e(linalg::working_prime(0), 3);
  const linalg::IntRow a = {1, 2, 3};
  const linalg::IntRow b = {2, 4, 6};
  const linalg::IntRow c = {0, 1, 1};
  CHECK(e.add(a));
  CHECK_FALSE(e.add(b));
  CHECK(e.add(c));
  CHECK(e.rank() == 2);
}
