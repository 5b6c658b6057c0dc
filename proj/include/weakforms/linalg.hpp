#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "weakforms/qseries.hpp"

namespace weakforms::linalg {

// Arithmetic modulo a prime below 2^31 with Barrett reduction.
class Modulus {
public:
  explicit Modulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  // x < 2^62
  std::uint64_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t of(const mpz_class &x) const;

private:
  std::uint64_t p_;
  std::uint64_t m_;
};

bool is_prime(std::uint64_t n);
// The i-th prime below 2^31 counting downwards (cached).
std::uint64_t working_prime(std::size_t i);

using IntRow = std::vector<mpz_class>;
using RatRow = std::vector<Rat>;

struct Rref {
  std::vector<int> pivots;   // strictly increasing column indices
  std::vector<RatRow> rows;  // rows[i][pivots[i]] == 1, zero at every other pivot
};

// Exact reduced row echelon form over Q of the span of `rows` (all of one
// length). Computed modulo word-sized primes, lifted by CRT and rational
// reconstruction, then checked exactly against every input row.
Rref rref(std::span<const IntRow> rows);
Rref rref(std::span<const RatRow> rows);

// Scales a rational row to a primitive integer row.
IntRow primitive_integer_row(std::span<const Rat> row);

// Incremental echelon form modulo one prime; used to pick independent rows.
class ModularEchelon {
public:
  ModularEchelon(std::uint64_t prime, std::size_t ncols);
  // Returns true when the row is independent of those already added.
  bool add(std::span<const mpz_class> row);
  std::size_t rank() const { return rows_.size(); }

private:
  Modulus mod_;
  std::size_t ncols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace weakforms::linalg
