#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "weakforms/errors.hpp"

namespace weakforms {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;

// "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rat &r);
Rat parse_rat(const std::string &text);
// num/den in lowest terms.
Rat ratio(long num, long den);

// Truncated Laurent series sum_{n >= min_exp} c_n q^n. Coefficients are
// known exactly for min_exp <= n < prec_cap, are zero below min_exp and
// unknown from prec_cap on.
class QSeries {
public:
  QSeries(int min_exp, std::vector<Rat> coeffs);

  static QSeries zero(int min_exp, int prec_cap);
  static QSeries one(int prec_cap);
  static QSeries monomial(int exp, const Rat &c, int prec_cap);
  // Sparse terms on the window [min_exp, prec_cap).
  static QSeries from_terms(int min_exp, int prec_cap,
                            std::initializer_list<std::pair<int, Rat>> terms);

  int min_exp() const { return min_exp_; }
  int prec_cap() const { return min_exp_ + static_cast<int>(coeffs_.size()); }
  std::span<const Rat> coefficients() const { return coeffs_; }

  // Coefficient of q^n; throws PrecisionError outside [min_exp, prec_cap).
  const Rat &coeff(int n) const;
  // As coeff() but returns 0 below the window.
  Rat coeff_or_zero(int n) const;

  // Exponent of the first nonzero coefficient; nullopt when the window is
  // identically zero (the valuation is then only known to be >= prec_cap).
  std::optional<int> valuation() const;
  bool is_zero() const;

  QSeries truncated(int prec_cap) const;
  // Re-window to [min_exp, prec_cap); lowering min_exp pads with zeros, raising
  // it requires the dropped coefficients to vanish.
  QSeries rewindowed(int min_exp, int prec_cap) const;
  // Multiplication by q^s.
  QSeries shifted(int s) const;
  QSeries scaled(const Rat &c) const;

  friend bool operator==(const QSeries &a, const QSeries &b);

private:
  int min_exp_;
  std::vector<Rat> coeffs_;
};

QSeries operator+(const QSeries &a, const QSeries &b);
QSeries operator-(const QSeries &a, const QSeries &b);
QSeries operator-(const QSeries &a);
QSeries operator*(const QSeries &a, const QSeries &b);
QSeries operator*(const Rat &c, const QSeries &a);

// Product truncated to at most `cap`; avoids computing coefficients that are
// about to be discarded.
QSeries multiply(const QSeries &a, const QSeries &b, int cap);
QSeries inverse(const QSeries &a);
QSeries divide(const QSeries &a, const QSeries &b);
// Integer power (negative exponents go through inverse()).
QSeries power(const QSeries &a, int e);
// q -> q^d.
QSeries v_operator(const QSeries &a, int d);

std::string to_string(const QSeries &s, int max_terms = 12);

// Two-variable truncated series sum_m rows[m](q_tau) q_z^m. Every row shares
// one tau-window; rows at z-exponents in [z_min, z_cap) are known.
class BiSeries {
public:
  BiSeries(int z_min, std::vector<QSeries> rows);

  int z_min() const { return z_min_; }
  int z_cap() const { return z_min_ + static_cast<int>(rows_.size()); }
  int tau_min() const { return rows_.front().min_exp(); }
  int tau_cap() const { return rows_.front().prec_cap(); }
  const QSeries &row(int m) const;
  Rat coeff(int m, int n) const;
  const std::vector<QSeries> &rows() const { return rows_; }

  // Positions (z, tau) of nonzero coefficients with z <= z_last, tau <= tau_last.
  std::vector<std::pair<int, int>> nonzero_positions(int z_last, int tau_last) const;

private:
  int z_min_;
  std::vector<QSeries> rows_;
};

// Assemble rows keyed by z-exponent. Missing exponents between the smallest
// key and z_cap are zero rows; all rows are brought to a common tau-window.
BiSeries bi_combine(const std::map<int, QSeries> &rows, std::optional<int> z_cap = {});
// s acts in q_z.
BiSeries bi_mul(const BiSeries &f, const QSeries &s);
// s acts in q_tau, scaling each row.
BiSeries bi_mul_tau(const BiSeries &f, const QSeries &s);
BiSeries bi_add(const BiSeries &f, const BiSeries &g);
BiSeries bi_sub(const BiSeries &f, const BiSeries &g);
// z_part(q_z) * tau_part(q_tau).
BiSeries bi_outer(const QSeries &z_part, const QSeries &tau_part);

} // namespace weakforms
