#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weakforms/weak.hpp"

namespace weakforms {

enum class Variant { FDenominator, GDenominator };

std::string to_string(Variant v);
Variant parse_variant(const std::string &text);

struct GenFunParams {
  int p = 0;
  int k = 0;
  int n0 = 0;             // first index of the weight-k family is -n0
  bool gap_case = false;  // residue rule
  Rat a_m1, a_1;          // coefficients of f = f_{0,2}
  Rat b_m1, b_1;          // coefficients of g = g_{0,2}
};

// Residue rule: k = 0 mod p-1, or p = 17 and k = 6 mod 16, or p = 19 and
// k = 4, 8 mod 18.
bool genfun_gap_case(int p, int k);

// Throws std::logic_error when the computed index set disagrees with the
// residue rule.
GenFunParams genfun_params(int p, int k);

struct GenFunReport {
  int p = 0;
  int k = 0;
  Variant variant = Variant::FDenominator;
  int z_last = 0;   // -n0 + J
  int tau_last = 0; // n0 + I
  GenFunParams params;
  int numerator_products = 0;
  long coefficients_checked = 0;
  std::vector<std::pair<int, int>> nonzero; // residual support
  Rat max_abs_residual = 0;

  bool pass() const { return nonzero.empty(); }
};

// (den(z) - den(tau)) F_k - numerator on z <= -n0 + J, tau <= n0 + I, i.e.
// J and I are measured from the first element f_{k,-n0} = q^{n0} + ...
GenFunReport genfun_check(int p, int k, int z_span, int tau_span, Variant variant);

// The gap-case recurrence for f_{k, n+2}, checked as series through
// q^{n0 + prec - 1}.
bool recurrence_check(int p, int k, int n, int prec = 20);

// f_{0,2} - g_{0,2}, which should be a constant.
QSeries genfun_constant_difference(int p, int prec);

} // namespace weakforms
