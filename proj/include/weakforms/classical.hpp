#pragma once

#include <span>
#include <vector>

#include "weakforms/qseries.hpp"

namespace weakforms {

// One factor eta(d z)^r of an eta quotient.
struct EtaFactor {
  int d;
  int r;
};

// prod eta(d z)^{r_d} on the window [e, prec_cap), e = sum d r_d / 24.
// Weight and leading exponent must both be integers.
QSeries eta_quotient_expand(std::span<const EtaFactor> factors, int prec_cap);

// Exact Bernoulli number B_n (B_1 = -1/2).
Rat bernoulli(int n);

// sigma_j(n) for 1 <= n < cap; entry 0 is 0.
std::vector<mpz_class> divisor_sums(int j, int cap);

// Level-one Eisenstein series with constant term 1, k >= 4 even.
QSeries eisenstein(int k, int prec_cap);

// (p E_k(pz) - E_k(z)) / (p - 1); for k = 2 the quasimodular E_2 is used
// inside the combination only.
QSeries eisenstein_level_p(int k, int p, int prec_cap);

// eta(pz)^{2p} / eta(z)^2, valuation (p^2 - 1)/12.
QSeries delta_p(int p, int prec_cap);

// Delta_p^e for any integer e, expanded directly as an eta quotient.
QSeries delta_p_power(int p, int e, int prec_cap);

// eta(z)^24.
QSeries delta(int prec_cap);

} // namespace weakforms
