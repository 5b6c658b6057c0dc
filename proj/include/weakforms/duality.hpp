#pragma once

#include <utility>
#include <vector>

#include "weakforms/weak.hpp"

namespace weakforms {

struct DualityViolation {
  int m;
  int n;
  Rat lhs; // a_k(m, n)
  Rat rhs; // -b_{2-k}(n, m)
};

struct DualityReport {
  int p = 0;
  int k = 0;
  int m_lo = 0, m_hi = 0; // inclusive
  int n_lo = 0, n_hi = 0;
  long checked = 0;
  std::vector<DualityViolation> violations;
  // Constant-term decomposition pairing = a + b + BF + [m = -n]; filled when
  // requested.
  long decomposition_checked = 0;
  std::vector<std::pair<int, int>> decomposition_failures;

  bool pass() const { return violations.empty() && decomposition_failures.empty(); }
};

// Constant term of f g as sum_i f_i g_{-i}; both windows must cover the
// partner's principal part.
Rat pairing_constant_term(const QSeries &f, const QSeries &g);

// sum_{-m < i < n} a_k(m, i) b_{2-k}(n, -i).
Rat bruinier_funke_sum(const WeakBasis &f, const WeakBasis &g, int m, int n);

// Weak bases for weight k (M#) and 2 - k (S#) whose windows cover the box.
std::pair<WeakBasis, WeakBasis> duality_bases(int p, int k, int m_lo, int m_hi, int n_lo, int n_hi);

DualityReport duality_check(int p, int k, int m_lo, int m_hi, int n_lo, int n_hi,
                            bool with_decomposition = false);

// First predicted indices of the weight-k f-family and weight 2-k g-family.
std::pair<int, int> duality_box_origin(int p, int k);

// duality_check on the box x box square anchored at duality_box_origin.
DualityReport duality_check_box(int p, int k, int box, bool with_decomposition = false);

} // namespace weakforms
