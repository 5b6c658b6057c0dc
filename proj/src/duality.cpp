#include "weakforms/duality.hpp"

#include <algorithm>

namespace weakforms {

Rat pairing_constant_term(const QSeries &f, const QSeries &g) {
  const int lo = f.min_exp();
  const int hi = -g.min_exp();
  if (lo > hi) {
    return 0;
  }
  if (hi >= f.prec_cap() || -lo >= g.prec_cap()) {
    throw PrecisionError("windows do not cover the principal parts");
  }
  Rat total = 0;
  for (int i = lo; i <= hi; ++i) {
    const Rat &a = f.coeff(i);
    if (sgn(a) != 0) {
      total += a * g.coeff(-i);
    }
  }
  return total;
}

Rat bruinier_funke_sum(const WeakBasis &f, const WeakBasis &g, int m, int n) {
  Rat total = 0;
  if (!f.has(m) || !g.has(n)) {
    return total;
  }
  for (int i = -m + 1; i < n; ++i) {
    const Rat a = coefficient(f, m, i);
    if (sgn(a) != 0) {
      total += a * coefficient(g, n, -i);
    }
  }
  return total;
}

std::pair<WeakBasis, WeakBasis> duality_bases(int p, int k, int m_lo, int m_hi, int n_lo, int n_hi) {
  if (m_lo > m_hi || n_lo > n_hi) {
    throw DomainError("empty duality box");
  }
  const int f_cap = std::max(n_hi, -m_lo) + 1;
  const int g_cap = std::max(m_hi, -n_lo) + 1;
  WeakBasis f = weak_basis(p, k, Space::M, std::max(m_hi, -f_cap + 1), f_cap);
  WeakBasis g = weak_basis(p, 2 - k, Space::S, std::max(n_hi, -g_cap + 1), g_cap);
  return {std::move(f), std::move(g)};
}

DualityReport duality_check(int p, int k, int m_lo, int m_hi, int n_lo, int n_hi,
                            bool with_decomposition) {
  const auto [f, g] = duality_bases(p, k, m_lo, m_hi, n_lo, n_hi);
  DualityReport r;
  r.p = p;
  r.k = k;
  r.m_lo = m_lo;
  r.m_hi = m_hi;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = n_lo; n <= n_hi; ++n) {
      const Rat a = coefficient(f, m, n);
      const Rat b = coefficient(g, n, m);
      ++r.checked;
      if (a != -b) {
        r.violations.push_back({m, n, a, -b});
      }
      if (with_decomposition && f.has(m) && g.has(n)) {
        const Rat whole = pairing_constant_term(f.element(m), g.element(n));
        const Rat parts = a + b + bruinier_funke_sum(f, g, m, n) + (m == -n ? 1 : 0);
        ++r.decomposition_checked;
        if (whole != parts || sgn(whole) != 0) {
          r.decomposition_failures.emplace_back(m, n);
        }
      }
    }
  }
  return r;
}

std::pair<int, int> duality_box_origin(int p, int k) {
  const auto f = index_set_predicted(p, k, Space::M);
  const auto g = index_set_predicted(p, 2 - k, Space::S);
  auto lowest = [](const IndexPrediction &pr) {
    int lo = pr.first;
    for (int x : pr.isolated) {
      lo = std::min(lo, x);
    }
    return lo;
  };
  return {lowest(f), lowest(g)};
}

DualityReport duality_check_box(int p, int k, int box, bool with_decomposition) {
  if (box < 1) {
    throw DomainError("box size must be positive");
  }
  const auto [m0, n0] = duality_box_origin(p, k);
  return duality_check(p, k, m0, m0 + box - 1, n0, n0 + box - 1, with_decomposition);
}

} // namespace weakforms
