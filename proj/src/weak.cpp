#include "weakforms/weak.hpp"

#include <algorithm>

#include "weakforms/classical.hpp"
#include "weakforms/linalg.hpp"
#include "weakforms/spaces.hpp"

namespace weakforms {

std::vector<int> WeakBasis::index_set() const {
  std::vector<int> out;
  out.reserve(elements.size());
  for (const auto &[m, s] : elements) {
    out.push_back(m);
  }
  return out;
}

std::optional<int> WeakBasis::first_index() const {
  if (elements.empty()) {
    return std::nullopt;
  }
  return elements.begin()->first;
}

const QSeries &WeakBasis::element(int m) const {
  auto it = elements.find(m);
  if (it == elements.end()) {
    throw DomainError("no basis element with index " + std::to_string(m));
  }
  return it->second;
}

int minimal_ell(int p, int k, Space space, int max_pole) {
  const int lam = lambda_p(p);
  // In S# a pole of order exactly ell * lambda_p would need a holomorphic
  // form that vanishes at 0 but not at infinity, which is not a cusp form.
  const int reach = space == Space::S ? max_pole + 1 : max_pole;
  int ell = 0;
  while (ell * lam < reach || k + ell * (p - 1) < 4) {
    ++ell;
  }
  return ell;
}

WeakBasis weak_basis(int p, int k, Space space, int max_pole, int prec_cap, std::optional<int> ell) {
  if (k % 2 != 0) {
    throw DomainError("weight must be even");
  }
  if (prec_cap <= -max_pole) {
    throw PrecisionError("precision cap must exceed the largest pole exponent");
  }
  const int lam = lambda_p(p);
  const int base_ell = minimal_ell(p, k, space, max_pole);
  const int use_ell = ell.value_or(base_ell);
  if (use_ell < base_ell) {
    throw DomainError("ell below the minimal admissible value " + std::to_string(base_ell));
  }
  const int anchor = k + use_ell * (p - 1);
  const int shift = use_ell * lam;
  const int holo_cap = std::max(precision_floor(p, anchor), prec_cap + shift);
  const EchelonBasis holo = holo_basis(p, anchor, space, holo_cap);
  const QSeries divisor = delta_p_power(p, -use_ell, prec_cap);

  // Columns are exponents -shift .. prec_cap - 1.
  const auto width = static_cast<std::size_t>(prec_cap + shift);
  std::vector<linalg::RatRow> rows;
  for (std::size_t i = 0; i < holo.size(); ++i) {
    const int lead = holo.pivots[i] - shift;
    if (lead < -max_pole || lead >= prec_cap) {
      continue;
    }
    const QSeries prod = multiply(holo.elements[i], divisor, prec_cap);
    const QSeries row = prod.rewindowed(-shift, prec_cap);
    rows.emplace_back(row.coefficients().begin(), row.coefficients().end());
    rows.back().resize(width);
  }

  WeakBasis out;
  out.p = p;
  out.k = k;
  out.space = space;
  out.max_pole = max_pole;
  out.prec_cap = prec_cap;
  out.ell = use_ell;
  if (rows.empty()) {
    return out;
  }
  auto r = linalg::rref(std::span<const linalg::RatRow>(rows));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    const int lead = r.pivots[i] - shift;
    std::vector<Rat> coeffs(r.rows[i].begin() + r.pivots[i], r.rows[i].end());
    out.elements.emplace(-lead, QSeries(lead, std::move(coeffs)));
  }
  return out;
}

Rat coefficient(const WeakBasis &basis, int m, int n) {
  if (m > basis.max_pole || -m >= basis.prec_cap) {
    throw PrecisionError("index outside the computed pole window");
  }
  if (n >= basis.prec_cap) {
    throw PrecisionError("coefficient not computed at this precision");
  }
  auto it = basis.elements.find(m);
  if (it == basis.elements.end() || n <= -m) {
    return 0;
  }
  return it->second.coeff(n);
}

bool IndexPrediction::contains(int m) const {
  if (std::find(isolated.begin(), isolated.end(), m) != isolated.end()) {
    return true;
  }
  return m >= first && std::find(excluded.begin(), excluded.end(), m) == excluded.end();
}

std::vector<int> IndexPrediction::members(int lo, int hi) const {
  std::vector<int> out;
  for (int m = lo; m <= hi; ++m) {
    if (contains(m)) {
      out.push_back(m);
    }
  }
  return out;
}

bool prediction_supported(int p) {
  if (p <= 3 || !linalg::is_prime(static_cast<std::uint64_t>(p)) || genus(p) == 0) {
    return false;
  }
  return p % 12 != 1 || p == 37;
}

IndexPrediction index_set_predicted(int p, int k, Space space) {
  if (!prediction_supported(p)) {
    throw DomainError("index set prediction unsupported for p = " + std::to_string(p));
  }
  if (k % 2 != 0) {
    throw DomainError("weight must be even");
  }
  const int period = p - 1;
  const int kp = ((k % period) + period) % period;
  const int ell = (k - kp) / period;
  const int shift = ell * lambda_p(p);
  const int g0 = genus(p);
  IndexPrediction pred;
  if (kp == 0) {
    pred.first = g0 + 1 - shift;
    if (space == Space::M) {
      pred.isolated.push_back(-shift);
    }
  } else if (kp == 2) {
    pred.first = -g0 - shift;
    if (space == Space::S) {
      pred.excluded.push_back(-shift);
    }
  } else {
    const GapReport gaps = gap_sets(p, kp);
    const auto &miss = space == Space::M ? gaps.miss_m : gaps.miss_s;
    if (space == Space::M) {
      pred.first = -gaps.dim_m - gaps.c_m + 1 - shift;
    } else {
      pred.first = -gaps.dim_s - gaps.c_s - shift;
    }
    for (int x : miss) {
      pred.excluded.push_back(-x - shift);
    }
    std::sort(pred.excluded.begin(), pred.excluded.end());
  }
  return pred;
}

} // namespace weakforms
