#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weakforms/basis.hpp"

namespace weakforms {

// Canonical basis of the weakly holomorphic space M#_k(p) (Space::M) or
// S#_k(p) (Space::S), restricted to pole orders m <= max_pole.
// Element m is q^{-m} + O(q^{-m+1}) on [-m, prec_cap).
struct WeakBasis {
  int p = 0;
  int k = 0;
  Space space = Space::M;
  int max_pole = 0;
  int prec_cap = 0;
  int ell = 0;          // anchor weight is k + ell (p - 1)
  std::map<int, QSeries> elements;

  int anchor_weight() const { return k + ell * (p - 1); }
  bool has(int m) const { return elements.count(m) != 0; }
  std::vector<int> index_set() const;
  // Smallest pole order -m with m in the index set (the lowest index).
  std::optional<int> first_index() const;
  const QSeries &element(int m) const;
};

// Smallest ell >= 0 with k + ell (p - 1) >= 4 and ell * lambda_p >= max_pole
// (M#) or ell * lambda_p > max_pole (S#).
int minimal_ell(int p, int k, Space space, int max_pole);

// Divides the echelon basis of weight k + ell (p - 1) by Delta_p^ell and
// re-echelonizes. ell defaults to minimal_ell and may only be raised.
WeakBasis weak_basis(int p, int k, Space space, int max_pole, int prec_cap,
                     std::optional<int> ell = std::nullopt);

// a_k(m, n) or b_k(m, n): 0 if m is not an index, 0 for n <= -m.
// Throws PrecisionError when the window does not decide the value.
Rat coefficient(const WeakBasis &basis, int m, int n);

// Index set implied by dimensions and holomorphic gap sets: every m >= first
// outside `excluded`, plus the isolated indices in `isolated` (below first).
struct IndexPrediction {
  int first = 0;
  std::vector<int> isolated;
  std::vector<int> excluded;

  bool contains(int m) const;
  // Members in [lo, hi].
  std::vector<int> members(int lo, int hi) const;
};

IndexPrediction index_set_predicted(int p, int k, Space space);

// Levels for which index_set_predicted is supported.
bool prediction_supported(int p);

} // namespace weakforms
