#pragma once

#include <vector>

#include "weakforms/basis.hpp"

namespace weakforms {

int genus(int p);
int dim_S(int p, int k);
int dim_E(int p, int k);
int dim_M(int p, int k);
int lambda_p(int p);

// Sturm bound plus slack: ceil(k(p+1)/12) + lambda_p + 8.
int precision_floor(int p, int k);

// Echelon basis of M_k(p) or S_k(p) on [0, prec_cap); prec_cap must be at
// least precision_floor(p, k). Results are cached per (p, k, space).
EchelonBasis holo_basis(int p, int k, Space space, int prec_cap);

struct GapReport {
  int p = 0;
  int k = 0;
  std::vector<int> miss_m;
  std::vector<int> miss_s;
  int c_m = 0;
  int c_s = 0;
  int m_max = 0; // largest pivot of M_k(p)
  int s_max = 0; // largest pivot of S_k(p), 0 if S_k(p) = 0
  int dim_m = 0;
  int dim_s = 0;
};

// Integers strictly between the extreme pivots that are not pivots.
std::vector<int> missing_orders(const std::vector<int> &pivots);

GapReport gap_sets(int p, int k);

// Level-one forced vanishing orders at i and rho in weight w.
int alpha2(int w);
int alpha3(int w);

// kp/12 - alpha2(kp)/2 - alpha3(kp)/3; needs p >= max(5, k + 1).
Rat ahlgren_bound(int p, int k);

// floor((p - k)/12) + 1 + eps for even 2 <= k <= p - 1.
int gap_count_bound(int p, int k);

} // namespace weakforms
