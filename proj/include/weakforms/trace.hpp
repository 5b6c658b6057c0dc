#pragma once

#include <vector>

#include "weakforms/basis.hpp"
#include "weakforms/linalg.hpp"

namespace weakforms {

// Hurwitz class number H(m); H(0) = -1/12, zero unless m = 0, 3 mod 4.
Rat hurwitz(long m);

// Trace of T_n on S_k(Gamma_0(p)), trivial character.
Rat trace_tn(int p, int k, long n);

// Tr(T_m T_n) = sum_{d | (m,n), p !| d} d^{k-1} Tr T_{mn/d^2}.
Rat trace_product(int p, int k, long m, long n);

struct TraceTable {
  int p = 0;
  int k = 0;
  std::vector<Rat> traces; // traces[n - 1] = Tr T_n
};

TraceTable trace_table(int p, int k, int count);

// Independent integer rows sum_n Tr(T_m T_n) q^n (columns n = 0 .. prec_cap-1)
// spanning S_k(Gamma_0(p)); throws RankError if they stall short of dim S_k.
std::vector<linalg::IntRow> cusp_generators(int p, int k, int prec_cap);

// Echelon basis of S_k(Gamma_0(p)) on [0, prec_cap).
EchelonBasis cusp_space(int p, int k, int prec_cap);

} // namespace weakforms
