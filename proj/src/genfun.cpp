#include "weakforms/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace weakforms {

std::string to_string(Variant v) { return v == Variant::FDenominator ? "f" : "g"; }

Variant parse_variant(const std::string &text) {
  if (text == "f") {
    return Variant::FDenominator;
  }
  if (text == "g") {
    return Variant::GDenominator;
  }
  throw DomainError("variant must be f or g, got " + text);
}

namespace {

void check_genus_one(int p) {
  if (p != 11 && p != 17 && p != 19) {
    throw DomainError("generating functions are implemented for p in {11, 17, 19}");
  }
}

int residue(int k, int m) { return ((k % m) + m) % m; }

// Element m of the basis, or the zero series on [lo, cap) if m is absent.
QSeries element_or_zero(const WeakBasis &b, int m, int lo, int cap) {
  return b.has(m) ? b.element(m) : QSeries::zero(lo, cap);
}

const QSeries &require(const WeakBasis &b, int m) {
  if (!b.has(m)) {
    throw DomainError("missing basis element with index " + std::to_string(m));
  }
  return b.element(m);
}

} // namespace

bool genfun_gap_case(int p, int k) {
  check_genus_one(p);
  if (k % 2 != 0) {
    throw DomainError("weight must be even");
  }
  if (residue(k, p - 1) == 0) {
    return true;
  }
  if (p == 17 && residue(k, 16) == 6) {
    return true;
  }
  return p == 19 && (residue(k, 18) == 4 || residue(k, 18) == 8);
}

GenFunParams genfun_params(int p, int k) {
  GenFunParams par;
  par.p = p;
  par.k = k;
  par.gap_case = genfun_gap_case(p, k);

  const auto pred = index_set_predicted(p, k, Space::M);
  int lowest = pred.first;
  for (int x : pred.isolated) {
    lowest = std::min(lowest, x);
  }
  const WeakBasis fk = weak_basis(p, k, Space::M, lowest + 4, std::max(-lowest, 0) + 6);
  const auto first = fk.first_index();
  if (!first || *first != lowest) {
    throw std::logic_error("computed first index disagrees with the prediction");
  }
  par.n0 = -*first;
  const bool computed_gap = !fk.has(*first + 1);
  if (computed_gap != par.gap_case || !fk.has(*first + 2) || !fk.has(*first + 3)) {
    throw std::logic_error("computed index set disagrees with the residue rule");
  }

  const WeakBasis f0 = weak_basis(p, 0, Space::M, 2, 3);
  const WeakBasis g0 = weak_basis(p, 0, Space::S, 2, 3);
  par.a_m1 = coefficient(f0, 2, -1);
  par.a_1 = coefficient(f0, 2, 1);
  par.b_m1 = coefficient(g0, 2, -1);
  par.b_1 = coefficient(g0, 2, 1);
  return par;
}

GenFunReport genfun_check(int p, int k, int z_span, int tau_span, Variant variant) {
  if (z_span < 0 || tau_span < 0) {
    throw DomainError("window spans must be >= 0");
  }
  GenFunReport rep;
  rep.p = p;
  rep.k = k;
  rep.variant = variant;
  rep.params = genfun_params(p, k);
  const auto &par = rep.params;
  const int n0 = par.n0;
  const int z_last = -n0 + z_span;
  const int tau_last = n0 + tau_span;
  rep.z_last = z_last;
  rep.tau_last = tau_last;

  // Rows through J + 2 feed the z-shift of den(z); tau needs 2 extra orders.
  const int tau_cap = tau_last + 3;
  const WeakBasis fk = weak_basis(p, k, Space::M, std::max(z_last + 3, -n0 + 3), tau_cap);
  const WeakBasis g2k = weak_basis(p, 2 - k, Space::S, n0 + 2, z_last + 1);
  const Space den_space = variant == Variant::FDenominator ? Space::M : Space::S;
  const WeakBasis den_basis = weak_basis(p, 0, den_space, 2, tau_last + z_last + 8);
  const QSeries &den = den_basis.element(2);

  std::map<int, QSeries> rows;
  for (const auto &[m, s] : fk.elements) {
    if (m <= z_last + 2) {
      rows.emplace(m, s);
    }
  }
  const BiSeries F = bi_combine(rows, z_last + 3);
  const BiSeries lhs = bi_sub(bi_mul(F, den), bi_mul_tau(F, den));

  struct Term {
    Rat c;
    int g_index;
    int f_index;
  };
  std::vector<Term> terms;
  const Rat one = 1;
  if (!par.gap_case) {
    if (variant == Variant::FDenominator) {
      terms = {{par.a_m1, n0 + 1, -n0}, {one, n0 + 2, -n0}, {one, n0 + 1, -n0 + 1}};
    } else {
      terms = {{par.b_m1, n0 + 1, -n0}, {one, n0 + 1, -n0 + 1}, {one, n0 + 2, -n0}};
    }
  } else if (variant == Variant::FDenominator) {
    terms = {{par.a_1, n0 - 1, -n0},   {par.a_m1, n0 + 1, -n0},   {one, n0 + 2, -n0},
             {par.a_m1, n0 - 1, -n0 + 2}, {one, n0 - 1, -n0 + 3}};
  } else {
    terms = {{par.b_1, n0 - 1, -n0},   {par.b_m1, n0 - 1, -n0 + 2}, {one, n0 - 1, -n0 + 3},
             {par.b_m1, n0 + 1, -n0}, {one, n0 + 2, -n0}};
  }
  rep.numerator_products = static_cast<int>(terms.size());

  std::optional<BiSeries> rhs;
  for (const auto &t : terms) {
    BiSeries part = bi_outer(require(g2k, t.g_index), require(fk, t.f_index).scaled(t.c));
    rhs = rhs ? bi_add(*rhs, part) : part;
  }
  const BiSeries residual = bi_sub(lhs, *rhs);
  if (residual.z_cap() <= z_last || residual.tau_cap() <= tau_last) {
    throw PrecisionError("generating function window not covered");
  }
  for (int m = residual.z_min(); m <= z_last; ++m) {
    const auto &row = residual.row(m);
    for (int n = row.min_exp(); n <= tau_last; ++n) {
      ++rep.coefficients_checked;
      const Rat &c = row.coeff(n);
      if (sgn(c) != 0) {
        rep.nonzero.emplace_back(m, n);
        if (abs(c) > rep.max_abs_residual) {
          rep.max_abs_residual = abs(c);
        }
      }
    }
  }
  return rep;
}

bool recurrence_check(int p, int k, int n, int prec) {
  const GenFunParams par = genfun_params(p, k);
  if (!par.gap_case) {
    throw DomainError("the recurrence is stated for the gap case only");
  }
  const int n0 = par.n0;
  if (n < -n0 || n == -n0 + 1) {
    throw DomainError("recurrence index must satisfy n >= -n0 and n != -n0 + 1");
  }
  const int lo = -(n + 2);
  const int cap = n0 + prec;
  const WeakBasis fk = weak_basis(p, k, Space::M, std::max(n + 2, -n0 + 3), cap + 2);
  const WeakBasis f0 = weak_basis(p, 0, Space::M, 2, cap + n + 6);
  const WeakBasis g2k = weak_basis(p, 2 - k, Space::S, n0 + 2, std::max(n, 1 - n0) + 2);
  const QSeries &f = f0.element(2);
  auto a = [&](int i) { return coefficient(f0, 2, i); };
  auto b = [&](int m) { return coefficient(g2k, m, n); };
  auto fe = [&](int m) { return element_or_zero(fk, m, lo, cap + 2); };

  QSeries rhs = multiply(f, fe(n), cap);
  rhs = rhs - fe(-n0).scaled(a(n + n0));
  for (int i = -1; i <= n + n0 - 2; ++i) {
    const Rat ai = a(i);
    if (sgn(ai) != 0) {
      rhs = rhs - fe(n - i).scaled(ai);
    }
  }
  rhs = rhs + fe(-n0 + 3).scaled(b(n0 - 1));
  rhs = rhs + fe(-n0 + 2).scaled(par.a_m1 * b(n0 - 1));
  rhs = rhs + fe(-n0).scaled(b(n0 + 2) + par.a_m1 * b(n0 + 1) + par.a_1 * b(n0 - 1));
  const QSeries lhs = require(fk, n + 2).rewindowed(lo, cap);
  return lhs == rhs.rewindowed(lo, cap);
}

QSeries genfun_constant_difference(int p, int prec) {
  check_genus_one(p);
  const WeakBasis f0 = weak_basis(p, 0, Space::M, 2, prec);
  const WeakBasis g0 = weak_basis(p, 0, Space::S, 2, prec);
  return f0.element(2) - g0.element(2);
}

} // namespace weakforms
