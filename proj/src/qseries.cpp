#include "weakforms/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace weakforms {

std::string to_string(const Rat &r) { return r.get_str(); }

Rat parse_rat(const std::string &text) {
  Rat r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw DomainError("malformed rational: " + text);
  }
  r.canonicalize();
  return r;
}

Rat ratio(long num, long den) {
  if (den == 0) {
    throw DomainError("zero denominator");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

// Writes s = (1/den) * nums with integer nums and the least positive den.
mpz_class integer_scaling(std::span<const Rat> coeffs, std::vector<mpz_class> &nums) {
  mpz_class den = 1;
  for (const auto &c : coeffs) {
    if (c.get_den() != 1) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  nums.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (den == 1) {
      nums[i] = coeffs[i].get_num();
    } else {
      mpz_divexact(nums[i].get_mpz_t(), den.get_mpz_t(), coeffs[i].get_den_mpz_t());
      nums[i] *= coeffs[i].get_num();
    }
  }
  return den;
}

std::vector<Rat> rationals_over(std::vector<mpz_class> &nums, const mpz_class &den) {
  std::vector<Rat> out(nums.size());
  for (std::size_t i = 0; i < nums.size(); ++i) {
    mpz_swap(out[i].get_num_mpz_t(), nums[i].get_mpz_t());
    if (den != 1) {
      out[i].get_den() = den;
      out[i].canonicalize();
    }
  }
  return out;
}

} // namespace

QSeries::QSeries(int min_exp, std::vector<Rat> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw PrecisionError("series window must be nonempty (prec_cap > min_exp)");
  }
}

QSeries QSeries::zero(int min_exp, int prec_cap) {
  if (prec_cap <= min_exp) {
    throw PrecisionError("series window must be nonempty (prec_cap > min_exp)");
  }
  return QSeries(min_exp, std::vector<Rat>(static_cast<std::size_t>(prec_cap - min_exp)));
}

QSeries QSeries::one(int prec_cap) { return monomial(0, 1, prec_cap); }

QSeries QSeries::monomial(int exp, const Rat &c, int prec_cap) {
  auto s = zero(exp, prec_cap);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::from_terms(int min_exp, int prec_cap,
                            std::initializer_list<std::pair<int, Rat>> terms) {
  auto s = zero(min_exp, prec_cap);
  for (const auto &[e, c] : terms) {
    if (e < min_exp || e >= prec_cap) {
      throw PrecisionError("term outside series window");
    }
    s.coeffs_[static_cast<std::size_t>(e - min_exp)] += c;
  }
  return s;
}

const Rat &QSeries::coeff(int n) const {
  if (n < min_exp_ || n >= prec_cap()) {
    throw PrecisionError("coefficient not computed at this precision (q^" + std::to_string(n) +
                         ", window [" + std::to_string(min_exp_) + ", " +
                         std::to_string(prec_cap()) + "))");
  }
  return coeffs_[static_cast<std::size_t>(n - min_exp_)];
}

Rat QSeries::coeff_or_zero(int n) const {
  if (n < min_exp_) {
    return 0;
  }
  return coeff(n);
}

std::optional<int> QSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) {
      return min_exp_ + static_cast<int>(i);
    }
  }
  return std::nullopt;
}

bool QSeries::is_zero() const { return !valuation().has_value(); }

QSeries QSeries::truncated(int cap) const {
  if (cap >= prec_cap()) {
    return *this;
  }
  return rewindowed(min_exp_, cap);
}

QSeries QSeries::rewindowed(int lo, int cap) const {
  if (cap > prec_cap()) {
    throw PrecisionError("cannot extend a series beyond its precision");
  }
  if (cap <= lo) {
    throw PrecisionError("series window must be nonempty (prec_cap > min_exp)");
  }
  for (int n = min_exp_; n < std::min(lo, cap); ++n) {
    if (sgn(coeff(n)) != 0) {
      throw PrecisionError("re-windowing would drop a nonzero coefficient");
    }
  }
  std::vector<Rat> out(static_cast<std::size_t>(cap - lo));
  for (int n = std::max(lo, min_exp_); n < cap; ++n) {
    out[static_cast<std::size_t>(n - lo)] = coeffs_[static_cast<std::size_t>(n - min_exp_)];
  }
  return QSeries(lo, std::move(out));
}

QSeries QSeries::shifted(int s) const { return QSeries(min_exp_ + s, coeffs_); }

QSeries QSeries::scaled(const Rat &c) const {
  auto out = coeffs_;
  for (auto &x : out) {
    x *= c;
  }
  return QSeries(min_exp_, std::move(out));
}

bool operator==(const QSeries &a, const QSeries &b) {
  return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

namespace {

QSeries combine(const QSeries &a, const QSeries &b, bool subtract) {
  if (std::max(a.min_exp(), b.min_exp()) >= std::min(a.prec_cap(), b.prec_cap())) {
    throw PrecisionError("incompatible precision windows");
  }
  const int lo = std::min(a.min_exp(), b.min_exp());
  const int cap = std::min(a.prec_cap(), b.prec_cap());
  std::vector<Rat> out(static_cast<std::size_t>(cap - lo));
  for (int n = lo; n < cap; ++n) {
    auto &c = out[static_cast<std::size_t>(n - lo)];
    if (n >= a.min_exp()) {
      c = a.coeff(n);
    }
    if (n >= b.min_exp()) {
      if (subtract) {
        c -= b.coeff(n);
      } else {
        c += b.coeff(n);
      }
    }
  }
  return QSeries(lo, std::move(out));
}

} // namespace

QSeries operator+(const QSeries &a, const QSeries &b) { return combine(a, b, false); }
QSeries operator-(const QSeries &a, const QSeries &b) { return combine(a, b, true); }
QSeries operator-(const QSeries &a) { return a.scaled(-1); }
QSeries operator*(const Rat &c, const QSeries &a) { return a.scaled(c); }

QSeries multiply(const QSeries &a, const QSeries &b, int cap) {
  const int lo = a.min_exp() + b.min_exp();
  const int natural = std::min(a.min_exp() + b.prec_cap(), b.min_exp() + a.prec_cap());
  const int hi = std::min(natural, cap);
  if (hi <= lo) {
    throw PrecisionError("product window is empty");
  }
  const auto len = static_cast<std::size_t>(hi - lo);
  std::vector<mpz_class> an, bn;
  const mpz_class ad = integer_scaling(a.coefficients(), an);
  const mpz_class bd = integer_scaling(b.coefficients(), bn);
  std::vector<mpz_class> prod(len);
  for (std::size_t i = 0; i < std::min(len, an.size()); ++i) {
    if (sgn(an[i]) == 0) {
      continue;
    }
    const std::size_t jmax = std::min(len - i, bn.size());
    for (std::size_t j = 0; j < jmax; ++j) {
      if (sgn(bn[j]) != 0) {
        mpz_addmul(prod[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
      }
    }
  }
  return QSeries(lo, rationals_over(prod, ad * bd));
}

QSeries operator*(const QSeries &a, const QSeries &b) {
  return multiply(a, b, std::min(a.min_exp() + b.prec_cap(), b.min_exp() + a.prec_cap()));
}

QSeries inverse(const QSeries &a) {
  if (sgn(a.coeff(a.min_exp())) == 0) {
    throw DomainError("non-invertible series");
  }
  // a = q^e (1/den) sum A_i q^i with integer A_i. With C_n = A_0^{n+1} inv(A)_n:
  // C_0 = 1, C_n = -sum_{i=1}^n A_i A_0^{i-1} C_{n-i}.
  std::vector<mpz_class> num;
  const mpz_class den = integer_scaling(a.coefficients(), num);
  const std::size_t len = num.size();
  const mpz_class a0 = num[0];
  std::vector<mpz_class> scaled_terms(len); // A_i A_0^{i-1}
  mpz_class pw = 1;
  for (std::size_t i = 1; i < len; ++i) {
    scaled_terms[i] = num[i] * pw;
    pw *= a0;
  }
  std::vector<mpz_class> c(len);
  c[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (sgn(scaled_terms[i]) != 0) {
        mpz_submul(c[n].get_mpz_t(), scaled_terms[i].get_mpz_t(), c[n - i].get_mpz_t());
      }
    }
  }
  std::vector<Rat> out(len);
  mpz_class a0pow = a0;
  for (std::size_t n = 0; n < len; ++n) {
    out[n] = Rat(c[n] * den, a0pow);
    out[n].canonicalize();
    a0pow *= a0;
  }
  return QSeries(-a.min_exp(), std::move(out));
}

QSeries divide(const QSeries &a, const QSeries &b) { return a * inverse(b); }

QSeries power(const QSeries &a, int e) {
  if (e < 0) {
    return inverse(power(a, -e));
  }
  // Precision of a^e with the multiplication rule, computed by squaring.
  QSeries result = QSeries::one(a.prec_cap() - a.min_exp());
  QSeries base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1;
    if (e > 0) {
      base = base * base;
    }
  }
  return result;
}

QSeries v_operator(const QSeries &a, int d) {
  if (d < 1) {
    throw DomainError("V operator needs d >= 1");
  }
  const int lo = d * a.min_exp();
  const int cap = d * a.prec_cap();
  std::vector<Rat> out(static_cast<std::size_t>(cap - lo));
  for (int n = a.min_exp(); n < a.prec_cap(); ++n) {
    out[static_cast<std::size_t>(d * n - lo)] = a.coeff(n);
  }
  return QSeries(lo, std::move(out));
}

std::string to_string(const QSeries &s, int max_terms) {
  std::ostringstream os;
  int shown = 0;
  for (int n = s.min_exp(); n < s.prec_cap() && shown < max_terms; ++n) {
    const Rat &c = s.coeff(n);
    if (sgn(c) == 0) {
      continue;
    }
    if (shown > 0) {
      os << (sgn(c) < 0 ? " - " : " + ");
    } else if (sgn(c) < 0) {
      os << "-";
    }
    const Rat mag = abs(c);
    if (n == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) {
        os << mag.get_str() << "*";
      }
      os << "q";
      if (n != 1) {
        os << "^" << n;
      }
    }
    ++shown;
  }
  if (shown == 0) {
    os << "0";
  }
  os << " + O(q^" << s.prec_cap() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

BiSeries::BiSeries(int z_min, std::vector<QSeries> rows) : z_min_(z_min), rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw PrecisionError("bi-series needs z_cap > z_min");
  }
  for (const auto &r : rows_) {
    if (r.min_exp() != rows_.front().min_exp() || r.prec_cap() != rows_.front().prec_cap()) {
      throw PrecisionError("bi-series rows must share one tau-window");
    }
  }
}

const QSeries &BiSeries::row(int m) const {
  if (m < z_min_ || m >= z_cap()) {
    throw PrecisionError("z-exponent " + std::to_string(m) + " outside bi-series window");
  }
  return rows_[static_cast<std::size_t>(m - z_min_)];
}

Rat BiSeries::coeff(int m, int n) const {
  if (m < z_min_) {
    return 0;
  }
  return row(m).coeff_or_zero(n);
}

std::vector<std::pair<int, int>> BiSeries::nonzero_positions(int z_last, int tau_last) const {
  std::vector<std::pair<int, int>> out;
  for (int m = z_min_; m < std::min(z_cap(), z_last + 1); ++m) {
    const auto &r = row(m);
    for (int n = r.min_exp(); n < std::min(r.prec_cap(), tau_last + 1); ++n) {
      if (sgn(r.coeff(n)) != 0) {
        out.emplace_back(m, n);
      }
    }
  }
  return out;
}

BiSeries bi_combine(const std::map<int, QSeries> &rows, std::optional<int> z_cap) {
  if (rows.empty()) {
    throw PrecisionError("bi-series needs at least one row");
  }
  const int zlo = rows.begin()->first;
  const int zcap = z_cap.value_or(rows.rbegin()->first + 1);
  if (zcap <= rows.rbegin()->first) {
    throw PrecisionError("z_cap below the largest row exponent");
  }
  int tlo = rows.begin()->second.min_exp();
  int tcap = rows.begin()->second.prec_cap();
  for (const auto &[m, s] : rows) {
    tlo = std::min(tlo, s.min_exp());
    tcap = std::min(tcap, s.prec_cap());
  }
  if (tcap <= tlo) {
    throw PrecisionError("incompatible precision windows");
  }
  std::vector<QSeries> out;
  out.reserve(static_cast<std::size_t>(zcap - zlo));
  for (int m = zlo; m < zcap; ++m) {
    auto it = rows.find(m);
    out.push_back(it == rows.end() ? QSeries::zero(tlo, tcap) : it->second.rewindowed(tlo, tcap));
  }
  return BiSeries(zlo, std::move(out));
}

BiSeries bi_mul(const BiSeries &f, const QSeries &s) {
  const int lo = f.z_min() + s.min_exp();
  const int cap = std::min(f.z_min() + s.prec_cap(), s.min_exp() + f.z_cap());
  const auto width = static_cast<std::size_t>(f.tau_cap() - f.tau_min());
  std::vector<QSeries> out;
  for (int m = lo; m < cap; ++m) {
    std::vector<Rat> acc_coeffs(width);
    for (int j = s.min_exp(); j < s.prec_cap(); ++j) {
      const int src = m - j;
      if (src < f.z_min() || src >= f.z_cap() || sgn(s.coeff(j)) == 0) {
        continue;
      }
      const auto rc = f.row(src).coefficients();
      for (std::size_t i = 0; i < rc.size(); ++i) {
        if (sgn(rc[i]) != 0) {
          acc_coeffs[i] += s.coeff(j) * rc[i];
        }
      }
    }
    out.emplace_back(f.tau_min(), std::move(acc_coeffs));
  }
  return BiSeries(lo, std::move(out));
}

BiSeries bi_mul_tau(const BiSeries &f, const QSeries &s) {
  std::vector<QSeries> out;
  out.reserve(f.rows().size());
  for (const auto &r : f.rows()) {
    out.push_back(r * s);
  }
  return BiSeries(f.z_min(), std::move(out));
}

namespace {

BiSeries bi_combine_rows(const BiSeries &f, const BiSeries &g, bool subtract) {
  if (std::max(f.z_min(), g.z_min()) >= std::min(f.z_cap(), g.z_cap())) {
    throw PrecisionError("incompatible precision windows");
  }
  const int lo = std::min(f.z_min(), g.z_min());
  const int cap = std::min(f.z_cap(), g.z_cap());
  std::vector<QSeries> out;
  for (int m = lo; m < cap; ++m) {
    const QSeries a = m >= f.z_min() ? f.row(m) : QSeries::zero(f.tau_min(), f.tau_cap());
    const QSeries b = m >= g.z_min() ? g.row(m) : QSeries::zero(g.tau_min(), g.tau_cap());
    out.push_back(subtract ? a - b : a + b);
  }
  return BiSeries(lo, std::move(out));
}

} // namespace

BiSeries bi_add(const BiSeries &f, const BiSeries &g) { return bi_combine_rows(f, g, false); }
BiSeries bi_sub(const BiSeries &f, const BiSeries &g) { return bi_combine_rows(f, g, true); }

BiSeries bi_outer(const QSeries &z_part, const QSeries &tau_part) {
  std::vector<QSeries> out;
  for (int m = z_part.min_exp(); m < z_part.prec_cap(); ++m) {
    out.push_back(tau_part.scaled(z_part.coeff(m)));
  }
  return BiSeries(z_part.min_exp(), std::move(out));
}

} // namespace weakforms
