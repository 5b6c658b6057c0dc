#include "weakforms/classical.hpp"

#include <mutex>

namespace weakforms {

namespace {

// prod_{n >= 1} (1 - q^n) on [0, cap) from the pentagonal number theorem.
std::vector<mpz_class> euler_product(int cap) {
  std::vector<mpz_class> out(static_cast<std::size_t>(cap));
  for (int j = 0;; ++j) {
    const long a = static_cast<long>(j) * (3L * j - 1) / 2;
    if (a >= cap) {
      break;
    }
    const int sign = (j % 2 == 0) ? 1 : -1;
    out[static_cast<std::size_t>(a)] += sign;
    const long b = static_cast<long>(j) * (3L * j + 1) / 2;
    if (j > 0 && b < cap) {
      out[static_cast<std::size_t>(b)] += sign;
    }
  }
  return out;
}

QSeries from_integers(int min_exp, std::vector<mpz_class> nums) {
  std::vector<Rat> c(nums.size());
  for (std::size_t i = 0; i < nums.size(); ++i) {
    mpz_swap(c[i].get_num_mpz_t(), nums[i].get_mpz_t());
  }
  return QSeries(min_exp, std::move(c));
}

mpz_class mpz_pow(long base, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

} // namespace

QSeries eta_quotient_expand(std::span<const EtaFactor> factors, int prec_cap) {
  long weight2 = 0;
  long order24 = 0;
  for (const auto &f : factors) {
    if (f.d < 1) {
      throw DomainError("eta factor needs d >= 1");
    }
    weight2 += f.r;
    order24 += static_cast<long>(f.d) * f.r;
  }
  if (weight2 % 2 != 0 || order24 % 24 != 0) {
    throw DomainError("fractional eta quotient unsupported");
  }
  const int e = static_cast<int>(order24 / 24);
  const int len = prec_cap - e;
  if (len <= 0) {
    throw PrecisionError("precision cap below the leading exponent");
  }
  QSeries acc = QSeries::one(len);
  for (const auto &f : factors) {
    if (f.r == 0) {
      continue;
    }
    const int inner = (len + f.d - 1) / f.d;
    QSeries base = from_integers(0, euler_product(inner));
    QSeries part = v_operator(power(base, f.r), f.d).truncated(len);
    acc = acc * part;
  }
  return acc.shifted(e);
}

Rat bernoulli(int n) {
  if (n < 0) {
    throw DomainError("Bernoulli index must be >= 0");
  }
  static std::mutex guard;
  static std::vector<Rat> table{Rat(1)};
  std::lock_guard lock(guard);
  while (static_cast<int>(table.size()) <= n) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    const int m = static_cast<int>(table.size());
    Rat s = 0;
    mpz_class binom = 1;
    for (int j = 0; j < m; ++j) {
      s += binom * table[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    table.push_back(-s / (m + 1));
  }
  return table[static_cast<std::size_t>(n)];
}

std::vector<mpz_class> divisor_sums(int j, int cap) {
  std::vector<mpz_class> s(static_cast<std::size_t>(std::max(cap, 1)));
  for (int d = 1; d < cap; ++d) {
    const mpz_class dj = mpz_pow(d, static_cast<unsigned>(j));
    for (int n = d; n < cap; n += d) {
      s[static_cast<std::size_t>(n)] += dj;
    }
  }
  return s;
}

namespace {

// 1 - (2k / B_k) sum sigma_{k-1}(n) q^n, also used for k = 2.
QSeries eisenstein_any(int k, int prec_cap) {
  if (prec_cap < 1) {
    throw PrecisionError("precision cap must be positive");
  }
  const Rat scale = -Rat(2 * k) / bernoulli(k);
  auto sig = divisor_sums(k - 1, prec_cap);
  std::vector<Rat> c(static_cast<std::size_t>(prec_cap));
  c[0] = 1;
  for (int n = 1; n < prec_cap; ++n) {
    c[static_cast<std::size_t>(n)] = scale * sig[static_cast<std::size_t>(n)];
  }
  return QSeries(0, std::move(c));
}

} // namespace

QSeries eisenstein(int k, int prec_cap) {
  if (k < 4 || k % 2 != 0) {
    throw DomainError("eisenstein needs even k >= 4");
  }
  return eisenstein_any(k, prec_cap);
}

QSeries eisenstein_level_p(int k, int p, int prec_cap) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("eisenstein_level_p needs even k >= 2");
  }
  const QSeries ek = eisenstein_any(k, prec_cap);
  const QSeries ekp = v_operator(ek.truncated((prec_cap + p - 1) / p), p).truncated(prec_cap);
  return (Rat(p) * ekp - ek).scaled(ratio(1, p - 1));
}

QSeries delta_p_power(int p, int e, int prec_cap) {
  if (p <= 3) {
    throw DomainError("fractional eta quotient unsupported");
  }
  const EtaFactor f[] = {{p, 2 * p * e}, {1, -2 * e}};
  return eta_quotient_expand(f, prec_cap);
}

QSeries delta_p(int p, int prec_cap) { return delta_p_power(p, 1, prec_cap); }

QSeries delta(int prec_cap) {
  const EtaFactor f[] = {{1, 24}};
  return eta_quotient_expand(f, prec_cap);
}

} // namespace weakforms
