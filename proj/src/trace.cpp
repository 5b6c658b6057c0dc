#include "weakforms/trace.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "weakforms/spaces.hpp"

namespace weakforms {

namespace {

// 6 H(D) for 0 < D <= limit, by enumerating reduced forms (a, b, c) with
// |b| <= a <= c, b >= 0 when |b| = a or a = c.
class HurwitzTable {
public:
  long six_h(long d) {
    if (d > limit_) {
      grow(std::max(d, 2 * limit_));
    }
    return table_[static_cast<std::size_t>(d)];
  }

private:
  void grow(long limit) {
    std::vector<long> t(static_cast<std::size_t>(limit + 1), 0);
    for (long a = 1; 3 * a * a <= limit; ++a) {
      for (long b = -a; b <= a; ++b) {
        for (long c = a;; ++c) {
          const long d = 4 * a * c - b * b;
          if (d > limit) {
            break;
          }
          if (b < 0 && (-b == a || a == c)) {
            continue;
          }
          long w = 6;
          if (a == b && b == c) {
            w = 2;
          } else if (b == 0 && a == c) {
            w = 3;
          }
          t[static_cast<std::size_t>(d)] += w;
        }
      }
    }
    table_ = std::move(t);
    limit_ = limit;
  }

  long limit_ = 0;
  std::vector<long> table_{0};
};

HurwitzTable &hurwitz_table() {
  static HurwitzTable table;
  return table;
}

std::mutex &hurwitz_mutex() {
  static std::mutex m;
  return m;
}

long six_hurwitz(long d) {
  std::lock_guard lock(hurwitz_mutex());
  return hurwitz_table().six_h(d);
}

long isqrt(long n) {
  auto r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) {
    --r;
  }
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

// Traces of T_n on S_k(p) for every even k <= kmax, cached per n.
class TraceEngine {
public:
  explicit TraceEngine(int p) : p_(p) {
    squares_.assign(static_cast<std::size_t>(p), 0);
    for (int x = 1; x < p; ++x) {
      squares_[static_cast<std::size_t>(x * x % p)] = 1;
    }
  }

  mpz_class trace(int k, long n) {
    if (k > kmax_) {
      kmax_ = std::max(k, kmax_ + 8);
      cache_.clear();
    }
    auto &slot = cache_[n];
    if (slot.empty()) {
      slot = compute(n);
    }
    return slot[static_cast<std::size_t>(k / 2 - 1)];
  }

private:
  int legendre(long a) const {
    long r = a % p_;
    if (r < 0) {
      r += p_;
    }
    if (r == 0) {
      return 0;
    }
    return squares_[static_cast<std::size_t>(r)] ? 1 : -1;
  }

  bool unit(long a) const { return a % p_ != 0; }

  // Entry j holds Tr T_n at weight 2j + 2.
  std::vector<mpz_class> compute(long n) {
    const int slots = kmax_ / 2;
    std::vector<mpz_class> acc(static_cast<std::size_t>(slots)); // 12 Tr
    const long p = p_;
    const long p2 = p * p;

    // Identity term.
    const long s = isqrt(n);
    if (s * s == n && unit(n)) {
      mpz_class pw = 1; // s^{k-2}
      for (int j = 0; j < slots; ++j) {
        const long k = 2 * j + 2;
        mpz_class term = pw * ((k - 1) * (p + 1));
        acc[static_cast<std::size_t>(j)] += term;
        pw *= s;
        pw *= s;
      }
    }

    // Elliptic terms, using P_k(-t, n) = P_k(t, n) for even k.
    const int degree = kmax_ - 2;
    std::vector<mpz_class> poly(static_cast<std::size_t>(degree + 1));
    for (long t = 0; t * t < 4 * n; ++t) {
      const long d = 4 * n - t * t;
      long c1;
      if (!unit(n)) {
        c1 = unit(t) ? 1 : 0;
      } else {
        c1 = 1 + legendre(t * t - 4 * n);
      }
      const long c2 = unit(t) ? 1 : 0;
      const long hd = six_hurwitz(d);
      long hprime = c1 * hd;
      if (d % p2 == 0) {
        const long hd2 = six_hurwitz(d / p2);
        hprime += (-c1 + (p + 1) * c2) * hd2;
      }
      if (hprime == 0) {
        continue;
      }
      const long mult = (t == 0 ? 1 : 2) * hprime;
      poly[0] = 1;
      if (degree >= 1) {
        poly[1] = t;
      }
      for (int j = 1; j < degree; ++j) {
        auto &next = poly[static_cast<std::size_t>(j + 1)];
        mpz_mul_si(next.get_mpz_t(), poly[static_cast<std::size_t>(j)].get_mpz_t(), t);
        mpz_submul_ui(next.get_mpz_t(), poly[static_cast<std::size_t>(j - 1)].get_mpz_t(),
                      static_cast<unsigned long>(n));
      }
      // 12 * (-1/2) * P * H' = -P * (6 H')
      for (int j = 0; j < slots; ++j) {
        const auto &pk = poly[static_cast<std::size_t>(2 * j)];
        if (mult > 0) {
          mpz_submul_ui(acc[static_cast<std::size_t>(j)].get_mpz_t(), pk.get_mpz_t(),
                        static_cast<unsigned long>(mult));
        } else {
          mpz_addmul_ui(acc[static_cast<std::size_t>(j)].get_mpz_t(), pk.get_mpz_t(),
                        static_cast<unsigned long>(-mult));
        }
      }
    }

    // Hyperbolic terms: -1/2 sum_{d | n} min(d, n/d)^{k-1} (chi(d) + chi(n/d)).
    for (long d = 1; d * d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      const long e = n / d;
      const long w = (unit(d) ? 1 : 0) + (unit(e) ? 1 : 0);
      const long copies = (d == e) ? 1 : 2;
      if (w == 0) {
        continue;
      }
      mpz_class pw = d; // d^{k-1}
      for (int j = 0; j < slots; ++j) {
        mpz_submul_ui(acc[static_cast<std::size_t>(j)].get_mpz_t(), pw.get_mpz_t(),
                      static_cast<unsigned long>(6 * w * copies));
        pw *= d;
        pw *= d;
      }
    }

    // Weight-2 correction.
    long extra = 0;
    for (long t = 1; t <= n; ++t) {
      if (n % t == 0 && unit(n / t)) {
        extra += t;
      }
    }
    acc[0] += 12 * extra;

    for (auto &x : acc) {
      if (!mpz_divisible_ui_p(x.get_mpz_t(), 12)) {
        throw std::logic_error("trace formula produced a non-integer trace");
      }
      mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 12);
    }
    return acc;
  }

  int p_;
  int kmax_ = 0;
  std::vector<char> squares_;
  std::map<long, std::vector<mpz_class>> cache_;
};

std::mutex &engine_mutex() {
  static std::mutex m;
  return m;
}

mpz_class engine_trace(int p, int k, long n) {
  static std::map<int, std::unique_ptr<TraceEngine>> engines;
  std::lock_guard lock(engine_mutex());
  auto &e = engines[p];
  if (!e) {
    e = std::make_unique<TraceEngine>(p);
    // Warm start wide enough for every weight the weak bases need.
    e->trace(std::max(k, p + 3 - (p + 3) % 2), 1);
  }
  return e->trace(k, n);
}

void check_args(int p, int k) {
  if (p <= 3 || !linalg::is_prime(static_cast<std::uint64_t>(p))) {
    throw DomainError("level must be a prime > 3");
  }
  if (k < 2 || k % 2 != 0) {
    throw DomainError("weight must be even and >= 2");
  }
}

mpz_class product_trace(int p, int k, long m, long n) {
  mpz_class total = 0;
  const long g = std::gcd(m, n);
  for (long d = 1; d <= g; ++d) {
    if (g % d != 0 || d % p == 0) {
      continue;
    }
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
    total += dk * engine_trace(p, k, m / d * (n / d));
  }
  return total;
}

} // namespace

Rat hurwitz(long m) {
  if (m < 0) {
    throw DomainError("hurwitz needs m >= 0");
  }
  if (m == 0) {
    return Rat(-1, 12);
  }
  Rat r(six_hurwitz(m), 6);
  r.canonicalize();
  return r;
}

Rat trace_tn(int p, int k, long n) {
  check_args(p, k);
  if (n < 1) {
    throw DomainError("Hecke index must be >= 1");
  }
  return Rat(engine_trace(p, k, n));
}

Rat trace_product(int p, int k, long m, long n) {
  check_args(p, k);
  if (m < 1 || n < 1) {
    throw DomainError("Hecke indices must be >= 1");
  }
  return Rat(product_trace(p, k, m, n));
}

TraceTable trace_table(int p, int k, int count) {
  TraceTable t{p, k, {}};
  for (long n = 1; n <= count; ++n) {
    t.traces.push_back(trace_tn(p, k, n));
  }
  return t;
}

std::vector<linalg::IntRow> cusp_generators(int p, int k, int prec_cap) {
  check_args(p, k);
  const int target = dim_S(p, k);
  std::vector<linalg::IntRow> rows;
  if (target == 0) {
    return rows;
  }
  const auto width = static_cast<std::size_t>(prec_cap);
  linalg::ModularEchelon tracker(linalg::working_prime(0), width);
  int stall = 0;
  for (long m = 1; static_cast<int>(tracker.rank()) < target; ++m) {
    linalg::IntRow row(width);
    for (int n = 1; n < prec_cap; ++n) {
      row[static_cast<std::size_t>(n)] = product_trace(p, k, m, n);
    }
    if (tracker.add(row)) {
      rows.push_back(std::move(row));
      stall = 0;
    } else if (++stall >= 2 * target) {
      throw RankError("cusp space generation failed: rank " + std::to_string(tracker.rank()) +
                      " of " + std::to_string(target));
    }
  }
  return rows;
}

EchelonBasis cusp_space(int p, int k, int prec_cap) {
  const auto rows = cusp_generators(p, k, prec_cap);
  EchelonBasis b;
  b.p = p;
  b.k = k;
  b.space = Space::S;
  b.prec_cap = prec_cap;
  if (rows.empty()) {
    return b;
  }
  auto r = linalg::rref(std::span<const linalg::IntRow>(rows));
  b.pivots = r.pivots;
  for (auto &row : r.rows) {
    b.elements.emplace_back(0, std::move(row));
  }
  return b;
}

} // namespace weakforms
