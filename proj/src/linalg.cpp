#include "weakforms/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace weakforms::linalg {

Modulus::Modulus(std::uint64_t p) : p_(p), m_(~std::uint64_t{0} / p) {
  if (p < 3 || p >= (std::uint64_t{1} << 31)) {
    throw DomainError("modulus must be an odd prime below 2^31");
  }
}

std::uint64_t Modulus::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p_;
  while (e > 0) {
    if (e & 1) {
      r = mul(r, a);
    }
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Modulus::inv(std::uint64_t a) const { return pow(a, p_ - 2); }

std::uint64_t Modulus::of(const mpz_class &x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p_));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) {
      return n == d;
    }
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e > 0) {
      if (e & 1) {
        r = mulmod(r, a);
      }
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

std::uint64_t working_prime(std::size_t i) {
  static std::mutex guard;
  static std::vector<std::uint64_t> cache;
  std::lock_guard lock(guard);
  std::uint64_t candidate = cache.empty() ? (std::uint64_t{1} << 31) - 1 : cache.back() - 2;
  while (cache.size() <= i) {
    if (is_prime(candidate)) {
      cache.push_back(candidate);
    }
    candidate -= 2;
  }
  return cache[i];
}

IntRow primitive_integer_row(std::span<const Rat> row) {
  mpz_class den = 1;
  for (const auto &c : row) {
    if (c.get_den() != 1) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  IntRow out(row.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), row[i].get_den_mpz_t());
    out[i] *= row[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto &x : out) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
  return out;
}

namespace {

struct ModRref {
  std::vector<int> pivots;
  std::vector<std::vector<std::uint64_t>> rows;
};

ModRref rref_mod(std::span<const IntRow> rows, std::size_t ncols, const Modulus &mod) {
  std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < ncols; ++c) {
      if (sgn(rows[i][c]) != 0) {
        a[i][c] = mod.of(rows[i][c]);
      }
    }
  }
  ModRref out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) {
      ++piv;
    }
    if (piv == a.size()) {
      continue;
    }
    std::swap(a[piv], a[rank]);
    auto &prow = a[rank];
    const std::uint64_t scale = mod.inv(prow[c]);
    for (std::size_t j = c; j < ncols; ++j) {
      prow[j] = mod.mul(prow[j], scale);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) {
        continue;
      }
      const std::uint64_t f = mod.value() - a[i][c];
      auto &row = a[i];
      for (std::size_t j = c; j < ncols; ++j) {
        if (prow[j] != 0) {
          row[j] = mod.reduce(row[j] + f * prow[j]);
        }
      }
    }
    out.pivots.push_back(static_cast<int>(c));
    ++rank;
  }
  a.resize(rank);
  out.rows = std::move(a);
  return out;
}

// -1: a is a better pivot profile than b, 0 equal, 1 worse.
int compare_profiles(const std::vector<int> &a, const std::vector<int> &b) {
  if (a.size() != b.size()) {
    return a.size() > b.size() ? -1 : 1;
  }
  if (a == b) {
    return 0;
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? -1 : 1;
}

// Rational n/d with |n|, d <= sqrt(M/2) and n/d == x mod M.
bool rational_reconstruct(const mpz_class &x, const mpz_class &modulus, const mpz_class &bound,
                          Rat &out) {
  if (x <= bound) {
    out = x;
    return true;
  }
  if (modulus - x <= bound) {
    out = x - modulus;
    return true;
  }
  mpz_class r0 = modulus, r1 = x, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_qr(q.get_mpz_t(), tmp.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    r0.swap(r1);
    r1.swap(tmp);
    tmp = t0 - q * t1;
    t0.swap(t1);
    t1.swap(tmp);
  }
  if (sgn(t1) == 0 || abs(t1) > bound) {
    return false;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) {
    return false;
  }
  out = Rat(r1, t1);
  out.canonicalize();
  return true;
}

struct Lift {
  std::vector<int> pivots;
  std::vector<std::pair<std::size_t, std::size_t>> free; // (row, col) of non-pivot entries
  std::vector<mpz_class> residues;
  mpz_class modulus = 1;
  std::size_t primes = 0;

  void reset(const ModRref &m, std::size_t ncols) {
    pivots = m.pivots;
    free.clear();
    std::vector<char> is_pivot(ncols, 0);
    for (int c : pivots) {
      is_pivot[static_cast<std::size_t>(c)] = 1;
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (std::size_t c = static_cast<std::size_t>(pivots[i]) + 1; c < ncols; ++c) {
        if (!is_pivot[c]) {
          free.emplace_back(i, c);
        }
      }
    }
    residues.assign(free.size(), 0);
    modulus = 1;
    primes = 0;
  }

  void absorb(const ModRref &m, const Modulus &mod) {
    const std::uint64_t p = mod.value();
    const std::uint64_t minv = mod.inv(mod.of(modulus));
    for (std::size_t e = 0; e < free.size(); ++e) {
      const auto [i, c] = free[e];
      const std::uint64_t r = m.rows[i][c];
      const std::uint64_t cur = mod.of(residues[e]);
      if (cur == r) {
        continue;
      }
      const std::uint64_t t = mod.mul(mod.sub(r, cur), minv);
      mpz_addmul_ui(residues[e].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
    }
    modulus *= static_cast<unsigned long>(p);
    ++primes;
  }
};

bool verify(std::span<const IntRow> input, const Rref &r, std::size_t ncols) {
  mpz_class lcm = 1;
  for (const auto &row : r.rows) {
    for (const auto &x : row) {
      if (x.get_den() != 1) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
      }
    }
  }
  std::vector<IntRow> scaled(r.rows.size(), IntRow(ncols));
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    for (std::size_t c = 0; c < ncols; ++c) {
      const auto &x = r.rows[i][c];
      if (sgn(x) != 0) {
        mpz_divexact(scaled[i][c].get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        scaled[i][c] *= x.get_num();
      }
    }
  }
  IntRow acc(ncols);
  mpz_class lhs;
  for (const auto &row : input) {
    for (auto &x : acc) {
      x = 0;
    }
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const auto &coef = row[static_cast<std::size_t>(r.pivots[i])];
      if (sgn(coef) == 0) {
        continue;
      }
      for (std::size_t c = static_cast<std::size_t>(r.pivots[i]); c < ncols; ++c) {
        if (sgn(scaled[i][c]) != 0) {
          mpz_addmul(acc[c].get_mpz_t(), coef.get_mpz_t(), scaled[i][c].get_mpz_t());
        }
      }
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      lhs = row[c] * lcm;
      if (lhs != acc[c]) {
        return false;
      }
    }
  }
  return true;
}

bool reconstruct(const Lift &lift, std::size_t ncols, bool sample_only, Rref &out) {
  mpz_class bound;
  mpz_class half = lift.modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  if (sample_only) {
    // Last free entry of each row tends to be the largest.
    Rat tmp;
    for (std::size_t e = 0; e < lift.free.size(); ++e) {
      const bool last_in_row = e + 1 == lift.free.size() || lift.free[e + 1].first != lift.free[e].first;
      if (last_in_row && !rational_reconstruct(lift.residues[e], lift.modulus, bound, tmp)) {
        return false;
      }
    }
    return true;
  }
  out.pivots = lift.pivots;
  out.rows.assign(lift.pivots.size(), RatRow(ncols));
  for (std::size_t i = 0; i < lift.pivots.size(); ++i) {
    out.rows[i][static_cast<std::size_t>(lift.pivots[i])] = 1;
  }
  for (std::size_t e = 0; e < lift.free.size(); ++e) {
    const auto [i, c] = lift.free[e];
    if (!rational_reconstruct(lift.residues[e], lift.modulus, bound, out.rows[i][c])) {
      return false;
    }
  }
  return true;
}

} // namespace

Rref rref(std::span<const IntRow> rows) {
  std::vector<IntRow> work;
  for (const auto &r : rows) {
    if (std::any_of(r.begin(), r.end(), [](const mpz_class &x) { return sgn(x) != 0; })) {
      work.push_back(r);
    }
  }
  if (work.empty()) {
    return {};
  }
  const std::size_t ncols = work.front().size();
  for (const auto &r : work) {
    if (r.size() != ncols) {
      throw DomainError("rref rows must have equal length");
    }
  }
  Lift lift;
  bool have = false;
  std::size_t next_check = 1;
  constexpr std::size_t max_primes = 20000;
  for (std::size_t pi = 0; pi < max_primes; ++pi) {
    const Modulus mod(working_prime(pi));
    ModRref m = rref_mod(work, ncols, mod);
    const int cmp = have ? compare_profiles(m.pivots, lift.pivots) : -1;
    if (cmp > 0) {
      continue;
    }
    if (cmp < 0) {
      lift.reset(m, ncols);
      have = true;
      next_check = 1;
    }
    lift.absorb(m, mod);
    if (lift.primes < next_check) {
      continue;
    }
    next_check = std::max(next_check + 1, next_check * 3 / 2);
    Rref out;
    if (!reconstruct(lift, ncols, true, out) || !reconstruct(lift, ncols, false, out)) {
      continue;
    }
    if (verify(work, out, ncols)) {
      return out;
    }
  }
  throw RankError("modular echelon form did not stabilise");
}

Rref rref(std::span<const RatRow> rows) {
  std::vector<IntRow> ints;
  ints.reserve(rows.size());
  for (const auto &r : rows) {
    ints.push_back(primitive_integer_row(r));
  }
  return rref(std::span<const IntRow>(ints));
}

ModularEchelon::ModularEchelon(std::uint64_t prime, std::size_t ncols) : mod_(prime), ncols_(ncols) {}

bool ModularEchelon::add(std::span<const mpz_class> row) {
  if (row.size() != ncols_) {
    throw DomainError("row length mismatch");
  }
  std::vector<std::uint64_t> v(ncols_);
  for (std::size_t c = 0; c < ncols_; ++c) {
    v[c] = mod_.of(row[c]);
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t pc = pivots_[i];
    if (v[pc] == 0) {
      continue;
    }
    const std::uint64_t f = mod_.value() - v[pc];
    for (std::size_t c = pc; c < ncols_; ++c) {
      if (rows_[i][c] != 0) {
        v[c] = mod_.reduce(v[c] + f * rows_[i][c]);
      }
    }
  }
  auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
  if (it == v.end()) {
    return false;
  }
  const auto pc = static_cast<std::size_t>(it - v.begin());
  const std::uint64_t scale = mod_.inv(v[pc]);
  for (std::size_t c = pc; c < ncols_; ++c) {
    v[c] = mod_.mul(v[c], scale);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pc);
  return true;
}

} // namespace weakforms::linalg
