#include "weakforms/spaces.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "weakforms/classical.hpp"
#include "weakforms/linalg.hpp"
#include "weakforms/trace.hpp"

namespace weakforms {

std::string to_string(Space s) { return s == Space::M ? "M" : "S"; }

Space parse_space(const std::string &text) {
  if (text == "M" || text == "m") {
    return Space::M;
  }
  if (text == "S" || text == "s") {
    return Space::S;
  }
  throw DomainError("space must be M or S, got " + text);
}

namespace {

void check_level(int p) {
  if (p <= 3 || !linalg::is_prime(static_cast<std::uint64_t>(p))) {
    throw DomainError("level must be a prime > 3");
  }
}

void check_weight(int k) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("weight must be even and >= 2");
  }
}

} // namespace

int genus(int p) {
  if (!linalg::is_prime(static_cast<std::uint64_t>(p))) {
    throw DomainError("level must be prime");
  }
  const int g = (p + 1) / 12;
  return p % 12 == 1 ? g - 1 : g;
}

int dim_S(int p, int k) {
  check_level(p);
  check_weight(k);
  const int g = genus(p);
  if (k == 2) {
    return g;
  }
  int d = g * k - (g + 1);
  switch (p % 12) {
  case 1:
    d += 2 * (k / 3) + 2 * (k / 4);
    break;
  case 5:
    d += 2 * (k / 4);
    break;
  case 7:
    d += 2 * (k / 3);
    break;
  default:
    break;
  }
  return d;
}

int dim_E(int p, int k) {
  check_level(p);
  check_weight(k);
  return k == 2 ? 1 : 2;
}

int dim_M(int p, int k) { return dim_S(p, k) + dim_E(p, k); }

int lambda_p(int p) {
  check_level(p);
  return (p * p - 1) / 12;
}

int precision_floor(int p, int k) {
  return (k * (p + 1) + 11) / 12 + lambda_p(p) + 8;
}

namespace {

linalg::IntRow series_row(const QSeries &s, int prec_cap) {
  const QSeries t = s.truncated(prec_cap);
  return linalg::primitive_integer_row(t.coefficients());
}

EchelonBasis to_basis(int p, int k, Space space, int prec_cap, linalg::Rref r) {
  EchelonBasis b;
  b.p = p;
  b.k = k;
  b.space = space;
  b.prec_cap = prec_cap;
  b.pivots = std::move(r.pivots);
  for (auto &row : r.rows) {
    b.elements.emplace_back(0, std::move(row));
  }
  return b;
}

EchelonBasis truncate_basis(const EchelonBasis &b, int prec_cap) {
  EchelonBasis out = b;
  out.prec_cap = prec_cap;
  for (auto &e : out.elements) {
    e = e.truncated(prec_cap);
  }
  return out;
}

EchelonBasis compute_holo(int p, int k, Space space, int prec_cap) {
  auto rows = cusp_generators(p, k, prec_cap);
  if (space == Space::M) {
    if (k == 2) {
      rows.push_back(series_row(eisenstein_level_p(2, p, prec_cap), prec_cap));
    } else {
      const QSeries ek = eisenstein(k, prec_cap);
      rows.push_back(series_row(ek, prec_cap));
      rows.push_back(series_row(v_operator(ek.truncated((prec_cap + p - 1) / p), p), prec_cap));
    }
  }
  auto b = to_basis(p, k, space, prec_cap,
                    rows.empty() ? linalg::Rref{} : linalg::rref(std::span<const linalg::IntRow>(rows)));
  const int expected = space == Space::M ? dim_M(p, k) : dim_S(p, k);
  if (static_cast<int>(b.size()) != expected) {
    throw RankError("holomorphic basis has rank " + std::to_string(b.size()) + ", expected " +
                    std::to_string(expected));
  }
  return b;
}

} // namespace

EchelonBasis holo_basis(int p, int k, Space space, int prec_cap) {
  check_level(p);
  check_weight(k);
  if (prec_cap < precision_floor(p, k)) {
    throw PrecisionError("precision below the floor " + std::to_string(precision_floor(p, k)));
  }
  static std::mutex guard;
  static std::map<std::tuple<int, int, Space>, EchelonBasis> cache;
  const auto key = std::make_tuple(p, k, space);
  {
    std::lock_guard lock(guard);
    auto it = cache.find(key);
    if (it != cache.end() && it->second.prec_cap >= prec_cap) {
      return it->second.prec_cap == prec_cap ? it->second : truncate_basis(it->second, prec_cap);
    }
  }
  EchelonBasis b = compute_holo(p, k, space, prec_cap);
  std::lock_guard lock(guard);
  auto &slot = cache[key];
  if (slot.prec_cap < b.prec_cap) {
    slot = b;
  }
  return b;
}

std::vector<int> missing_orders(const std::vector<int> &pivots) {
  std::vector<int> miss;
  if (pivots.size() < 2) {
    return miss;
  }
  std::size_t i = 0;
  for (int n = pivots.front(); n < pivots.back(); ++n) {
    while (i < pivots.size() && pivots[i] < n) {
      ++i;
    }
    if (pivots[i] != n) {
      miss.push_back(n);
    }
  }
  return miss;
}

GapReport gap_sets(int p, int k) {
  const int cap = precision_floor(p, k);
  const auto m = holo_basis(p, k, Space::M, cap);
  const auto s = holo_basis(p, k, Space::S, cap);
  GapReport r;
  r.p = p;
  r.k = k;
  r.miss_m = missing_orders(m.pivots);
  r.miss_s = missing_orders(s.pivots);
  r.c_m = static_cast<int>(r.miss_m.size());
  r.c_s = static_cast<int>(r.miss_s.size());
  r.m_max = m.pivots.empty() ? 0 : m.pivots.back();
  r.s_max = s.pivots.empty() ? 0 : s.pivots.back();
  r.dim_m = static_cast<int>(m.size());
  r.dim_s = static_cast<int>(s.size());
  return r;
}

int alpha2(int w) { return w % 4 == 0 ? 0 : 1; }

int alpha3(int w) {
  switch (((w % 6) + 6) % 6) {
  case 2:
    return 2;
  case 4:
    return 1;
  default:
    return 0;
  }
}

Rat ahlgren_bound(int p, int k) {
  check_level(p);
  check_weight(k);
  if (p < std::max(5, k + 1)) {
    throw DomainError("bound hypothesis violated");
  }
  const int w = k * p;
  return ratio(w, 12) - ratio(alpha2(w), 2) - ratio(alpha3(w), 3);
}

int gap_count_bound(int p, int k) {
  check_level(p);
  check_weight(k);
  if (k > p - 1) {
    throw DomainError("gap count bound needs k <= p - 1");
  }
  int eps = 0;
  if ((p - k + 1) % 12 == 0) {
    eps = 1;
  } else if ((p - k - 1) % 12 == 0) {
    eps = -1;
  }
  return (p - k) / 12 + 1 + eps;
}

} // namespace weakforms
