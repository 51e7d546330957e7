#pragma once

// Independent cross-checks used by the unit and acceptance suites.  Each
// oracle recomputes a quantity through plain linear algebra or exhaustive
// enumeration, sharing no code path with the library engines.

#include <array>
#include <cstdint>
#include <vector>

#include "nccr/delpezzo.hpp"
#include "nccr/invariants.hpp"
#include "nccr/polynomial.hpp"

namespace oracle {

using nccr::BigInt;
using nccr::Monomial;
using nccr::Polynomial;
using nccr::Rational;

// ------------------------------------------------------------ linear algebra

inline int rank_q(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int cc = c; cc < cols; ++cc) m[i][cc] -= f * m[r][cc];
    }
    ++r;
  }
  return r;
}

inline int rank_modp(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = (__int128)r * b % p;
      b = (__int128)b * b % p;
      e >>= 1;
    }
    return r;
  };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] % p != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    std::int64_t w = inv(((m[r][c] % p) + p) % p);
    for (int i = r + 1; i < rows; ++i) {
      std::int64_t f = ((m[i][c] % p) + p) % p;
      if (f == 0) continue;
      f = (__int128)f * w % p;
      for (int cc = c; cc < cols; ++cc) {
        m[i][cc] = (m[i][cc] % p - (__int128)f * (m[r][cc] % p) % p + (std::int64_t)p * p) % p;
      }
    }
    ++r;
  }
  return r;
}

// ------------------------------------------- sections through fat points

// Monomial exponents of total degree exactly d in three variables.
inline std::vector<std::array<int, 3>> plane_monomials(int d) {
  std::vector<std::array<int, 3>> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

// h0 of O(dH - sum m_i E_i) on the plane blown up in the points
// (1 : r_i : r_i^3), r_i the first p primes: dimension of degree-d forms
// with an order-m_i zero at each point, by exact rank computation.
inline long long h0_fat_points(int d, const std::vector<long>& mult) {
  if (d < 0) return 0;
  static const long primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
  auto monos = plane_monomials(d);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    long m = mult[i];
    if (m <= 0) continue;
    BigInt r(primes[i]);
    // one row per derivative order alpha with |alpha| < m
    for (int a0 = 0; a0 < m; ++a0)
      for (int a1 = 0; a0 + a1 < m; ++a1)
        for (int a2 = 0; a0 + a1 + a2 < m; ++a2) {
          std::vector<Rational> row;
          row.reserve(monos.size());
          for (const auto& mo : monos) {
            if (mo[0] < a0 || mo[1] < a1 || mo[2] < a2) {
              row.emplace_back(0);
              continue;
            }
            BigInt coef = 1;
            for (int k = 0; k < a0; ++k) coef *= (mo[0] - k);
            for (int k = 0; k < a1; ++k) coef *= (mo[1] - k);
            for (int k = 0; k < a2; ++k) coef *= (mo[2] - k);
            BigInt val;  // x^(e0) y^(e1) z^(e2) at (1, r, r^3)
            mpz_pow_ui(val.get_mpz_t(), r.get_mpz_t(),
                       static_cast<unsigned long>((mo[1] - a1) + 3 * (mo[2] - a2)));
            row.emplace_back(Rational(coef * val));
          }
          rows.push_back(std::move(row));
        }
  }
  return static_cast<long long>(monos.size()) - rank_q(std::move(rows));
}

// Engine-facing wrapper: divisor vector (d, e_1, .., e_p) in the (H, E_i)
// basis; a positive e_i adds a vacuous condition.
inline long long h0_oracle(const nccr::DivisorClass& d) {
  std::vector<long> mult;
  for (std::size_t i = 1; i < d.size(); ++i) mult.push_back(-d[i]);
  return h0_fat_points(static_cast<int>(d[0]), mult);
}

// ------------------------------------------------- local quotient dimension

// Monomials of degree < bound in `arity` variables, lexicographic listing.
inline void bounded_monomials(int arity, int bound, std::vector<std::vector<int>>& out,
                              std::vector<int>& cur, int pos, int used) {
  if (pos == arity) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; used + e < bound; ++e) {
    cur[pos] = e;
    bounded_monomials(arity, bound, out, cur, pos + 1, used + e);
  }
  cur[pos] = 0;
}

// dim k[x]/(gens + m^bound) over Z/p: matches the local quotient dimension
// once the truncation passes the ideal's locally contained power of m.
inline long long truncated_quotient_dim(const std::vector<Polynomial>& gens, int bound,
                                        std::int64_t p) {
  const int n = gens.front().ring()->arity();
  std::vector<std::vector<int>> monos;
  std::vector<int> cur(n, 0);
  bounded_monomials(n, bound, monos, cur, 0, 0);
  auto col_of = [&](const std::vector<int>& e) -> int {
    int lo = 0, hi = static_cast<int>(monos.size());
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (monos[mid] < e) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return (lo < static_cast<int>(monos.size()) && monos[lo] == e) ? lo : -1;
  };
  std::vector<std::vector<std::int64_t>> span;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& shift : monos) {
      std::vector<std::int64_t> row(monos.size(), 0);
      bool any = false;
      for (const auto& t : g.terms()) {
        std::vector<int> e = shift;
        int total = 0;
        for (int i = 0; i < n; ++i) {
          e[i] += t.m.e[i];
          total += e[i];
        }
        if (total >= bound) continue;
        int c = col_of(e);
        // numerator/denominator reduced mod p
        BigInt num_mod(t.c.get_num() % BigInt(p));
        BigInt den_mod(t.c.get_den() % BigInt(p));
        std::int64_t num = num_mod.get_si();
        std::int64_t den = den_mod.get_si();
        std::int64_t dinv = 1, b = ((den % p) + p) % p, ex = p - 2;
        while (ex) {
          if (ex & 1) dinv = (__int128)dinv * b % p;
          b = (__int128)b * b % p;
          ex >>= 1;
        }
        row[c] = ((num % p) * dinv % p + p) % p;
        any = true;
      }
      if (any) span.push_back(std::move(row));
    }
  }
  return static_cast<long long>(monos.size()) - rank_modp(std::move(span), p);
}

// Stabilized truncation: the reported value equals dim k[x]_0 / (gens) once
// two consecutive truncations agree (checked over two primes).
inline long long local_dim_oracle(const std::vector<Polynomial>& gens) {
  long long prev = -1;
  for (int bound = 4; bound <= 16; bound += 2) {
    long long a = truncated_quotient_dim(gens, bound, 1000003);
    long long b = truncated_quotient_dim(gens, bound, 2000003);
    if (a != b) {
      prev = -1;
      continue;
    }
    if (a == prev) return a;
    prev = a;
  }
  return -1;  // did not stabilize: treat as failure in the caller
}

// -------------------------------------------------- weight-space enumeration

inline void wsd_walk(const std::vector<int>& w, int pos, int left, int acc, long long& count,
                     int target) {
  if (pos == static_cast<int>(w.size())) {
    if (left == 0 && acc == target) ++count;
    return;
  }
  for (int e = 0; e <= left; ++e) wsd_walk(w, pos + 1, left - e, acc + e * w[pos], count, target);
}

// Number of degree-d monomials of torus weight a, by full enumeration.
inline long long wsd_enumerated(const std::vector<int>& w, int a, int d) {
  long long count = 0;
  wsd_walk(w, 0, d, 0, count, a);
  return count;
}

// -------------------------------------------- homogeneous ideal membership

// Exact span test in the degree-deg(f) graded piece of the ideal generated
// by homogeneous `gens`.
inline bool member_by_span(const std::vector<Polynomial>& gens, const Polynomial& f) {
  if (f.is_zero()) return true;
  const auto ring = f.ring();
  const int n = ring->arity();
  const int d = static_cast<int>(f.degree());
  std::vector<std::vector<int>> monos;
  std::vector<int> cur(n, 0);
  bounded_monomials(n, d + 1, monos, cur, 0, 0);
  auto col_of = [&](const std::vector<int>& e) -> int {
    int lo = 0, hi = static_cast<int>(monos.size());
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (monos[mid] < e) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  };
  auto to_row = [&](const Polynomial& g, const std::vector<int>& shift) {
    std::vector<Rational> row(monos.size(), Rational(0));
    for (const auto& t : g.terms()) {
      std::vector<int> e = shift;
      for (int i = 0; i < n; ++i) e[i] += t.m.e[i];
      row[col_of(e)] += t.c;
    }
    return row;
  };
  std::vector<std::vector<Rational>> span;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int gd = static_cast<int>(g.degree());
    if (gd > d) continue;
    std::vector<std::vector<int>> shifts;
    std::vector<int> c2(n, 0);
    bounded_monomials(n, d - gd + 1, shifts, c2, 0, 0);
    for (const auto& s : shifts) {
      int total = 0;
      for (int v : s) total += v;
      if (total != d - gd) continue;
      span.push_back(to_row(g, s));
    }
  }
  int base = rank_q(span);
  std::vector<int> zero(n, 0);
  span.push_back(to_row(f, zero));
  return rank_q(std::move(span)) == base;
}

}  // namespace oracle
