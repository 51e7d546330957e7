#include "nccr/hilbert.hpp"

#include <algorithm>

#include "nccr/errors.hpp"

namespace nccr {

void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool zp_is_zero(const ZPoly& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zp_trim(r);
  return r;
}

ZPoly zp_shift(const ZPoly& a, int k) {
  if (a.empty()) return {};
  ZPoly r(a.size() + k, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

BigInt zp_eval_one(const ZPoly& a) {
  BigInt s(0);
  for (const auto& c : a) s += c;
  return s;
}

int one_minus_t_multiplicity(ZPoly p, ZPoly* reduced) {
  zp_trim(p);
  int mult = 0;
  while (!p.empty() && zp_eval_one(p) == 0) {
    // p = (1-t) q  =>  q_k = sum_{i<=k} p_i
    ZPoly q(p.size() - 1, BigInt(0));
    BigInt acc(0);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      acc += p[k];
      q[k] = acc;
    }
    p = std::move(q);
    zp_trim(p);
    ++mult;
  }
  if (reduced) *reduced = std::move(p);
  return mult;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(),
            [](const Monomial& a, const Monomial& b) { return a.total() < b.total(); });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& k : out)
      if (mono_divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

ZPoly numerator_rec(std::vector<Monomial> gens, const std::vector<int>& degs) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {BigInt(1)};
  if (gens[0].is_one()) return {};
  // Split off the last generator m: N(I + m) = N(I) - t^{deg m} N(I : m).
  Monomial m = gens.back();
  gens.pop_back();
  long d = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i) d += static_cast<long>(degs[i]) * m.e[i];
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(mono_div(g, mono_gcd(g, m)));
  ZPoly base = numerator_rec(gens, degs);
  ZPoly quot = numerator_rec(std::move(colon), degs);
  return zp_sub(base, zp_shift(quot, static_cast<int>(d)));
}

}  // namespace

ZPoly monomial_quotient_numerator(std::vector<Monomial> gens, const std::vector<int>& degs) {
  return numerator_rec(std::move(gens), degs);
}

std::vector<BigInt> series_coefficients(const ZPoly& numerator, const std::vector<int>& degs,
                                        int D) {
  std::vector<BigInt> c(D + 1, BigInt(0));
  for (std::size_t i = 0; i < numerator.size() && i <= static_cast<std::size_t>(D); ++i)
    c[i] = numerator[i];
  // Multiply by each geometric series 1/(1-t^d).
  for (int d : degs)
    for (int k = d; k <= D; ++k) c[k] += c[k - d];
  return c;
}

int krull_dimension_from_numerator(const ZPoly& numerator, int num_vars) {
  if (zp_is_zero(numerator)) return -1;
  return num_vars - one_minus_t_multiplicity(numerator);
}

int palindrome_sign(const ZPoly& q) {
  ZPoly p = q;
  zp_trim(p);
  if (p.empty()) return 0;
  bool plus = true, minus = true;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] != p[n - 1 - i]) plus = false;
    if (p[i] != -p[n - 1 - i]) minus = false;
  }
  if (plus) return 1;
  if (minus) return -1;
  return 0;
}

}  // namespace nccr
