#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nccr/ring.hpp"

namespace nccr {

// Exponent vector; arity always matches the owning ring.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int arity) : e(arity, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int arity() const { return static_cast<int>(e.size()); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  int total() const { return std::accumulate(e.begin(), e.end(), 0); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // Container ordering only; term orders live in TermOrder.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (int i = 0; i < b.arity(); ++i) r.e[i] += b.e[i];
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.arity(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (int i = 0; i < b.arity(); ++i) r.e[i] -= b.e[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (int i = 0; i < b.arity(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (int i = 0; i < b.arity(); ++i) r.e[i] = std::min(r.e[i], b.e[i]);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.arity(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

// Degree in the ring's N-grading.
inline long wdeg(const Monomial& m, const PolynomialRing& R) {
  long d = 0;
  for (int i = 0; i < m.arity(); ++i) d += static_cast<long>(R.degs[i]) * m.e[i];
  return d;
}

// Torus weight; requires the ring to carry weights.
inline long tweight(const Monomial& m, const PolynomialRing& R) {
  if (!R.weights) fail(Errc::NoGrading, "ring has no weight vector");
  long w = 0;
  for (int i = 0; i < m.arity(); ++i) w += (*R.weights)[i] * m.e[i];
  return w;
}

}  // namespace nccr
