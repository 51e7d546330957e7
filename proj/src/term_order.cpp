#include "nccr/term_order.hpp"

namespace nccr {

namespace {

// grevlex on a contiguous variable range [lo, hi): compare weighted degree,
// then reverse lexicographically on the *last* variable where the exponents
// differ (the monomial with the larger exponent there is smaller).
int cmp_grevlex_range(const Monomial& a, const Monomial& b, const PolynomialRing& R,
                      int lo, int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += static_cast<long>(R.degs[i]) * a.e[i];
    db += static_cast<long>(R.degs[i]) * b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.arity(); ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool TermOrder::less(const Monomial& a, const Monomial& b, const PolynomialRing& R) const {
  const int n = R.arity();
  switch (kind) {
    case Kind::Grevlex:
      return cmp_grevlex_range(a, b, R, 0, n) < 0;
    case Kind::Lex:
      return cmp_lex(a, b) < 0;
    case Kind::LocalDs: {
      // ds: lower total degree is *larger*; ties broken by grevlex.
      long da = wdeg(a, R), db = wdeg(b, R);
      if (da != db) return da > db;
      return cmp_grevlex_range(a, b, R, 0, n) < 0;
    }
    case Kind::ElimGrevlex: {
      int c = cmp_grevlex_range(a, b, R, 0, block);
      if (c != 0) return c < 0;
      return cmp_grevlex_range(a, b, R, block, n) < 0;
    }
  }
  return false;
}

const char* TermOrder::name() const {
  switch (kind) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::LocalDs: return "ds";
    case Kind::ElimGrevlex: return "elim";
  }
  return "?";
}

}  // namespace nccr
