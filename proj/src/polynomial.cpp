#include "nccr/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nccr {

namespace {

void sort_combine(std::vector<Term>& ts, const TermOrder& o, const PolynomialRing& R) {
  std::sort(ts.begin(), ts.end(),
            [&](const Term& x, const Term& y) { return o.less(y.m, x.m, R); });
  std::vector<Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(std::move(t));
    }
  }
  ts = std::move(out);
}

}  // namespace

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    fail(Errc::RingMismatch, "operands live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.ts_.push_back({Monomial(ring->arity()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  Monomial m(ring->arity());
  m.e[i] = 1;
  return term(std::move(ring), std::move(m), Rational(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.ts_.push_back({std::move(m), c});
  return p;
}

const Term& Polynomial::leading() const {
  if (ts_.empty()) fail(Errc::Internal, "leading term of zero polynomial");
  return ts_.front();
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& t : ts_) d = std::max(d, wdeg(t.m, *ring_));
  return d;
}

long Polynomial::order_at_origin() const {
  if (ts_.empty()) return -1;
  long d = wdeg(ts_[0].m, *ring_);
  for (const auto& t : ts_) d = std::min(d, wdeg(t.m, *ring_));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (ts_.empty()) return true;
  long d = wdeg(ts_[0].m, *ring_);
  for (const auto& t : ts_)
    if (wdeg(t.m, *ring_) != d) return false;
  return true;
}

long Polynomial::weight() const {
  if (ts_.empty()) fail(Errc::NoGrading, "weight of zero polynomial");
  long w = tweight(ts_[0].m, *ring_);
  for (const auto& t : ts_)
    if (tweight(t.m, *ring_) != w)
      fail(Errc::NoGrading, "polynomial mixes torus weights");
  return w;
}

bool Polynomial::is_isoweight() const {
  if (ts_.empty()) return true;
  long w = tweight(ts_[0].m, *ring_);
  for (const auto& t : ts_)
    if (tweight(t.m, *ring_) != w) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.ts_) t.c = -t.c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(*this, o);
  *this = poly_add(*this, o, TermOrder::grevlex());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(*this, o);
  *this = poly_add(*this, -o, TermOrder::grevlex());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  std::map<Monomial, Rational> acc;
  for (const auto& ta : a.ts_)
    for (const auto& tb : b.ts_) acc[mono_mul(ta.m, tb.m)] += ta.c * tb.c;
  r.ts_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.ts_.push_back({m, c});
  sort_combine(r.ts_, TermOrder::grevlex(), *a.ring_);
  return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    ts_.clear();
    return *this;
  }
  for (auto& t : ts_) t.c *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ts_.size() != b.ts_.size()) return false;
  for (std::size_t i = 0; i < a.ts_.size(); ++i)
    if (a.ts_[i].m != b.ts_[i].m || a.ts_[i].c != b.ts_[i].c) return false;
  return true;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) fail(Errc::NonIntegerExponent, "negative exponent");
  Polynomial r = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Polynomial& Polynomial::mul_term(const Monomial& m, const Rational& c) {
  if (c == 0) {
    ts_.clear();
    return *this;
  }
  for (auto& t : ts_) {
    t.m = mono_mul(t.m, m);
    t.c *= c;
  }
  return *this;
}

Polynomial& Polynomial::make_monic() {
  if (!ts_.empty()) {
    Rational inv = Rational(1) / ts_.front().c;
    for (auto& t : ts_) t.c *= inv;
  }
  return *this;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(ring_);
  for (const auto& t : ts_) {
    if (t.m.e[var] == 0) continue;
    Term d = t;
    d.c *= t.m.e[var];
    d.m.e[var] -= 1;
    r.ts_.push_back(std::move(d));
  }
  sort_combine(r.ts_, TermOrder::grevlex(), *ring_);
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != ring_->arity())
    fail(Errc::RingMismatch, "evaluation point has wrong arity");
  Rational total(0);
  for (const auto& t : ts_) {
    Rational v = t.c;
    for (int i = 0; i < ring_->arity(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->arity())
    fail(Errc::RingMismatch, "substitution needs one image per variable");
  Polynomial r = Polynomial::zero(target);
  for (const auto& t : ts_) {
    Polynomial v = Polynomial::constant(target, t.c);
    for (int i = 0; i < ring_->arity(); ++i)
      if (t.m.e[i] > 0) v = v * images[i].pow(t.m.e[i]);
    r += v;
  }
  return r;
}

Polynomial Polynomial::extend(const RingPtr& target) const {
  if (target->arity() < ring_->arity())
    fail(Errc::RingMismatch, "target ring too small");
  Polynomial r(target);
  for (const auto& t : ts_) {
    Monomial m(target->arity());
    std::copy(t.m.e.begin(), t.m.e.end(), m.e.begin());
    r.ts_.push_back({std::move(m), t.c});
  }
  sort_combine(r.ts_, TermOrder::grevlex(), *target);
  return r;
}

Polynomial Polynomial::restrict_tail(const RingPtr& target, int block) const {
  if (target->arity() != ring_->arity() - block)
    fail(Errc::RingMismatch, "tail ring arity mismatch");
  Polynomial r(target);
  for (const auto& t : ts_) {
    for (int i = 0; i < block; ++i)
      if (t.m.e[i] != 0) fail(Errc::Internal, "polynomial involves eliminated variable");
    Monomial m(target->arity());
    std::copy(t.m.e.begin() + block, t.m.e.end(), m.e.begin());
    r.ts_.push_back({std::move(m), t.c});
  }
  sort_combine(r.ts_, TermOrder::grevlex(), *target);
  return r;
}

void Polynomial::resort(const TermOrder& o) { sort_combine(ts_, o, *ring_); }

void Polynomial::set_terms(std::vector<Term> ts, const TermOrder& o) {
  ts_ = std::move(ts);
  sort_combine(ts_, o, *ring_);
}

std::string Polynomial::str() const {
  if (ts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts_) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool printed = false;
    if (c != 1 || t.m.is_one()) {
      os << to_string(c);
      printed = true;
    }
    for (int i = 0; i < ring_->arity(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->vars[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      printed = true;
    }
  }
  return os.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const TermOrder& o) {
  const auto& R = *a.ring();
  Polynomial r(a.ring());
  auto& out = r.mut_terms();
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].m == tb[j].m) {
      Rational c = ta[i].c + tb[j].c;
      if (c != 0) out.push_back({ta[i].m, std::move(c)});
      ++i, ++j;
    } else if (o.less(tb[j].m, ta[i].m, R)) {
      out.push_back(ta[i]);
      ++i;
    } else {
      out.push_back(tb[j]);
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  return r;
}

Polynomial poly_sub_mul(const Polynomial& a, const Monomial& m, const Rational& c,
                        const Polynomial& b, const TermOrder& o) {
  Polynomial scaled = b;
  scaled.mul_term(m, -c);
  return poly_add(a, scaled, o);
}

}  // namespace nccr
