#pragma once

#include <string>
#include <vector>

#include "nccr/monomial.hpp"
#include "nccr/rational.hpp"
#include "nccr/ring.hpp"
#include "nccr/term_order.hpp"

namespace nccr {

struct Term {
  Monomial m;
  Rational c;
};

// Exact multivariate polynomial over Q.  Terms are kept sorted strictly
// descending under an ambient order — grevlex everywhere except inside the
// basis engines, which resort to their working order and restore grevlex on
// exit.  The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }
  bool is_constant() const { return ts_.empty() || (ts_.size() == 1 && ts_[0].m.is_one()); }
  std::size_t size() const { return ts_.size(); }

  const Term& leading() const;
  const Monomial& lm() const { return leading().m; }
  const Rational& lc() const { return leading().c; }

  // Maximum weighted degree over all terms; -1 for zero.
  long degree() const;
  // Minimum weighted degree (order of vanishing at the origin for the
  // standard grading); -1 for zero.
  long order_at_origin() const;
  bool is_homogeneous() const;
  // Torus weight when every term has the same weight; fails otherwise.
  long weight() const;
  bool is_isoweight() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(int k) const;
  // Multiply by a single term in place (keeps any ambient order).
  Polynomial& mul_term(const Monomial& m, const Rational& c);
  Polynomial& make_monic();

  Polynomial derivative(int var) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Image under x_i -> images[i] in the target ring.
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;
  // Same polynomial read in a ring with extra trailing variables.
  Polynomial extend(const RingPtr& target) const;
  // Drop the first `block` variables (all exponents there must vanish).
  Polynomial restrict_tail(const RingPtr& target, int block) const;

  // Re-sort terms descending under `o`; callers must keep one order per
  // computation.
  void resort(const TermOrder& o);

  std::string str() const;

  // Raw access for the engines.
  std::vector<Term>& mut_terms() { return ts_; }
  void set_terms(std::vector<Term> ts, const TermOrder& o);

 private:
  RingPtr ring_;
  std::vector<Term> ts_;
};

// Merge-add of vectors sorted descending under `o`.
Polynomial poly_add(const Polynomial& a, const Polynomial& b, const TermOrder& o);
// a - (m*c)*b, all sorted under `o`; the cancellation step of division.
Polynomial poly_sub_mul(const Polynomial& a, const Monomial& m, const Rational& c,
                        const Polynomial& b, const TermOrder& o);

void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace nccr
