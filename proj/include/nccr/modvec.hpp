#pragma once

#include <string>
#include <vector>

#include "nccr/polynomial.hpp"

namespace nccr {

struct ModTerm {
  int comp;
  Monomial m;
  Rational c;
};

// Element of a free module R^rank.  Terms sorted descending TOP (term over
// position): monomials compared by the ambient order, ties broken toward the
// lower component.
class ModVec {
 public:
  ModVec() = default;
  ModVec(RingPtr ring, int rank) : ring_(std::move(ring)), rank_(rank) {}

  static ModVec unit(RingPtr ring, int rank, int comp);
  static ModVec term(RingPtr ring, int rank, int comp, Monomial m, const Rational& c);
  // Column vector from per-component polynomials.
  static ModVec from_entries(const std::vector<Polynomial>& entries);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  bool is_zero() const { return ts_.empty(); }
  const std::vector<ModTerm>& terms() const { return ts_; }
  std::vector<ModTerm>& mut_terms() { return ts_; }

  const ModTerm& leading() const;

  ModVec& mul_term(const Monomial& m, const Rational& c);
  ModVec& scale(const Rational& c);
  ModVec& make_monic();
  ModVec operator-() const;

  // Polynomial sitting in one component.
  Polynomial component(int comp) const;
  // Degree of a term under free-module shifts; homogeneity check.
  bool is_homogeneous(const std::vector<long>& shifts) const;
  long degree(const std::vector<long>& shifts) const;

  void resort(const TermOrder& o);
  std::string str() const;

 private:
  RingPtr ring_;
  int rank_ = 0;
  std::vector<ModTerm> ts_;
};

bool modterm_less(const ModTerm& a, const ModTerm& b, const TermOrder& o,
                  const PolynomialRing& R);

ModVec mod_add(const ModVec& a, const ModVec& b, const TermOrder& o);
// a - (c·m)·b
ModVec mod_sub_mul(const ModVec& a, const Monomial& m, const Rational& c,
                   const ModVec& b, const TermOrder& o);
// a - p·b for a full polynomial p
ModVec mod_sub_poly_mul(const ModVec& a, const Polynomial& p, const ModVec& b,
                        const TermOrder& o);

struct ModuleGB {
  RingPtr ring;
  TermOrder order;
  int rank = 0;
  std::vector<ModVec> gens;
  // Generators of the full syzygy module of the *input* vectors, present only
  // when tracking was requested.  Rank = number of inputs.
  std::vector<ModVec> syzygies;
};

// Buchberger completion in a free module.  With track_syzygies the input
// vectors all stay in the basis and no pair criteria are applied, which makes
// the collected zero-reduction witnesses generate the whole syzygy module.
ModuleGB module_groebner(const std::vector<ModVec>& F, const TermOrder& o,
                         bool track_syzygies, const EngineLimits& lim = {});

ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& G,
                          const TermOrder& o, const EngineLimits& lim = {});
bool module_contains(const ModuleGB& gb, const ModVec& v, const EngineLimits& lim = {});

}  // namespace nccr
