#pragma once

#include <optional>
#include <vector>

#include "nccr/polynomial.hpp"

namespace nccr {

// Monic generating set whose leading terms generate the leading-term ideal.
// For global orders the basis is reduced; for the local order it is a weak
// (head-reduced) standard basis.
struct GroebnerBasis {
  RingPtr ring;
  TermOrder order;
  std::vector<Polynomial> gens;
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // one per divisor, f = sum q_i g_i + r
};

// Multivariate division for global orders; every term of the remainder is
// outside the leading-term ideal of G.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G,
                      const TermOrder& o, const EngineLimits& lim = {});
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& o, const EngineLimits& lim = {});

// Mora weak normal form for the local order: returns h with uf = sum q_i g_i + h
// for a unit u, and LT(h) outside LT(G) when h is nonzero.
Polynomial local_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                             const TermOrder& o, const EngineLimits& lim = {});

// Buchberger / Mora completion under the given order.
GroebnerBasis groebner(std::vector<Polynomial> F, const TermOrder& o,
                       const EngineLimits& lim = {});

// Full remainder modulo a computed basis (weak normal form when local).
Polynomial reduce(const GroebnerBasis& gb, const Polynomial& f,
                  const EngineLimits& lim = {});
bool contains(const GroebnerBasis& gb, const Polynomial& f, const EngineLimits& lim = {});

// k-dimension of R/I (local order: of the local quotient); nullopt = infinite.
std::optional<BigInt> quotient_dimension(const GroebnerBasis& gb,
                                         const EngineLimits& lim = {});

// Krull dimension of R/I via maximal independent variable sets of LT(I).
int krull_dimension(const GroebnerBasis& gb);

// Generators of I ∩ k[x_block, ..., x_{n-1}] expressed in the tail ring.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, int block,
                                  const RingPtr& tail, const EngineLimits& lim = {});

// Monomials below the staircase of LT(gb), i.e. a monomial k-basis of the
// quotient; fails when infinite.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb,
                                         const EngineLimits& lim = {});

}  // namespace nccr
