#pragma once

#include "nccr/monomial.hpp"
#include "nccr/ring.hpp"

namespace nccr {

// Monomial orders.  Grevlex and Lex are global (1 smallest); LocalDs is the
// degree-anticompatible order used for computations at the origin (1 largest);
// ElimGrevlex eliminates the first `block` variables.
struct TermOrder {
  enum class Kind { Grevlex, Lex, LocalDs, ElimGrevlex };

  Kind kind = Kind::Grevlex;
  int block = 0;  // ElimGrevlex: size of the eliminated leading block

  static TermOrder grevlex() { return {Kind::Grevlex, 0}; }
  static TermOrder lex() { return {Kind::Lex, 0}; }
  static TermOrder local_ds() { return {Kind::LocalDs, 0}; }
  static TermOrder elim(int block) { return {Kind::ElimGrevlex, block}; }

  bool global() const { return kind != Kind::LocalDs; }

  // Strict comparison: true when a < b in this order.
  bool less(const Monomial& a, const Monomial& b, const PolynomialRing& R) const;

  bool equal_name(const TermOrder& o) const { return kind == o.kind && block == o.block; }
  const char* name() const;
};

}  // namespace nccr
