#include "nccr/singularity.hpp"

namespace nccr {

namespace {

void check_vanishing(const Polynomial& f) {
  for (const auto& t : f.terms())
    if (t.m.is_one()) fail(Errc::NotVanishingAtOrigin, "constant term present");
}

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> J;
  for (int i = 0; i < f.ring()->arity(); ++i) J.push_back(f.derivative(i));
  return J;
}

std::optional<BigInt> local_quotient_dim(const std::vector<Polynomial>& gens,
                                         const EngineLimits& lim) {
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (all_zero) return std::nullopt;
  GroebnerBasis sb = groebner(gens, TermOrder::local_ds(), lim);
  return quotient_dimension(sb, lim);
}

}  // namespace

std::optional<BigInt> milnor_number(const Polynomial& f, const EngineLimits& lim) {
  check_vanishing(f);
  return local_quotient_dim(jacobian(f), lim);
}

std::optional<BigInt> tyurina_number(const Polynomial& f, const EngineLimits& lim) {
  check_vanishing(f);
  std::vector<Polynomial> gens = jacobian(f);
  gens.push_back(f);
  return local_quotient_dim(gens, lim);
}

SingularityReport quasi_homogeneity_test(const Polynomial& f, const EngineLimits& lim) {
  SingularityReport rep;
  rep.milnor = milnor_number(f, lim);
  rep.tyurina = tyurina_number(f, lim);
  if (!rep.milnor) fail(Errc::NonIsolated, "Milnor number is infinite");
  if (rep.milnor && rep.tyurina)
    rep.quasi_homogeneous = (*rep.milnor == *rep.tyurina);
  return rep;
}

}  // namespace nccr
