#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nccr/errors.hpp"

namespace nccr {

// Ambient commutative polynomial ring k[x_1..x_n] over the rationals.
// `degs` is the positive N-grading used for term orders, homogeneity and
// Hilbert functions (all 1 for a standard ring, total monomial degrees for
// the toric rings k[Y]). `weights` is the optional torus Z-grading.
struct PolynomialRing {
  std::vector<std::string> vars;
  std::vector<int> degs;
  std::optional<std::vector<long>> weights;

  int arity() const { return static_cast<int>(vars.size()); }

  std::optional<int> var_index(const std::string& name) const {
    for (int i = 0; i < arity(); ++i)
      if (vars[i] == name) return i;
    return std::nullopt;
  }
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

inline RingPtr make_ring(std::vector<std::string> vars, std::vector<int> degs = {},
                         std::optional<std::vector<long>> weights = std::nullopt) {
  auto r = std::make_shared<PolynomialRing>();
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) fail(Errc::SyntaxError, "duplicate variable name " + vars[i]);
  if (degs.empty()) degs.assign(vars.size(), 1);
  if (degs.size() != vars.size()) fail(Errc::Internal, "degree vector arity mismatch");
  for (int d : degs)
    if (d <= 0) fail(Errc::Internal, "variable degrees must be positive");
  if (weights && weights->size() != vars.size())
    fail(Errc::NoGrading, "weight vector arity mismatch");
  r->vars = std::move(vars);
  r->degs = std::move(degs);
  r->weights = std::move(weights);
  return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars && a->degs == b->degs && a->weights == b->weights;
}

// Engine guard rails. Exceeding one raises CapExceeded, never a silent
// truncation.
struct EngineLimits {
  int max_arity = 12;
  std::size_t max_basis = 10000;
  int max_degree = 64;
};

}  // namespace nccr
