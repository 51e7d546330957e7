#pragma once

#include <optional>

#include "nccr/ideal.hpp"

namespace nccr {

struct SingularityReport {
  std::optional<BigInt> milnor;   // nullopt = infinite (non-isolated)
  std::optional<BigInt> tyurina;  // nullopt = infinite
  std::optional<bool> quasi_homogeneous;
};

// Local quotient dimension by the partial-derivative ideal at the origin;
// nullopt when the singularity is not isolated.
std::optional<BigInt> milnor_number(const Polynomial& f, const EngineLimits& lim = {});

// Same with f itself added to the ideal.
std::optional<BigInt> tyurina_number(const Polynomial& f, const EngineLimits& lim = {});

// Full report; equality of the two numbers decides quasi-homogeneity for
// isolated singularities.
SingularityReport quasi_homogeneity_test(const Polynomial& f, const EngineLimits& lim = {});

}  // namespace nccr
