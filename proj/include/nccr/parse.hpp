#pragma once

#include <string>
#include <vector>

#include "nccr/polynomial.hpp"

namespace nccr {

// Parse "3*x^2*y - 1/2*z + 4" over the given ring.  Multiplication is always
// explicit; exponents are nonnegative integer literals; '/' only divides by a
// nonzero rational constant.  Unknown identifiers are an error.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring);

}  // namespace nccr
