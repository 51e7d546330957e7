#pragma once

#include <vector>

#include "nccr/monomial.hpp"
#include "nccr/rational.hpp"

namespace nccr {

// Dense integer polynomial in one variable t; coeffs[k] is the t^k
// coefficient.  Used for exact Hilbert-series numerators.
using ZPoly = std::vector<BigInt>;

void zp_trim(ZPoly& p);
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_shift(const ZPoly& a, int k);  // multiply by t^k
bool zp_is_zero(const ZPoly& a);
BigInt zp_eval_one(const ZPoly& a);

// Largest e with (1-t)^e dividing p; also returns p/(1-t)^e.
int one_minus_t_multiplicity(ZPoly p, ZPoly* reduced = nullptr);

// Numerator of the Hilbert series of R/(monomial ideal) over the denominator
// prod_i (1 - t^{deg_i}), via the colon-ideal recursion.
ZPoly monomial_quotient_numerator(std::vector<Monomial> gens, const std::vector<int>& degs);

// Coefficients 0..D of Q(t) / prod_i (1 - t^{deg_i}).
std::vector<BigInt> series_coefficients(const ZPoly& numerator, const std::vector<int>& degs,
                                        int D);

// Krull dimension = pole order at t=1 of Q(t)/prod(1-t^{deg_i}); -1 for the
// zero module.
int krull_dimension_from_numerator(const ZPoly& numerator, int num_vars);

// Palindromy up to sign: reverse(Q) == sign * Q with sign in {+1,-1}; 0 if
// neither.
int palindrome_sign(const ZPoly& q);

}  // namespace nccr
