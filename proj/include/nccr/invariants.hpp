#pragma once

#include <map>
#include <vector>

#include "nccr/presentation.hpp"

namespace nccr {

// One-torus action on a polynomial ring: variable i scales with integer
// weight a_i.  The invariant ring R is spanned by the weight-0 monomials and
// the weight-a slices S_a are finitely generated R-modules.
struct WeightSystem {
  std::vector<int> weights;
  int n_plus = 0;   // sum of the positive weights
  int n_minus = 0;  // minus the sum of the negative weights
  int n_cap = 0;    // min(n_plus, n_minus)
  std::vector<int> positive_vars;
  std::vector<int> negative_vars;
  bool sum_zero = false;
  // Ambient ring: positive-weight variables are named x1.., negative y1..,
  // weight-0 variables z1.., in input order, all of degree 1; the ring's
  // torus grading carries the weights.
  RingPtr ring;

  int arity() const { return static_cast<int>(weights.size()); }
};

// Checks the standing hypotheses: at least two strictly positive weights, at
// least two strictly negative, gcd of all |a_i| equal to 1.
WeightSystem validate_weights(const std::vector<int>& a, const EngineLimits& lim = {});

// Number of monomials of total degree d and torus weight a (exact
// lattice-point count).
long long weight_space_dim(const WeightSystem& ws, int a, int d);

struct SeriesTruncation {
  std::vector<long long> coefficients;  // index = total degree
  int truncation = 0;
};

// coefficients[d] = weight_space_dim(ws, a, d) for 0 <= d <= D.
SeriesTruncation hilbert_series(const WeightSystem& ws, int a, int D,
                                const EngineLimits& lim = {});

struct HilbertBasisResult {
  std::vector<Monomial> basis;  // minimal monomial generators of the invariant monoid
  int degree_bound = 0;         // enumeration bound used
  bool closure_checked = false; // every invariant up to the bound factors through the basis
};

// Minimal generating monomials of the invariant monoid {m : weight(m) = 0},
// enumerated up to the reported degree bound and verified closed below it.
HilbertBasisResult invariant_hilbert_basis(const WeightSystem& ws,
                                           const EngineLimits& lim = {});

// R presented as k[Y]/J: one Y per Hilbert-basis monomial (graded by its
// total degree), J the kernel of Y_i -> monomial_i.  J is computed as the
// saturation of a lattice-basis binomial ideal, hence prime, and is returned
// as a reduced lexicographic Groebner basis.
struct ToricPresentation {
  RingPtr y_ring;
  std::vector<Monomial> basis;        // Hilbert basis, aligned with y_ring variables
  std::vector<Polynomial> relations;  // generators of J, lex-sorted terms
  bool binomial = true;               // every relation has exactly two terms
  int basis_degree_bound = 0;
};
ToricPresentation toric_presentation(const WeightSystem& ws, const EngineLimits& lim = {});

// The weight-a slice S_a as a module over k[Y]: minimal monomial generators
// plus a relation matrix whose cokernel reproduces the lattice counts.
struct CovariantModule {
  int weight = 0;
  std::vector<Monomial> generators;  // minimal generators, monomials of S
  Presentation presentation;         // over k[Y]
  SeriesTruncation hilbert;          // graded dimensions, certified against the counts
  int generator_degree_bound = 0;    // generators enumerated up to this degree
  int relation_degree_bound = 0;     // relations enumerated up to this total degree
  int certified_to = 0;              // cokernel dims checked against lattice counts up to here
};
CovariantModule covariant_presentation(const WeightSystem& ws, int a, int truncation = 8,
                                       const EngineLimits& lim = {});

struct CovariantCmReport {
  int weight = 0;
  int projective_dimension = 0;
  int depth = 0;
  int dimension = 0;  // Krull dimension of R, taken as arity - 1 and cross-checked
  bool cm = false;
};

// Cohen-Macaulay test for S_a: depth via the minimal resolution over k[Y]
// and the graded Auslander-Buchsbaum formula, compared with dim R = n-1.
CovariantCmReport cm_check_covariant(const WeightSystem& ws, int a,
                                     const EngineLimits& lim = {});

struct GorensteinReport {
  bool gorenstein = false;
  bool cm_certified = false;
  std::vector<BigInt> numerator;        // reduced Hilbert-series numerator
  std::vector<int> denominator_degrees; // remaining (1 - t^d) factors
};

// Symmetric-numerator test on the invariant ring (valid for graded CM
// domains).  Requires sum of weights zero; refuses if CM certification fails.
GorensteinReport gorenstein_check(const WeightSystem& ws, const EngineLimits& lim = {});

// Largest torus weight carried by the top local cohomology supported on the
// chosen sign's variables; equals -(sum of that side's weights).
int local_cohomology_weight_bound(const WeightSystem& ws, char sign);

// Alternating-sum identity on weight-space dimensions induced by the Koszul
// resolution of S/(positive variables), checked for all degrees <= D.
bool koszul_identity_check(const WeightSystem& ws, int a, int D,
                           const EngineLimits& lim = {});

struct QuiverArrows {
  int source = 0;
  int target = 0;
  std::vector<Monomial> arrows;  // generators that admit no two-step factorization
};

// Quiver shadow of End_R(S_0 + ... + S_{N-1}): one vertex per slice, block
// (m,n) the covariant module of weight n-m, arrows the generators that do not
// factor through an intermediate vertex.
struct QuiverDescriptor {
  int vertex_count = 0;
  std::map<int, CovariantModule> blocks;  // keyed by weight difference n-m
  std::vector<QuiverArrows> arrows;       // ordered pairs (m,n), m != n
  ToricPresentation toric;

  const CovariantModule& block(int m, int n) const { return blocks.at(n - m); }
  long long graded_dim(int m, int n, int d) const;
};
QuiverDescriptor nccr_quiver(const WeightSystem& ws, int truncation = 8,
                             const EngineLimits& lim = {});

// For all 0 <= a, b < N: graded dimensions of Hom(S_a, S_b) must equal the
// weight-space dimensions of weight b-a, up to degree D (and vanish below 0).
bool end_ring_check(const WeightSystem& ws, int D, const EngineLimits& lim = {});

// Bidual test: (S_a * S_b)** must match S_{a+b} in graded dimensions up to D.
bool bidual_product_check(const WeightSystem& ws, int a, int b, int D,
                          const EngineLimits& lim = {});

}  // namespace nccr
