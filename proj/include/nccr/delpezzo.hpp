#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nccr/errors.hpp"
#include "nccr/rational.hpp"

namespace nccr {

// Coefficients in the surface's hyperplane basis (H, E1..Ep) or (f1, f2).
using DivisorClass = std::vector<long>;

// Picard lattice of the plane blown up in p <= 8 general points, or of the
// smooth quadric surface.
struct SurfaceLattice {
  enum class Kind { Blowup, Quadric };
  Kind kind = Kind::Blowup;
  int blowups = 0;  // p, meaningful for Kind::Blowup
  int rank = 1;
  std::vector<std::string> basis_names;
  std::vector<std::vector<long>> form;  // intersection matrix in the basis
  DivisorClass canonical;               // K
  std::string name;
};

// Accepts "P2", "dP1".."dP8", "P1xP1".
SurfaceLattice make_surface(const std::string& name);
SurfaceLattice make_blowup_surface(int p);  // p = 0 is the plane
SurfaceLattice make_quadric_surface();

long pair_classes(const SurfaceLattice& s, const DivisorClass& a, const DivisorClass& b);

// All classes C with C*C = -1 and C*K = -1 (a finite set), sorted.
std::vector<DivisorClass> minus_one_classes(const SurfaceLattice& s);

// Generators of the effective cone used for nef tests: the (-1)-classes,
// plus H for the plane, H-E1 for one blowup, both rulings for the quadric.
std::vector<DivisorClass> mori_generators(const SurfaceLattice& s);

bool is_ample(const SurfaceLattice& s, const DivisorClass& l);

// Numerical K-theory class (r, c1, ch2); for a line bundle O(D) this is
// (1, D, D^2/2).  ch2 must have denominator dividing 2.
struct NumericalClass {
  long rank = 0;
  DivisorClass c1;
  Rational ch2 = Rational(0);
};

NumericalClass line_bundle_class(const SurfaceLattice& s, const DivisorClass& d);
void validate_class(const SurfaceLattice& s, const NumericalClass& e);

// chi(E,F) by Riemann-Roch: always an integer for well-formed classes.
long euler_form(const SurfaceLattice& s, const NumericalClass& e, const NumericalClass& f);

// -(c1(E).K) / r(E).
Rational slope(const SurfaceLattice& s, const NumericalClass& e);

enum class MutationSide { Left, Right };

// Left: chi(E,F)[E] - [F]; right: chi(E,F)[F] - [E].
NumericalClass mutate(const SurfaceLattice& s, const NumericalClass& e, const NumericalClass& f,
                      MutationSide side);

// E(-jK): rank fixed, c1 += r * (-jK), ch2 += c1.(-jK) + r (jK)^2 / 2.
NumericalClass helix_twist(const SurfaceLattice& s, const NumericalClass& e, int j);

struct CohomologyTriple {
  long long h0 = 0, h1 = 0, h2 = 0;
};

// Exact line-bundle cohomology: h0 by (-1)-class peeling plus a nef test,
// h2 by Serre duality, h1 by Riemann-Roch closure.
CohomologyTriple line_bundle_cohomology(const SurfaceLattice& s, const DivisorClass& d);

// One nonvanishing H^i(O(D_b - D_a + jL)) (or sweep cell) with its dimension.
struct PairWitness {
  int a = -1;
  int b = -1;
  int i = 0;
  int j = 0;
  long long value = 0;
};

struct CollectionCheck {
  bool ok = true;
  std::vector<PairWitness> witnesses;
  int sweep_bound = 0;  // j-sweep range actually examined
};

// Exceptional collection of type Hom: no higher Exts forward (i <= j) and no
// morphisms at all backward (i > j).
CollectionCheck strong_collection_check(const SurfaceLattice& s,
                                        const std::vector<DivisorClass>& ds);

// H^i(O(D_b - D_a + jL)) = 0 for i > 0, j >= 0; the sweep stops at the
// Kawamata-Viehweg bound (every difference minus K becomes ample).
// extra_sweep widens the sweep past the bound, for stability checks.
CollectionCheck tilting_cone_check(const SurfaceLattice& s, const DivisorClass& l,
                                   const std::vector<DivisorClass>& ds, int extra_sweep = 0);

// H^i(O(D_b - D_a + jL)) = 0 for i in {0,1}, j <= -1; short-circuits to true
// when omega = L^{-1}.
CollectionCheck crepancy_cone_check(const SurfaceLattice& s, const DivisorClass& l,
                                    const std::vector<DivisorClass>& ds, int extra_sweep = 0);

// Graded dimensions of H^{i+1}_{R>0}(R) in degrees u_lo..u_hi: h^i(O(uL)) for
// i in {1,2}; for i = 0 the cokernel of R_u -> H^0(O(uL)).
std::vector<long long> cone_local_cohomology(const SurfaceLattice& s, const DivisorClass& l,
                                             int i, int u_lo, int u_hi);

struct ConeReport {
  bool cm = false;
  bool rational = false;
  std::optional<int> gorenstein_index;  // m with omega = L^{-m}
  bool blowup_crepant = false;          // m == 1
  bool terminal = false;                // m >= 2
  std::vector<PairWitness> witnesses;   // failing (i, j) sweep cells
  int sweep_bound = 0;
};

// Cohomological properties of the cone Spec(section ring of L).
ConeReport cone_properties(const SurfaceLattice& s, const DivisorClass& l, int extra_sweep = 0);

struct KoSlopeReport {
  std::vector<int> indices;  // helix window [-n, 2n]
  std::vector<Rational> slopes;
  bool monotone = false;
  bool serre_chi_ok = false;   // chi(E,F) = chi(F, E tensor K) over the window
  bool line_bundles = false;   // every class is numerically a line bundle
  bool no_forward_ext2 = true;
  bool no_backward_hom = true;
  bool ext1_vanish = true;
  std::vector<PairWitness> witnesses;
};

// Slope ordering and vanishing pattern of the helix extension of a
// numerically exceptional collection.
KoSlopeReport ko_slope_report(const SurfaceLattice& s, const std::vector<NumericalClass>& es);

}  // namespace nccr
