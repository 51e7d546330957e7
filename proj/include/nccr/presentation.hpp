#pragma once

#include <vector>

#include "nccr/hilbert.hpp"
#include "nccr/modvec.hpp"

namespace nccr {

// Finitely presented graded module: cokernel of the relation columns inside
// the free module with the given generator degrees.
struct Presentation {
  RingPtr ring;
  std::vector<long> gen_shifts;
  std::vector<ModVec> relations;

  int gen_count() const { return static_cast<int>(gen_shifts.size()); }
};

// Free module (no relations) and cyclic quotient R/I.
Presentation free_presentation(RingPtr ring, std::vector<long> shifts);
Presentation cyclic_presentation(const RingPtr& ring, const std::vector<Polynomial>& ideal_gens);

// Fails with NotHomogeneous unless every relation is homogeneous for the
// generator degrees.
void validate_presentation(const Presentation& p);

struct ResolutionStep {
  std::vector<long> shifts;
  std::vector<ModVec> map;  // columns over the previous step's generators
};

struct FreeResolution {
  RingPtr ring;
  std::vector<long> base_shifts;
  std::vector<ResolutionStep> steps;

  int projective_dimension() const { return static_cast<int>(steps.size()); }
  std::vector<std::size_t> betti() const;
};

// Minimal graded free resolution: minimalize the presentation, then iterate
// syzygies, selecting a minimal generating set at every step.
FreeResolution free_resolution(const Presentation& p, const EngineLimits& lim = {});

// Alternating sum of t^shift over the resolution: the exact numerator of the
// Hilbert series over prod (1 - t^{deg var}).
ZPoly hilbert_numerator(const FreeResolution& fr);

struct DepthReport {
  int projective_dimension;
  int depth;
  int dimension;
  bool cm;
};

// Depth = arity - projective dimension (graded Auslander-Buchsbaum); the
// dimension comes from the Hilbert-series pole order unless supplied.
DepthReport depth_and_cm(const Presentation& p, int supplied_dimension = -1,
                         const EngineLimits& lim = {});

// Exact graded dimensions of the cokernel in degrees 0..D.
std::vector<BigInt> graded_dimensions(const Presentation& p, int D,
                                      const EngineLimits& lim = {});

// Same, over an arbitrary inclusive degree window (for modules whose
// generators sit in negative degrees, e.g. Hom modules).
std::vector<BigInt> graded_dimensions_range(const Presentation& p, int lo, int hi,
                                            const EngineLimits& lim = {});

// Greedy minimal generating set of the graded submodule generated by `cands`
// inside the free module with the given shifts.  Returned vectors are reduced
// and monic; candidate order is (degree, index).
std::vector<ModVec> minimal_generators(const std::vector<ModVec>& cands,
                                       const std::vector<long>& shifts,
                                       const EngineLimits& lim = {});

// Presentation of the submodule of coker(ambient) generated by the images of
// `vecs` (vectors over ambient's generators).
Presentation submodule_presentation(const Presentation& ambient,
                                    const std::vector<ModVec>& vecs,
                                    const EngineLimits& lim = {});

// Presentation of Hom(M, N) over the common ambient polynomial ring, graded so
// that a degree-d element maps degree-s to degree-s+d.
Presentation hom_module(const Presentation& m, const Presentation& n,
                        const EngineLimits& lim = {});

}  // namespace nccr
