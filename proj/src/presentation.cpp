#include "nccr/presentation.hpp"

#include <algorithm>
#include <functional>

namespace nccr {

Presentation free_presentation(RingPtr ring, std::vector<long> shifts) {
  return {std::move(ring), std::move(shifts), {}};
}

Presentation cyclic_presentation(const RingPtr& ring, const std::vector<Polynomial>& ideal_gens) {
  Presentation p{ring, {0}, {}};
  for (const auto& g : ideal_gens) {
    if (g.is_zero()) continue;
    p.relations.push_back(ModVec::from_entries({g}));
  }
  return p;
}

void validate_presentation(const Presentation& p) {
  if (static_cast<int>(p.gen_shifts.size()) == 0 && !p.relations.empty())
    fail(Errc::Internal, "relations without generators");
  for (const auto& r : p.relations) {
    if (r.rank() != p.gen_count()) fail(Errc::Internal, "relation rank mismatch");
    if (!r.is_homogeneous(p.gen_shifts))
      fail(Errc::NotHomogeneous, "presentation relation is not graded-homogeneous");
  }
}

std::vector<std::size_t> FreeResolution::betti() const {
  std::vector<std::size_t> b{base_shifts.size()};
  for (const auto& s : steps) b.push_back(s.shifts.size());
  return b;
}

std::vector<ModVec> minimal_generators(const std::vector<ModVec>& cands,
                                       const std::vector<long>& shifts,
                                       const EngineLimits& lim) {
  std::vector<int> order(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cands[a].degree(shifts) < cands[b].degree(shifts);
  });

  std::vector<ModVec> chosen;
  std::vector<ModVec> gb_gens;
  const TermOrder o = TermOrder::grevlex();
  for (int idx : order) {
    ModVec v = cands[idx];
    v.resort(o);
    if (v.is_zero()) continue;
    ModVec nf = chosen.empty() ? v : module_normal_form(v, gb_gens, o, lim);
    if (nf.is_zero()) continue;
    chosen.push_back(nf.make_monic());
    gb_gens = module_groebner(chosen, o, false, lim).gens;
  }
  return chosen;
}

namespace {

// Strike unit entries from the relation matrix: a degree-zero entry means the
// corresponding generator is superfluous.
void eliminate_units(std::vector<long>& shifts, std::vector<ModVec>& rels,
                     const EngineLimits& lim) {
  const TermOrder o = TermOrder::grevlex();
  for (;;) {
    int pi = -1, pj = -1;
    Rational pivot;
    for (int i = 0; i < static_cast<int>(shifts.size()) && pi < 0; ++i) {
      for (int j = 0; j < static_cast<int>(rels.size()); ++j) {
        Polynomial e = rels[j].component(i);
        if (!e.is_zero() && e.is_constant()) {
          pi = i;
          pj = j;
          pivot = e.terms()[0].c;
          break;
        }
      }
    }
    if (pi < 0) break;

    ModVec pivot_rel = rels[pj];
    for (int j = 0; j < static_cast<int>(rels.size()); ++j) {
      if (j == pj) continue;
      Polynomial e = rels[j].component(pi);
      if (e.is_zero()) continue;
      e *= Rational(1) / pivot;
      rels[j] = mod_sub_poly_mul(rels[j], e, pivot_rel, o);
    }
    rels.erase(rels.begin() + pj);

    // Drop the dead generator; remaining relations have no component pi.
    std::vector<ModVec> next;
    next.reserve(rels.size());
    for (auto& r : rels) {
      ModVec v(r.ring(), r.rank() - 1);
      for (const auto& t : r.terms()) {
        if (t.comp == pi) fail(Errc::Internal, "unit elimination left a residue");
        v.mut_terms().push_back({t.comp > pi ? t.comp - 1 : t.comp, t.m, t.c});
      }
      v.resort(o);
      next.push_back(std::move(v));
    }
    rels = std::move(next);
    shifts.erase(shifts.begin() + pi);
    (void)lim;
  }
}

}  // namespace

FreeResolution free_resolution(const Presentation& p, const EngineLimits& lim) {
  validate_presentation(p);
  FreeResolution fr;
  fr.ring = p.ring;
  fr.base_shifts = p.gen_shifts;

  std::vector<ModVec> rels = p.relations;
  eliminate_units(fr.base_shifts, rels, lim);
  rels = minimal_generators(rels, fr.base_shifts, lim);

  std::vector<long> prev_shifts = fr.base_shifts;
  const int max_steps = p.ring->arity() + 1;
  while (!rels.empty()) {
    if (static_cast<int>(fr.steps.size()) > max_steps)
      fail(Errc::Internal, "resolution exceeds the syzygy-theorem length bound");
    ResolutionStep step;
    for (const auto& r : rels) step.shifts.push_back(r.degree(prev_shifts));
    step.map = rels;
    fr.steps.push_back(step);

    ModuleGB gb = module_groebner(rels, TermOrder::grevlex(), true, lim);
    rels = minimal_generators(gb.syzygies, step.shifts, lim);
    prev_shifts = step.shifts;
  }
  return fr;
}

ZPoly hilbert_numerator(const FreeResolution& fr) {
  // A global t^k factor is irrelevant to pole order, so negative shifts are
  // absorbed by an offset.
  long offset = 0;
  for (long s : fr.base_shifts) offset = std::min(offset, s);
  for (const auto& st : fr.steps)
    for (long s : st.shifts) offset = std::min(offset, s);

  ZPoly q;
  auto add_block = [&](const std::vector<long>& shifts, int sign) {
    for (long s : shifts) {
      long k = s - offset;
      if (static_cast<std::size_t>(k) >= q.size()) q.resize(k + 1, BigInt(0));
      q[k] += sign;
    }
  };
  add_block(fr.base_shifts, 1);
  int sign = -1;
  for (const auto& st : fr.steps) {
    add_block(st.shifts, sign);
    sign = -sign;
  }
  zp_trim(q);
  return q;
}

DepthReport depth_and_cm(const Presentation& p, int supplied_dimension,
                         const EngineLimits& lim) {
  FreeResolution fr = free_resolution(p, lim);
  DepthReport rep;
  rep.projective_dimension = fr.projective_dimension();
  rep.depth = p.ring->arity() - rep.projective_dimension;
  if (supplied_dimension >= 0) {
    rep.dimension = supplied_dimension;
  } else {
    rep.dimension = krull_dimension_from_numerator(hilbert_numerator(fr), p.ring->arity());
  }
  rep.cm = (rep.depth == rep.dimension);
  return rep;
}

namespace {

// All exponent vectors with weighted degree exactly d.
void enumerate_wdeg(const PolynomialRing& R, int var, long d, Monomial& cur,
                    const std::function<void(const Monomial&)>& sink) {
  if (var == R.arity()) {
    if (d == 0) sink(cur);
    return;
  }
  if (var == R.arity() - 1) {
    // Last variable must absorb the remainder exactly.
    if (d >= 0 && d % R.degs[var] == 0) {
      cur.e[var] = static_cast<int>(d / R.degs[var]);
      sink(cur);
      cur.e[var] = 0;
    }
    return;
  }
  for (long e = 0; e * R.degs[var] <= d; ++e) {
    cur.e[var] = static_cast<int>(e);
    enumerate_wdeg(R, var + 1, d - e * R.degs[var], cur, sink);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<BigInt> graded_dimensions(const Presentation& p, int D, const EngineLimits& lim) {
  return graded_dimensions_range(p, 0, D, lim);
}

std::vector<BigInt> graded_dimensions_range(const Presentation& p, int lo, int hi,
                                            const EngineLimits& lim) {
  validate_presentation(p);
  if (hi < lo) return {};
  // Leading terms of a module basis of the relation submodule, per component.
  std::vector<std::vector<Monomial>> lts(p.gen_count());
  if (!p.relations.empty()) {
    ModuleGB gb = module_groebner(p.relations, TermOrder::grevlex(), false, lim);
    for (const auto& g : gb.gens) {
      if (g.is_zero()) continue;
      lts[g.leading().comp].push_back(g.leading().m);
    }
  }
  std::vector<BigInt> dims(hi - lo + 1, BigInt(0));
  for (int c = 0; c < p.gen_count(); ++c) {
    for (int d = lo; d <= hi; ++d) {
      long w = d - p.gen_shifts[c];
      if (w < 0) continue;
      Monomial cur(p.ring->arity());
      enumerate_wdeg(*p.ring, 0, w, cur, [&](const Monomial& m) {
        for (const auto& lt : lts[c])
          if (mono_divides(lt, m)) return;
        dims[d - lo] += 1;
      });
    }
  }
  return dims;
}

Presentation submodule_presentation(const Presentation& ambient,
                                    const std::vector<ModVec>& vecs,
                                    const EngineLimits& lim) {
  validate_presentation(ambient);
  std::vector<ModVec> mins;
  {
    // Work modulo the ambient relations when minimalizing the generators.
    const TermOrder o = TermOrder::grevlex();
    std::vector<int> order(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return vecs[a].degree(ambient.gen_shifts) < vecs[b].degree(ambient.gen_shifts);
    });
    std::vector<ModVec> chosen;
    std::vector<ModVec> basis;
    if (!ambient.relations.empty())
      basis = module_groebner(ambient.relations, o, false, lim).gens;
    for (int idx : order) {
      ModVec v = vecs[idx];
      v.resort(o);
      if (v.is_zero()) continue;
      ModVec nf = basis.empty() ? v : module_normal_form(v, basis, o, lim);
      if (nf.is_zero()) continue;
      chosen.push_back(v.make_monic());
      std::vector<ModVec> all = ambient.relations;
      all.insert(all.end(), chosen.begin(), chosen.end());
      basis = module_groebner(all, o, false, lim).gens;
    }
    mins = std::move(chosen);
  }

  // Relations: syzygies of [mins ++ ambient.relations], first block.
  std::vector<ModVec> combined = mins;
  combined.insert(combined.end(), ambient.relations.begin(), ambient.relations.end());
  Presentation out;
  out.ring = ambient.ring;
  for (const auto& v : mins) out.gen_shifts.push_back(v.degree(ambient.gen_shifts));
  if (!combined.empty()) {
    ModuleGB gb = module_groebner(combined, TermOrder::grevlex(), true, lim);
    const int k = static_cast<int>(mins.size());
    std::vector<ModVec> projected;
    for (const auto& s : gb.syzygies) {
      ModVec v(out.ring, k);
      for (const auto& t : s.terms())
        if (t.comp < k) v.mut_terms().push_back(t);
      v.resort(TermOrder::grevlex());
      if (!v.is_zero()) projected.push_back(v);
    }
    out.relations = minimal_generators(projected, out.gen_shifts, lim);
  }
  return out;
}

Presentation hom_module(const Presentation& m, const Presentation& n,
                        const EngineLimits& lim) {
  validate_presentation(m);
  validate_presentation(n);
  if (!same_ring(m.ring, n.ring)) fail(Errc::RingMismatch, "Hom over different rings");
  const RingPtr ring = m.ring;
  const int b0 = m.gen_count();
  const int b1 = static_cast<int>(m.relations.size());
  const int c0 = n.gen_count();
  const int c1 = static_cast<int>(n.relations.size());
  const TermOrder o = TermOrder::grevlex();

  // Basis of Hom(F0,G0): w_{ij} sends generator i of m to generator j of n.
  std::vector<long> w_shifts(b0 * c0);
  for (int i = 0; i < b0; ++i)
    for (int j = 0; j < c0; ++j) w_shifts[i * c0 + j] = n.gen_shifts[j] - m.gen_shifts[i];

  // Candidate maps: those A with A(relations of m) inside image(relations of n).
  std::vector<ModVec> s_gens;
  if (b1 == 0) {
    for (int w = 0; w < b0 * c0; ++w) s_gens.push_back(ModVec::unit(ring, b0 * c0, w));
  } else {
    // Target Hom(F1,G0) indexed by (u,j) = u*c0 + j.
    std::vector<ModVec> cols;
    for (int i = 0; i < b0; ++i)
      for (int j = 0; j < c0; ++j) {
        ModVec col(ring, b1 * c0);
        for (int u = 0; u < b1; ++u) {
          Polynomial e = m.relations[u].component(i);
          for (const auto& t : e.terms()) col.mut_terms().push_back({u * c0 + j, t.m, t.c});
        }
        col.resort(o);
        cols.push_back(std::move(col));
      }
    for (int u = 0; u < b1; ++u)
      for (int v = 0; v < c1; ++v) {
        ModVec col(ring, b1 * c0);
        for (const auto& t : n.relations[v].terms())
          col.mut_terms().push_back({u * c0 + t.comp, t.m, t.c});
        col.resort(o);
        cols.push_back(std::move(col));
      }
    bool all_zero = true;
    for (const auto& c : cols)
      if (!c.is_zero()) all_zero = false;
    if (all_zero) {
      for (int w = 0; w < b0 * c0; ++w) s_gens.push_back(ModVec::unit(ring, b0 * c0, w));
    } else {
      ModuleGB gb = module_groebner(cols, o, true, lim);
      for (const auto& s : gb.syzygies) {
        ModVec v(ring, b0 * c0);
        for (const auto& t : s.terms())
          if (t.comp < b0 * c0) v.mut_terms().push_back(t);
        v.resort(o);
        if (!v.is_zero()) s_gens.push_back(v);
      }
    }
  }

  // Maps that factor through the relations of n: e_i -> (relation v of n).
  std::vector<ModVec> t_gens;
  for (int i = 0; i < b0; ++i)
    for (int v = 0; v < c1; ++v) {
      ModVec col(ring, b0 * c0);
      for (const auto& t : n.relations[v].terms())
        col.mut_terms().push_back({i * c0 + t.comp, t.m, t.c});
      col.resort(o);
      if (!col.is_zero()) t_gens.push_back(std::move(col));
    }

  // Minimal generators of S/T.
  std::vector<int> order(s_gens.size());
  for (std::size_t i = 0; i < s_gens.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return s_gens[a].degree(w_shifts) < s_gens[b].degree(w_shifts);
  });
  std::vector<ModVec> chosen;
  std::vector<ModVec> basis;
  if (!t_gens.empty()) basis = module_groebner(t_gens, o, false, lim).gens;
  for (int idx : order) {
    ModVec v = s_gens[idx];
    if (v.is_zero()) continue;
    ModVec nf = basis.empty() ? v : module_normal_form(v, basis, o, lim);
    if (nf.is_zero()) continue;
    chosen.push_back(v.make_monic());
    std::vector<ModVec> all = t_gens;
    all.insert(all.end(), chosen.begin(), chosen.end());
    basis = module_groebner(all, o, false, lim).gens;
  }

  Presentation out;
  out.ring = ring;
  for (const auto& v : chosen) out.gen_shifts.push_back(v.degree(w_shifts));
  std::vector<ModVec> combined = chosen;
  combined.insert(combined.end(), t_gens.begin(), t_gens.end());
  if (!combined.empty()) {
    ModuleGB gb = module_groebner(combined, o, true, lim);
    const int k = static_cast<int>(chosen.size());
    std::vector<ModVec> projected;
    for (const auto& s : gb.syzygies) {
      ModVec v(ring, k);
      for (const auto& t : s.terms())
        if (t.comp < k) v.mut_terms().push_back(t);
      v.resort(o);
      if (!v.is_zero()) projected.push_back(v);
    }
    out.relations = minimal_generators(projected, out.gen_shifts, lim);
  }
  return out;
}

}  // namespace nccr
