#include "nccr/modvec.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nccr {

bool modterm_less(const ModTerm& a, const ModTerm& b, const TermOrder& o,
                  const PolynomialRing& R) {
  if (a.m != b.m) return o.less(a.m, b.m, R);
  return a.comp > b.comp;
}

namespace {

void sort_combine(std::vector<ModTerm>& ts, const TermOrder& o, const PolynomialRing& R) {
  std::sort(ts.begin(), ts.end(), [&](const ModTerm& x, const ModTerm& y) {
    return modterm_less(y, x, o, R);
  });
  std::vector<ModTerm> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(std::move(t));
    }
  }
  ts = std::move(out);
}

}  // namespace

ModVec ModVec::unit(RingPtr ring, int rank, int comp) {
  Monomial one(ring->arity());
  return term(std::move(ring), rank, comp, std::move(one), Rational(1));
}

ModVec ModVec::term(RingPtr ring, int rank, int comp, Monomial m, const Rational& c) {
  ModVec v(ring, rank);
  if (c != 0) v.ts_.push_back({comp, std::move(m), c});
  return v;
}

ModVec ModVec::from_entries(const std::vector<Polynomial>& entries) {
  if (entries.empty()) fail(Errc::Internal, "empty module column");
  ModVec v(entries[0].ring(), static_cast<int>(entries.size()));
  for (int i = 0; i < v.rank_; ++i)
    for (const auto& t : entries[i].terms()) v.ts_.push_back({i, t.m, t.c});
  sort_combine(v.ts_, TermOrder::grevlex(), *v.ring_);
  return v;
}

const ModTerm& ModVec::leading() const {
  if (ts_.empty()) fail(Errc::Internal, "leading term of zero vector");
  return ts_.front();
}

ModVec& ModVec::mul_term(const Monomial& m, const Rational& c) {
  if (c == 0) {
    ts_.clear();
    return *this;
  }
  for (auto& t : ts_) {
    t.m = mono_mul(t.m, m);
    t.c *= c;
  }
  return *this;
}

ModVec& ModVec::scale(const Rational& c) {
  if (c == 0) {
    ts_.clear();
    return *this;
  }
  for (auto& t : ts_) t.c *= c;
  return *this;
}

ModVec& ModVec::make_monic() {
  if (!ts_.empty()) scale(Rational(1) / ts_.front().c);
  return *this;
}

ModVec ModVec::operator-() const {
  ModVec v(*this);
  for (auto& t : v.ts_) t.c = -t.c;
  return v;
}

Polynomial ModVec::component(int comp) const {
  Polynomial p(ring_);
  for (const auto& t : ts_)
    if (t.comp == comp) p.mut_terms().push_back({t.m, t.c});
  p.resort(TermOrder::grevlex());
  return p;
}

bool ModVec::is_homogeneous(const std::vector<long>& shifts) const {
  if (ts_.empty()) return true;
  long d = wdeg(ts_[0].m, *ring_) + shifts[ts_[0].comp];
  for (const auto& t : ts_)
    if (wdeg(t.m, *ring_) + shifts[t.comp] != d) return false;
  return true;
}

long ModVec::degree(const std::vector<long>& shifts) const {
  long d = -1;
  for (const auto& t : ts_) d = std::max(d, wdeg(t.m, *ring_) + shifts[t.comp]);
  return d;
}

void ModVec::resort(const TermOrder& o) { sort_combine(ts_, o, *ring_); }

std::string ModVec::str() const {
  if (ts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts_) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (c != 1) os << to_string(c) << "*";
    if (!t.m.is_one()) {
      bool printed = false;
      for (int i = 0; i < ring_->arity(); ++i) {
        if (t.m.e[i] == 0) continue;
        if (printed) os << "*";
        os << ring_->vars[i];
        if (t.m.e[i] > 1) os << "^" << t.m.e[i];
        printed = true;
      }
      os << "*";
    }
    os << "e" << (t.comp + 1);
  }
  return os.str();
}

ModVec mod_add(const ModVec& a, const ModVec& b, const TermOrder& o) {
  const auto& R = *a.ring();
  ModVec r(a.ring(), a.rank());
  auto& out = r.mut_terms();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].comp == tb[j].comp && ta[i].m == tb[j].m) {
      Rational c = ta[i].c + tb[j].c;
      if (c != 0) out.push_back({ta[i].comp, ta[i].m, std::move(c)});
      ++i, ++j;
    } else if (modterm_less(tb[j], ta[i], o, R)) {
      out.push_back(ta[i]);
      ++i;
    } else {
      out.push_back(tb[j]);
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  return r;
}

ModVec mod_sub_mul(const ModVec& a, const Monomial& m, const Rational& c,
                   const ModVec& b, const TermOrder& o) {
  ModVec scaled = b;
  scaled.mul_term(m, -c);
  return mod_add(a, scaled, o);
}

ModVec mod_sub_poly_mul(const ModVec& a, const Polynomial& p, const ModVec& b,
                        const TermOrder& o) {
  ModVec r = a;
  for (const auto& t : p.terms()) r = mod_sub_mul(r, t.m, t.c, b, o);
  return r;
}

ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& G,
                          const TermOrder& o, const EngineLimits& lim) {
  ModVec rem(v.ring(), v.rank());
  const std::vector<long> flat(v.rank(), 0);
  std::vector<long> gdeg(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) gdeg[i] = G[i].degree(flat);
  ModVec h = v;
  while (!h.is_zero()) {
    const ModTerm& lt = h.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const auto& g = G[i];
      if (g.is_zero()) continue;
      const ModTerm& gl = g.leading();
      if (gl.comp != lt.comp || !mono_divides(gl.m, lt.m)) continue;
      Monomial q = mono_div(lt.m, gl.m);
      if (wdeg(q, *v.ring()) + gdeg[i] > lim.max_degree)
        fail(Errc::CapExceeded, "module reduction degree exceeds cap");
      h = mod_sub_mul(h, q, lt.c / gl.c, g, o);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.mut_terms().push_back(lt);
      h.mut_terms().erase(h.mut_terms().begin());
    }
  }
  return rem;
}

namespace {

// Reduction that also updates the representation of h over the tracked inputs.
void tracked_reduce(ModVec& h, ModVec& rep, const std::vector<ModVec>& G,
                    const std::vector<ModVec>& reps, const TermOrder& o,
                    const EngineLimits& lim) {
  ModVec rem(h.ring(), h.rank());
  const std::vector<long> flat(h.rank(), 0);
  std::vector<long> gdeg(G.size());
  for (std::size_t k = 0; k < G.size(); ++k) gdeg[k] = G[k].degree(flat);
  while (!h.is_zero()) {
    const ModTerm& lt = h.leading();
    bool reduced = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (G[k].is_zero()) continue;
      const ModTerm& gl = G[k].leading();
      if (gl.comp != lt.comp || !mono_divides(gl.m, lt.m)) continue;
      Monomial q = mono_div(lt.m, gl.m);
      Rational c = lt.c / gl.c;
      if (wdeg(q, *h.ring()) + gdeg[k] > lim.max_degree)
        fail(Errc::CapExceeded, "module reduction degree exceeds cap");
      h = mod_sub_mul(h, q, c, G[k], o);
      rep = mod_sub_mul(rep, q, c, reps[k], o);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.mut_terms().push_back(lt);
      h.mut_terms().erase(h.mut_terms().begin());
    }
  }
  // Put the irreducible part back: h becomes the full normal form.
  h = rem;
}

}  // namespace

ModuleGB module_groebner(const std::vector<ModVec>& F, const TermOrder& o,
                         bool track_syzygies, const EngineLimits& lim) {
  if (F.empty()) fail(Errc::Internal, "empty module generating set");
  RingPtr ring = F[0].ring();
  const int rank = F[0].rank();
  const int nin = static_cast<int>(F.size());
  for (const auto& f : F)
    if (!same_ring(f.ring(), ring) || f.rank() != rank)
      fail(Errc::RingMismatch, "mixed ambient modules");

  ModuleGB out;
  out.ring = ring;
  out.order = o;
  out.rank = rank;

  std::vector<ModVec> G;
  std::vector<ModVec> reps;  // rep[k] expresses G[k] over the inputs
  for (int i = 0; i < nin; ++i) {
    ModVec g = F[i];
    g.resort(o);
    if (g.is_zero()) {
      if (track_syzygies) out.syzygies.push_back(ModVec::unit(ring, nin, i));
      continue;
    }
    ModVec rep = ModVec::unit(ring, nin, i);
    rep.scale(Rational(1) / g.leading().c);
    g.make_monic();
    G.push_back(std::move(g));
    reps.push_back(std::move(rep));
  }

  std::set<std::pair<int, int>> pending;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i)
      if (G[i].leading().comp == G[j].leading().comp) pending.insert({i, j});
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  while (!pending.empty()) {
    auto best = pending.begin();
    long best_deg = 0;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      long d = wdeg(mono_lcm(G[it->first].leading().m, G[it->second].leading().m), *ring);
      if (it == pending.begin() || d < best_deg) {
        best = it;
        best_deg = d;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const ModTerm& li = G[i].leading();
    const ModTerm& lj = G[j].leading();
    const Monomial l = mono_lcm(li.m, lj.m);

    if (!track_syzygies) {
      // Chain criterion (valid for modules); the coprime criterion is not.
      bool chained = false;
      for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
        if (k == i || k == j) continue;
        const ModTerm& lk = G[k].leading();
        if (lk.comp != li.comp || !mono_divides(lk.m, l)) continue;
        auto p1 = std::minmax(i, k);
        auto p2 = std::minmax(j, k);
        if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
          chained = true;
      }
      if (chained) continue;
    }

    ModVec s = G[i];
    s.mul_term(mono_div(l, li.m), Rational(1));
    s = mod_sub_mul(s, mono_div(l, lj.m), Rational(1), G[j], o);

    if (track_syzygies) {
      ModVec rep = reps[i];
      rep.mul_term(mono_div(l, li.m), Rational(1));
      rep = mod_sub_mul(rep, mono_div(l, lj.m), Rational(1), reps[j], o);
      tracked_reduce(s, rep, G, reps, o, lim);
      if (s.is_zero()) {
        if (!rep.is_zero()) out.syzygies.push_back(rep.make_monic());
        continue;
      }
      rep.scale(Rational(1) / s.leading().c);
      s.make_monic();
      G.push_back(std::move(s));
      reps.push_back(std::move(rep));
    } else {
      s = module_normal_form(s, G, o, lim);
      if (s.is_zero()) continue;
      s.make_monic();
      G.push_back(std::move(s));
    }
    if (G.size() > lim.max_basis) fail(Errc::CapExceeded, "module basis exceeds cap");
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  if (!track_syzygies) {
    // Minimalize: drop redundant leading terms, then tail-reduce.
    std::vector<ModVec> kept;
    for (std::size_t i = 0; i < G.size(); ++i) {
      bool redundant = false;
      for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
        if (k == i) continue;
        const ModTerm& lk = G[k].leading();
        const ModTerm& li2 = G[i].leading();
        if (lk.comp == li2.comp && mono_divides(lk.m, li2.m)) {
          if (lk.m != li2.m || k < i) redundant = true;
        }
      }
      if (!redundant) kept.push_back(G[i]);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<ModVec> others;
      for (std::size_t k = 0; k < kept.size(); ++k)
        if (k != i) others.push_back(kept[k]);
      kept[i] = module_normal_form(kept[i], others, o, lim).make_monic();
    }
    std::sort(kept.begin(), kept.end(), [&](const ModVec& a, const ModVec& b) {
      return modterm_less(a.leading(), b.leading(), o, *ring);
    });
    out.gens = std::move(kept);
  } else {
    out.gens = std::move(G);
    std::sort(out.syzygies.begin(), out.syzygies.end(), [&](const ModVec& a, const ModVec& b) {
      if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
      return modterm_less(a.leading(), b.leading(), o, *ring);
    });
  }
  return out;
}

bool module_contains(const ModuleGB& gb, const ModVec& v, const EngineLimits& lim) {
  ModVec w = v;
  w.resort(gb.order);
  return module_normal_form(w, gb.gens, gb.order, lim).is_zero();
}

}  // namespace nccr
