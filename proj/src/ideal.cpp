#include "nccr/ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nccr {

namespace {

void check_degree_cap(long d, const EngineLimits& lim) {
  if (d > lim.max_degree)
    fail(Errc::CapExceeded, "intermediate degree exceeds cap of " +
                                std::to_string(lim.max_degree));
}

long ecart(const Polynomial& f) { return f.degree() - wdeg(f.lm(), *f.ring()); }

// Keep only generators whose leading monomials are minimal under division.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(),
            [](const Monomial& a, const Monomial& b) { return a.total() < b.total(); });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& k : out)
      if (mono_divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G,
                      const TermOrder& o, const EngineLimits& lim) {
  DivisionResult res;
  res.remainder = Polynomial::zero(f.ring());
  res.quotients.assign(G.size(), Polynomial::zero(f.ring()));
  std::vector<long> gdeg(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) gdeg[i] = G[i].degree();
  Polynomial h = f;
  auto& rem = res.remainder.mut_terms();
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero() || !mono_divides(G[i].lm(), lt.m)) continue;
      Monomial q = mono_div(lt.m, G[i].lm());
      Rational c = lt.c / G[i].lc();
      check_degree_cap(wdeg(q, *f.ring()) + gdeg[i], lim);
      res.quotients[i] = poly_add(res.quotients[i],
                                  Polynomial::term(f.ring(), q, c), o);
      h = poly_sub_mul(h, q, c, G[i], o);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      h.mut_terms().erase(h.mut_terms().begin());
    }
  }
  return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& o, const EngineLimits& lim) {
  Polynomial rem(f.ring());
  std::vector<long> gdeg(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) gdeg[i] = G[i].degree();
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const auto& g = G[i];
      if (g.is_zero() || !mono_divides(g.lm(), lt.m)) continue;
      Monomial q = mono_div(lt.m, g.lm());
      check_degree_cap(wdeg(q, *f.ring()) + gdeg[i], lim);
      h = poly_sub_mul(h, q, lt.c / g.lc(), g, o);
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

Polynomial local_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                             const TermOrder& o, const EngineLimits& lim) {
  // Mora's algorithm: the reducer set may grow by earlier partial remainders,
  // which is what makes the loop terminate for non-well-orders.
  std::vector<Polynomial> T = G;
  std::vector<long> te(T.size());
  std::vector<long> tdeg(T.size());
  for (std::size_t i = 0; i < T.size(); ++i) {
    te[i] = T[i].is_zero() ? 0 : ecart(T[i]);
    tdeg[i] = T[i].degree();
  }
  Polynomial h = f;
  while (!h.is_zero()) {
    int best = -1;
    long best_ecart = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (T[i].is_zero() || !mono_divides(T[i].lm(), h.lm())) continue;
      if (best < 0 || te[i] < best_ecart) {
        best = static_cast<int>(i);
        best_ecart = te[i];
      }
    }
    if (best < 0) break;
    if (best_ecart > ecart(h)) {
      T.push_back(h);
      te.push_back(ecart(h));
      tdeg.push_back(h.degree());
      if (T.size() > lim.max_basis)
        fail(Errc::CapExceeded, "local reducer set exceeds basis cap");
    }
    const Polynomial& g = T[best];
    Monomial q = mono_div(h.lm(), g.lm());
    check_degree_cap(wdeg(q, *f.ring()) + tdeg[best], lim);
    h = poly_sub_mul(h, q, h.lc() / g.lc(), g, o);
  }
  return h;
}

namespace {

Polynomial spoly(const Polynomial& a, const Polynomial& b, const TermOrder& o) {
  Monomial l = mono_lcm(a.lm(), b.lm());
  Polynomial pa = a;
  pa.mul_term(mono_div(l, a.lm()), Rational(1) / a.lc());
  return poly_sub_mul(pa, mono_div(l, b.lm()), Rational(1) / b.lc(), b, o);
}

}  // namespace

GroebnerBasis groebner(std::vector<Polynomial> F, const TermOrder& o,
                       const EngineLimits& lim) {
  if (F.empty()) fail(Errc::Internal, "empty generating set");
  RingPtr ring = F[0].ring();
  if (static_cast<int>(ring->arity()) > lim.max_arity)
    fail(Errc::CapExceeded, "ring arity exceeds cap");
  for (auto& f : F) {
    if (!same_ring(f.ring(), ring)) fail(Errc::RingMismatch, "mixed rings in generating set");
    f.resort(o);
  }

  std::vector<Polynomial> G;
  for (auto& f : F)
    if (!f.is_zero()) G.push_back(f.make_monic());
  if (G.empty()) G.push_back(Polynomial::zero(ring));

  const bool global = o.global();
  // Pending S-pairs, processed in normal strategy: lowest lcm degree first.
  std::set<std::pair<int, int>> pending;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) pending.insert({i, j});
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  while (!pending.empty()) {
    auto best = pending.begin();
    long best_deg = 0;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      long d = wdeg(mono_lcm(G[it->first].lm(), G[it->second].lm()), *ring);
      if (it == pending.begin() || d < best_deg) {
        best = it;
        best_deg = d;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial lij = mono_lcm(G[i].lm(), G[j].lm());
    if (global) {
      if (mono_coprime(G[i].lm(), G[j].lm())) continue;
      bool chained = false;
      for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
        if (k == i || k == j || !mono_divides(G[k].lm(), lij)) continue;
        auto p1 = std::minmax(i, k);
        auto p2 = std::minmax(j, k);
        if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
          chained = true;
      }
      if (chained) continue;
    }

    Polynomial s = spoly(G[i], G[j], o);
    Polynomial h = global ? normal_form(s, G, o, lim) : local_normal_form(s, G, o, lim);
    if (h.is_zero()) continue;
    h.make_monic();
    G.push_back(std::move(h));
    if (G.size() > lim.max_basis) fail(Errc::CapExceeded, "basis size exceeds cap");
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  // Interreduce.  Global: full reduced basis.  Local: prune redundant leading
  // terms only (tail reduction does not terminate in general).
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i) continue;
      if (mono_divides(G[k].lm(), G[i].lm())) {
        // Strict division, or equal monomials keeping the earlier one.
        if (G[k].lm() != G[i].lm() || k < i) redundant = true;
      }
    }
    if (!redundant) kept.push_back(G[i]);
  }
  if (global) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t k = 0; k < kept.size(); ++k)
        if (k != i) others.push_back(kept[k]);
      kept[i] = normal_form(kept[i], others, o, lim).make_monic();
    }
  }
  std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
    return o.less(a.lm(), b.lm(), *ring);
  });
  return {ring, o, std::move(kept)};
}

Polynomial reduce(const GroebnerBasis& gb, const Polynomial& f, const EngineLimits& lim) {
  Polynomial g = f;
  g.resort(gb.order);
  Polynomial r = gb.order.global() ? normal_form(g, gb.gens, gb.order, lim)
                                   : local_normal_form(g, gb.gens, gb.order, lim);
  r.resort(TermOrder::grevlex());
  return r;
}

bool contains(const GroebnerBasis& gb, const Polynomial& f, const EngineLimits& lim) {
  return reduce(gb, f, lim).is_zero();
}

std::optional<BigInt> quotient_dimension(const GroebnerBasis& gb, const EngineLimits& lim) {
  (void)lim;
  const int n = gb.ring->arity();
  std::vector<Monomial> lts;
  for (const auto& g : gb.gens)
    if (!g.is_zero()) lts.push_back(g.lm());
  lts = minimal_monomials(std::move(lts));
  if (lts.size() == 1 && lts[0].is_one()) return BigInt(0);

  // Finite iff every variable appears as a pure power among the leading terms.
  std::vector<int> bound(n, -1);
  for (const auto& m : lts) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m.e[i] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = i;
    }
    if (pure && support >= 0)
      if (bound[support] < 0 || m.e[support] < bound[support]) bound[support] = m.e[support];
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) return std::nullopt;

  BigInt box(1);
  for (int i = 0; i < n; ++i) box *= bound[i];
  if (box > BigInt(100000000)) fail(Errc::CapExceeded, "staircase box too large");

  // Count monomials in the box not divisible by any leading term.
  BigInt count(0);
  Monomial cur(n);
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      for (const auto& m : lts)
        if (mono_divides(m, cur)) return;
      count += 1;
      return;
    }
    for (int e = 0; e < bound[i]; ++e) {
      cur.e[i] = e;
      walk(i + 1);
    }
    cur.e[i] = 0;
  };
  walk(0);
  return count;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, const EngineLimits& lim) {
  const int n = gb.ring->arity();
  std::vector<Monomial> lts;
  for (const auto& g : gb.gens)
    if (!g.is_zero()) lts.push_back(g.lm());
  lts = minimal_monomials(std::move(lts));

  std::vector<int> bound(n, -1);
  for (const auto& m : lts) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m.e[i] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = i;
    }
    if (pure && support >= 0)
      if (bound[support] < 0 || m.e[support] < bound[support]) bound[support] = m.e[support];
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0) fail(Errc::CapExceeded, "quotient is not finite dimensional");

  std::vector<Monomial> out;
  Monomial cur(n);
  std::function<void(int)> walk = [&](int i) {
    if (i == n) {
      for (const auto& m : lts)
        if (mono_divides(m, cur)) return;
      out.push_back(cur);
      if (out.size() > lim.max_basis * 100)
        fail(Errc::CapExceeded, "standard monomial count exceeds cap");
      return;
    }
    for (int e = 0; e < bound[i]; ++e) {
      cur.e[i] = e;
      walk(i + 1);
    }
    cur.e[i] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order.less(a, b, *gb.ring);
  });
  return out;
}

int krull_dimension(const GroebnerBasis& gb) {
  const int n = gb.ring->arity();
  std::vector<Monomial> lts;
  for (const auto& g : gb.gens)
    if (!g.is_zero()) lts.push_back(g.lm());
  lts = minimal_monomials(std::move(lts));
  if (lts.size() == 1 && lts[0].is_one()) return -1;  // zero ring

  // dim R/I = dim R/LT(I) = size of the largest variable set S such that no
  // leading monomial is supported inside S.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lts) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (m.e[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, int block,
                                  const RingPtr& tail, const EngineLimits& lim) {
  GroebnerBasis gb = groebner(gens, TermOrder::elim(block), lim);
  std::vector<Polynomial> out;
  for (const auto& g : gb.gens) {
    bool free_of_block = true;
    for (const auto& t : g.terms())
      for (int i = 0; i < block && free_of_block; ++i)
        if (t.m.e[i] != 0) free_of_block = false;
    if (free_of_block) out.push_back(g.restrict_tail(tail, block));
  }
  return out;
}

}  // namespace nccr
