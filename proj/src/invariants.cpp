#include "nccr/invariants.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "nccr/ideal.hpp"
#include "nccr/lattice.hpp"

namespace nccr {

namespace {

// (degree, then descending grevlex) — the canonical listing order for
// monomial sets.
bool mono_before(const Monomial& a, const Monomial& b, const PolynomialRing& R) {
  long da = wdeg(a, R), db = wdeg(b, R);
  if (da != db) return da < db;
  static const TermOrder o = TermOrder::grevlex();
  return o.less(b, a, R);
}

// Exponent vectors with total degree <= dmax and exact weight `target`.
// `prune(e, i)` is consulted each time e[i] is raised above zero; returning
// true abandons the branch (the property must be downward-persistent, e.g.
// divisibility by a fixed monomial set).
template <class Emit, class Prune>
void dfs_weight_enum(const std::vector<int>& w, long long target, int dmax, Emit&& emit,
                     Prune&& prune) {
  const int n = static_cast<int>(w.size());
  std::vector<int> minw(n + 1, 0), maxw(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    minw[i] = std::min({0, minw[i + 1], w[i]});
    maxw[i] = std::max({0, maxw[i + 1], w[i]});
  }
  std::vector<int> e(n, 0);
  std::function<void(int, long long, int)> rec = [&](int i, long long wt, int rem) {
    const long long need = target - wt;
    if (need < static_cast<long long>(rem) * minw[i] ||
        need > static_cast<long long>(rem) * maxw[i])
      return;
    if (i == n) {
      if (need == 0) emit(e);
      return;
    }
    for (e[i] = 0; e[i] <= rem; ++e[i]) {
      if (e[i] > 0 && prune(e, i)) break;
      rec(i + 1, wt + static_cast<long long>(e[i]) * w[i], rem - e[i]);
    }
    e[i] = 0;
  };
  rec(0, 0, dmax);
}

bool divisible_by_any(const std::vector<int>& e, const std::vector<Monomial>& ms) {
  for (const auto& m : ms) {
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (m.e[i] > e[i]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// Monomials of exact total degree d and weight a over the given weights.
long long count_weight_monomials(const std::vector<int>& w, long long a, int d) {
  if (d < 0) return 0;
  int lo = 0, hi = 0;
  for (int wi : w) {
    lo = std::min(lo, wi);
    hi = std::max(hi, wi);
  }
  const long long LO = static_cast<long long>(d) * lo;
  const long long HI = static_cast<long long>(d) * hi;
  if (a < LO || a > HI) return 0;
  const int width = static_cast<int>(HI - LO + 1);
  // dp[deg][weight - LO]; variables admit unbounded exponents, so the update
  // for one variable may reuse its own partial results at lower degree.
  std::vector<std::vector<long long>> dp(d + 1, std::vector<long long>(width, 0));
  dp[0][static_cast<int>(-LO)] = 1;
  for (int wi : w) {
    for (int deg = 1; deg <= d; ++deg) {
      for (int t = 0; t < width; ++t) {
        const long long pw = t + LO - wi;
        if (pw < LO || pw > HI) continue;
        dp[deg][t] += dp[deg - 1][static_cast<int>(pw - LO)];
      }
    }
  }
  return dp[d][static_cast<int>(a - LO)];
}

int max_abs_weight(const WeightSystem& ws) {
  int m = 0;
  for (int w : ws.weights) m = std::max(m, std::abs(w));
  return m;
}

// Greedy factorization of an invariant monomial through the Hilbert basis;
// the result is an exponent vector over the Y variables.  Any two
// factorizations differ by an element of the toric ideal, which is always
// part of the relation candidate pool, so the greedy choice is harmless.
std::vector<int> hb_factorize(const Monomial& u0, const std::vector<Monomial>& basis) {
  std::vector<int> a(basis.size(), 0);
  Monomial u = u0;
  while (!u.is_one()) {
    bool hit = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (mono_divides(basis[i], u)) {
        u = mono_div(u, basis[i]);
        ++a[i];
        hit = true;
        break;
      }
    }
    if (!hit) fail(Errc::Internal, "invariant monomial does not factor through the Hilbert basis");
  }
  return a;
}

Polynomial y_monomial(const RingPtr& y_ring, const std::vector<int>& exps, const Rational& c) {
  Monomial m(y_ring->arity());
  m.e = exps;
  return Polynomial::term(y_ring, std::move(m), c);
}

// Divide out the largest power of variable `var` present in every term.
Polynomial divide_out_variable(const Polynomial& g, int var) {
  if (g.is_zero()) return g;
  int mn = INT_MAX;
  for (const auto& t : g.terms()) mn = std::min(mn, t.m.e[var]);
  if (mn == 0) return g;
  std::vector<Term> ts = g.terms();
  for (auto& t : ts) t.m.e[var] -= mn;
  Polynomial out = Polynomial::zero(g.ring());
  out.set_terms(std::move(ts), TermOrder::grevlex());
  return out;
}

}  // namespace

WeightSystem validate_weights(const std::vector<int>& a, const EngineLimits& lim) {
  if (a.empty()) fail(Errc::TooFewPositive, "empty weight vector");
  if (static_cast<int>(a.size()) > lim.max_arity)
    fail(Errc::CapExceeded, "weight vector longer than the configured arity cap");
  WeightSystem ws;
  ws.weights = a;
  long long sum = 0;
  long long g = 0;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (a[i] > 0) {
      ws.positive_vars.push_back(i);
      ws.n_plus += a[i];
    } else if (a[i] < 0) {
      ws.negative_vars.push_back(i);
      ws.n_minus -= a[i];
    }
    sum += a[i];
    g = std::gcd(g, static_cast<long long>(std::abs(a[i])));
  }
  if (ws.positive_vars.size() < 2)
    fail(Errc::TooFewPositive, "need at least two strictly positive weights");
  if (ws.negative_vars.size() < 2)
    fail(Errc::TooFewNegative, "need at least two strictly negative weights");
  if (g != 1) fail(Errc::GcdNotOne, "weights must have gcd 1, got " + std::to_string(g));
  ws.n_cap = std::min(ws.n_plus, ws.n_minus);
  ws.sum_zero = (sum == 0);

  std::vector<std::string> names(a.size());
  int px = 0, py = 0, pz = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0)
      names[i] = "x" + std::to_string(++px);
    else if (a[i] < 0)
      names[i] = "y" + std::to_string(++py);
    else
      names[i] = "z" + std::to_string(++pz);
  }
  std::vector<long> wl(a.begin(), a.end());
  ws.ring = make_ring(std::move(names), {}, std::move(wl));
  return ws;
}

long long weight_space_dim(const WeightSystem& ws, int a, int d) {
  if (d < 0) return 0;
  if (d > 4096) fail(Errc::CapExceeded, "weight-space degree out of range");
  return count_weight_monomials(ws.weights, a, d);
}

SeriesTruncation hilbert_series(const WeightSystem& ws, int a, int D, const EngineLimits& lim) {
  if (D < 0 || D > lim.max_degree)
    fail(Errc::TruncationTooLarge,
         "truncation " + std::to_string(D) + " exceeds the cap " + std::to_string(lim.max_degree));
  SeriesTruncation s;
  s.truncation = D;
  s.coefficients.reserve(D + 1);
  for (int d = 0; d <= D; ++d) s.coefficients.push_back(weight_space_dim(ws, a, d));
  return s;
}

HilbertBasisResult invariant_hilbert_basis(const WeightSystem& ws, const EngineLimits& lim) {
  const auto& R = *ws.ring;
  HilbertBasisResult out;
  out.degree_bound = 2 * std::max(ws.n_plus, ws.n_minus) * ws.arity();

  std::vector<Monomial> inv;
  dfs_weight_enum(
      ws.weights, 0, out.degree_bound,
      [&](const std::vector<int>& e) {
        Monomial m(ws.arity());
        m.e = e;
        if (!m.is_one()) inv.push_back(std::move(m));
      },
      [](const std::vector<int>&, int) { return false; });
  std::sort(inv.begin(), inv.end(),
            [&](const Monomial& x, const Monomial& y) { return mono_before(x, y, R); });

  for (const auto& m : inv) {
    if (!divisible_by_any(m.e, out.basis)) {
      out.basis.push_back(m);
      if (out.basis.size() > lim.max_basis)
        fail(Errc::CapExceeded, "invariant Hilbert basis exceeds the basis cap");
    }
  }
  // Closure below the bound: every enumerated invariant must factor
  // completely through the collected basis.
  for (const auto& m : inv) {
    Monomial r = m;
    while (!r.is_one()) {
      bool hit = false;
      for (const auto& h : out.basis) {
        if (mono_divides(h, r)) {
          r = mono_div(r, h);
          hit = true;
          break;
        }
      }
      if (!hit) fail(Errc::Internal, "invariant monoid not closed under the computed basis");
    }
  }
  out.closure_checked = true;
  return out;
}

ToricPresentation toric_presentation(const WeightSystem& ws, const EngineLimits& lim) {
  HilbertBasisResult hb = invariant_hilbert_basis(ws, lim);
  ToricPresentation out;
  out.basis = std::move(hb.basis);
  out.basis_degree_bound = hb.degree_bound;
  const int s = static_cast<int>(out.basis.size());
  if (s > lim.max_arity)
    fail(Errc::CapExceeded, "Hilbert basis larger than the arity cap for the presentation ring");

  // Name Y_{ij} when every basis monomial is a positive-negative variable
  // pair; otherwise fall back to Y1..Ys.  In the paired case the variables
  // are listed row-major by (positive index, negative index).
  bool paired = true;
  for (const auto& m : out.basis) {
    int pos = -1, neg = -1;
    bool ok = (m.total() == 2);
    for (int i = 0; ok && i < ws.arity(); ++i) {
      if (m.e[i] == 0) continue;
      if (m.e[i] != 1) ok = false;
      else if (ws.weights[i] > 0 && pos < 0) pos = i;
      else if (ws.weights[i] < 0 && neg < 0) neg = i;
      else ok = false;
    }
    if (!ok || pos < 0 || neg < 0) {
      paired = false;
      break;
    }
  }
  auto side_index = [](const std::vector<int>& side, int var) {
    return static_cast<int>(std::find(side.begin(), side.end(), var) - side.begin());
  };
  std::vector<std::string> names(s);
  if (paired) {
    std::sort(out.basis.begin(), out.basis.end(), [&](const Monomial& x, const Monomial& y) {
      auto key = [&](const Monomial& m) {
        int pos = 0, neg = 0;
        for (int i = 0; i < ws.arity(); ++i)
          if (m.e[i]) (ws.weights[i] > 0 ? pos : neg) = i;
        return std::pair<int, int>(side_index(ws.positive_vars, pos),
                                   side_index(ws.negative_vars, neg));
      };
      return key(x) < key(y);
    });
    for (int c = 0; c < s; ++c) {
      int pos = 0, neg = 0;
      for (int i = 0; i < ws.arity(); ++i)
        if (out.basis[c].e[i]) (ws.weights[i] > 0 ? pos : neg) = i;
      names[c] = "Y" + std::to_string(side_index(ws.positive_vars, pos) + 1) +
                 std::to_string(side_index(ws.negative_vars, neg) + 1);
    }
  } else {
    for (int c = 0; c < s; ++c) names[c] = "Y" + std::to_string(c + 1);
  }
  std::vector<int> degs(s);
  for (int c = 0; c < s; ++c) degs[c] = out.basis[c].total();
  out.y_ring = make_ring(names, degs);

  // Lattice of exponent relations among the basis monomials.
  std::vector<std::vector<long>> mat(ws.arity(), std::vector<long>(s, 0));
  for (int r = 0; r < ws.arity(); ++r)
    for (int c = 0; c < s; ++c) mat[r][c] = out.basis[c].e[r];
  std::vector<Polynomial> gens;
  for (const auto& v : integer_kernel_basis(mat)) {
    std::vector<int> plus(s, 0), minus(s, 0);
    for (int c = 0; c < s; ++c) {
      if (v[c] > 0) plus[c] = static_cast<int>(v[c]);
      if (v[c] < 0) minus[c] = static_cast<int>(-v[c]);
    }
    gens.push_back(y_monomial(out.y_ring, plus, 1) - y_monomial(out.y_ring, minus, 1));
  }

  // Saturate with respect to every variable in turn: a lattice-basis ideal
  // saturated at all Y_i is the full toric kernel, which is prime.  Each step
  // uses a graded reverse-lex order with the chosen variable cheapest, under
  // which a homogeneous ideal's saturation is read off by dividing the basis
  // elements by that variable.
  for (int i = 0; i < s && !gens.empty(); ++i) {
    std::vector<int> perm;  // source index for each permuted slot; `i` last
    for (int j = 0; j < s; ++j)
      if (j != i) perm.push_back(j);
    perm.push_back(i);
    std::vector<std::string> pnames(s);
    std::vector<int> pdegs(s);
    for (int slot = 0; slot < s; ++slot) {
      pnames[slot] = out.y_ring->vars[perm[slot]];
      pdegs[slot] = out.y_ring->degs[perm[slot]];
    }
    RingPtr pring = make_ring(pnames, pdegs);
    std::vector<Polynomial> fwd(s, Polynomial::zero(pring)), back(s, Polynomial::zero(out.y_ring));
    for (int slot = 0; slot < s; ++slot) {
      fwd[perm[slot]] = Polynomial::variable(pring, slot);
      back[slot] = Polynomial::variable(out.y_ring, perm[slot]);
    }
    std::vector<Polynomial> mapped;
    for (const auto& gpoly : gens) mapped.push_back(gpoly.substitute(pring, fwd));
    GroebnerBasis gb = groebner(std::move(mapped), TermOrder::grevlex(), lim);
    std::vector<Polynomial> next;
    for (const auto& gpoly : gb.gens)
      next.push_back(divide_out_variable(gpoly, s - 1).substitute(out.y_ring, back));
    gens = std::move(next);
  }

  // Present the kernel as its reduced lexicographic Groebner basis.
  if (!gens.empty()) {
    GroebnerBasis lexgb = groebner(std::move(gens), TermOrder::lex(), lim);
    out.relations = lexgb.gens;
    for (auto& rel : out.relations) rel.resort(TermOrder::grevlex());
  }
  for (const auto& rel : out.relations)
    if (rel.terms().size() != 2) out.binomial = false;
  return out;
}

CovariantModule covariant_presentation(const WeightSystem& ws, int a, int truncation,
                                       const EngineLimits& lim) {
  if (truncation < 0 || truncation > lim.max_degree)
    fail(Errc::TruncationTooLarge, "truncation exceeds the configured cap");
  ToricPresentation toric = toric_presentation(ws, lim);
  const auto& R = *ws.ring;
  const int n = ws.arity();
  const int maxA = max_abs_weight(ws);

  CovariantModule out;
  out.weight = a;
  // Any weight-a monomial beyond this degree has an invariant divisor: if
  // some exponent reaches max|a|, a pair x_i^{|a_j|} y_j^{a_i} fits inside,
  // and otherwise every exponent is below max|a|.
  out.generator_degree_bound = std::abs(a) + 2 * n * maxA * maxA + n * maxA;
  std::vector<Monomial> gens;
  dfs_weight_enum(
      ws.weights, a, out.generator_degree_bound,
      [&](const std::vector<int>& e) {
        Monomial m(n);
        m.e = e;
        gens.push_back(std::move(m));
      },
      [&](const std::vector<int>& e, int) { return divisible_by_any(e, toric.basis); });
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& x, const Monomial& y) { return mono_before(x, y, R); });
  if (gens.size() > lim.max_basis) fail(Errc::CapExceeded, "too many covariant generators");
  out.generators = gens;
  const int k = static_cast<int>(gens.size());

  if (k == 0) {
    out.presentation = Presentation{toric.y_ring, {}, {}};
    out.hilbert = hilbert_series(ws, a, truncation, lim);
    return out;
  }

  std::vector<long> shifts(k);
  int max_gen_deg = 0, max_hb_deg = 0;
  for (int i = 0; i < k; ++i) {
    shifts[i] = gens[i].total();
    max_gen_deg = std::max(max_gen_deg, gens[i].total());
  }
  for (const auto& h : toric.basis) max_hb_deg = std::max(max_hb_deg, h.total());
  out.relation_degree_bound = std::max(truncation, 2 * (max_hb_deg + max_gen_deg));

  // Candidate relations: toric-ideal multiples of each generator slot plus
  // every binomial collision g_i * u = g_j * v with u, v invariant, up to the
  // degree bound.  Every kernel element in bounded degree is a combination
  // of these.
  std::vector<ModVec> pool;
  for (const auto& rel : toric.relations) {
    for (int i = 0; i < k; ++i) {
      std::vector<Polynomial> entries(k, Polynomial::zero(toric.y_ring));
      entries[i] = rel;
      pool.push_back(ModVec::from_entries(entries));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Monomial gcd = mono_gcd(gens[i], gens[j]);
      const Monomial wj = mono_div(gens[j], gcd);  // u must be a multiple of this
      const Monomial wi = mono_div(gens[i], gcd);
      const int budget = out.relation_degree_bound - gens[i].total() - wj.total();
      if (budget < 0) continue;
      dfs_weight_enum(
          ws.weights, -tweight(wj, R), budget,
          [&](const std::vector<int>& e) {
            Monomial t(n);
            t.e = e;
            const Monomial u = mono_mul(wj, t);
            const Monomial v = mono_mul(wi, t);
            ModVec col = ModVec::term(toric.y_ring, k, i,
                                      Monomial(std::vector<int>(hb_factorize(u, toric.basis))),
                                      Rational(1));
            ModVec rhs = ModVec::term(toric.y_ring, k, j,
                                      Monomial(std::vector<int>(hb_factorize(v, toric.basis))),
                                      Rational(1));
            pool.push_back(mod_add(col, -rhs, TermOrder::grevlex()));
            if (pool.size() > 20 * lim.max_basis)
              fail(Errc::CapExceeded, "covariant relation pool exceeds the cap");
          },
          [&](const std::vector<int>& e, int) { return divisible_by_any(e, toric.basis); });
    }
  }
  std::vector<ModVec> rels = minimal_generators(pool, shifts, lim);
  out.presentation = Presentation{toric.y_ring, shifts, std::move(rels)};
  validate_presentation(out.presentation);

  // Certification: the cokernel's graded dimensions must reproduce the
  // lattice counts well past the relation bound.
  out.certified_to =
      std::min(std::max(truncation, 2 * out.relation_degree_bound), lim.max_degree);
  std::vector<BigInt> dims = graded_dimensions(out.presentation, out.certified_to, lim);
  for (int d = 0; d <= out.certified_to; ++d) {
    if (dims[d] != BigInt(static_cast<long>(weight_space_dim(ws, a, d))))
      fail(Errc::TruncationInsufficient,
           "covariant presentation misses the lattice count in degree " + std::to_string(d));
  }
  out.hilbert = hilbert_series(ws, a, truncation, lim);
  return out;
}

CovariantCmReport cm_check_covariant(const WeightSystem& ws, int a, const EngineLimits& lim) {
  CovariantModule cm = covariant_presentation(ws, a, 8, lim);
  const int dim_r = ws.arity() - 1;
  CovariantCmReport rep;
  rep.weight = a;
  rep.dimension = dim_r;
  if (cm.generators.empty()) {  // zero module: vacuously Cohen-Macaulay
    rep.projective_dimension = 0;
    rep.depth = dim_r;
    rep.cm = true;
    return rep;
  }
  DepthReport dr = depth_and_cm(cm.presentation, dim_r, lim);
  rep.projective_dimension = dr.projective_dimension;
  rep.depth = dr.depth;
  rep.cm = dr.cm;
  return rep;
}

GorensteinReport gorenstein_check(const WeightSystem& ws, const EngineLimits& lim) {
  if (!ws.sum_zero)
    fail(Errc::SumNotZero, "the symmetric-numerator criterion needs the weights to sum to zero");
  CovariantModule r0 = covariant_presentation(ws, 0, 8, lim);
  FreeResolution fr = free_resolution(r0.presentation, lim);
  const int s = r0.presentation.ring->arity();
  const int dim_r = ws.arity() - 1;

  ZPoly num = hilbert_numerator(fr);
  if (krull_dimension_from_numerator(num, s) != dim_r)
    fail(Errc::Internal, "Hilbert-series pole order disagrees with the expected dimension");
  if (s - fr.projective_dimension() != dim_r)
    fail(Errc::Internal, "invariant ring failed Cohen-Macaulay certification");

  GorensteinReport rep;
  rep.cm_certified = true;
  const int want = ((s - dim_r) % 2 == 0) ? 1 : -1;
  rep.gorenstein = (palindrome_sign(num) == want);

  // Reduced display form: cancel (1 - t^d) factors that divide the numerator.
  ZPoly q = num;
  zp_trim(q);
  std::vector<int> remaining(r0.presentation.ring->degs);
  std::sort(remaining.begin(), remaining.end());
  for (std::size_t i = 0; i < remaining.size();) {
    const std::size_t d = static_cast<std::size_t>(remaining[i]);
    if (q.size() <= d) {
      ++i;
      continue;
    }
    // q = (1 - t^d) h  <=>  h[k] = q[k] + h[k-d]; exact iff the top d
    // partial sums vanish.
    ZPoly h(q.size(), BigInt(0));
    for (std::size_t kdx = 0; kdx < q.size(); ++kdx)
      h[kdx] = q[kdx] + (kdx >= d ? h[kdx - d] : BigInt(0));
    bool exact = true;
    for (std::size_t kdx = q.size() - d; kdx < q.size(); ++kdx)
      if (h[kdx] != 0) exact = false;
    if (exact) {
      q.assign(h.begin(), h.end() - d);
      zp_trim(q);
      remaining.erase(remaining.begin() + i);
    } else {
      ++i;
    }
  }
  rep.numerator = q;
  rep.denominator_degrees = remaining;
  return rep;
}

int local_cohomology_weight_bound(const WeightSystem& ws, char sign) {
  if (sign != '+' && sign != '-') fail(Errc::SyntaxError, "sign must be '+' or '-'");
  const auto& side = (sign == '+') ? ws.positive_vars : ws.negative_vars;
  // The top Cech cohomology on the side's variables is spanned by monomials
  // with every side exponent <= -1 and the others >= 0.  In the side's own
  // orientation the weight is maximal at the corner where each side exponent
  // is exactly -1 and the rest vanish.
  int bound = 0;
  for (int i : side) bound += std::abs(ws.weights[i]);
  return -bound;
}

bool koszul_identity_check(const WeightSystem& ws, int a, int D, const EngineLimits& lim) {
  if (D < 0 || D > lim.max_degree) fail(Errc::CapExceeded, "degree window exceeds the cap");
  const auto& pos = ws.positive_vars;
  std::vector<int> rest_w;
  for (int i = 0; i < ws.arity(); ++i)
    if (ws.weights[i] <= 0) rest_w.push_back(ws.weights[i]);
  const int p = static_cast<int>(pos.size());
  for (int d = 0; d <= D; ++d) {
    const long long rhs = count_weight_monomials(rest_w, a, d);
    long long lhs = 0;
    for (int mask = 0; mask < (1 << p); ++mask) {
      int tsz = 0;
      long long tw = 0;
      for (int b = 0; b < p; ++b)
        if (mask & (1 << b)) {
          ++tsz;
          tw += ws.weights[pos[b]];
        }
      if (d - tsz < 0) continue;
      const long long term = count_weight_monomials(ws.weights, a - tw, d - tsz);
      lhs += (tsz % 2 == 0) ? term : -term;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

long long QuiverDescriptor::graded_dim(int m, int n, int d) const {
  const auto& blk = blocks.at(n - m);
  if (d < 0 || d > blk.hilbert.truncation) fail(Errc::TruncationTooLarge, "degree out of range");
  return blk.hilbert.coefficients[d];
}

QuiverDescriptor nccr_quiver(const WeightSystem& ws, int truncation, const EngineLimits& lim) {
  if (!ws.sum_zero) fail(Errc::SumNotZero, "the quiver construction assumes weights summing to zero");
  QuiverDescriptor q;
  q.vertex_count = ws.n_cap;
  q.toric = toric_presentation(ws, lim);
  const int N = q.vertex_count;
  for (int w = -(N - 1); w <= N - 1; ++w)
    q.blocks.emplace(w, covariant_presentation(ws, w, truncation, lim));

  for (int m = 0; m < N; ++m) {
    for (int n = 0; n < N; ++n) {
      if (m == n) continue;
      const CovariantModule& blk = q.blocks.at(n - m);
      QuiverArrows ar;
      ar.source = m;
      ar.target = n;
      for (const auto& g : blk.generators) {
        // g factors through vertex k when g = g1 * g2 with both parts
        // nonconstant and m + weight(g1) = k a vertex.  Minimal generators
        // have no invariant divisor, so k != m, n automatically.
        bool factors = false;
        std::vector<int> div(ws.arity(), 0);
        std::function<void(int)> walk = [&](int i) {
          if (factors) return;
          if (i == ws.arity()) {
            long total = 0, full = 0;
            for (int v = 0; v < ws.arity(); ++v) {
              total += div[v];
              full += g.e[v];
            }
            if (total == 0 || total == full) return;
            long w1 = 0;
            for (int v = 0; v < ws.arity(); ++v) w1 += static_cast<long>(div[v]) * ws.weights[v];
            const long kvert = m + w1;
            if (kvert >= 0 && kvert < N) factors = true;
            return;
          }
          for (div[i] = 0; div[i] <= g.e[i] && !factors; ++div[i]) walk(i + 1);
          div[i] = 0;
        };
        walk(0);
        if (!factors) ar.arrows.push_back(g);
      }
      q.arrows.push_back(std::move(ar));
    }
  }
  return q;
}

bool end_ring_check(const WeightSystem& ws, int D, const EngineLimits& lim) {
  if (!ws.sum_zero) fail(Errc::SumNotZero, "endomorphism comparison assumes weights summing to zero");
  if (D < 0 || D > lim.max_degree) fail(Errc::CapExceeded, "degree window exceeds the cap");
  const int N = ws.n_cap;
  std::map<int, CovariantModule> mods;
  for (int a = 0; a < N; ++a) mods.emplace(a, covariant_presentation(ws, a, D, lim));
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      Presentation h = hom_module(mods.at(a).presentation, mods.at(b).presentation, lim);
      long lo = 0;
      for (long sft : h.gen_shifts) lo = std::min(lo, sft);
      std::vector<BigInt> dims = graded_dimensions_range(h, static_cast<int>(lo), D, lim);
      for (int d = static_cast<int>(lo); d <= D; ++d) {
        const BigInt expect = d < 0 ? BigInt(0) : BigInt(static_cast<long>(weight_space_dim(ws, b - a, d)));
        if (dims[d - lo] != expect) return false;
      }
    }
  }
  return true;
}

bool bidual_product_check(const WeightSystem& ws, int a, int b, int D, const EngineLimits& lim) {
  if (!ws.sum_zero) fail(Errc::SumNotZero, "bidual comparison assumes weights summing to zero");
  if (D < 0 || D > lim.max_degree) fail(Errc::CapExceeded, "degree window exceeds the cap");
  ToricPresentation toric = toric_presentation(ws, lim);
  CovariantModule A = covariant_presentation(ws, a, D, lim);
  CovariantModule B = covariant_presentation(ws, b, D, lim);
  CovariantModule AB = covariant_presentation(ws, a + b, D, lim);
  CovariantModule R0 = covariant_presentation(ws, 0, D, lim);

  // The product module S_a * S_b inside S_{a+b}, written over AB's generators.
  std::vector<ModVec> vecs;
  const int kab = static_cast<int>(AB.generators.size());
  for (const auto& g : A.generators) {
    for (const auto& h : B.generators) {
      const Monomial p = mono_mul(g, h);
      int slot = -1;
      for (int l = 0; l < kab; ++l)
        if (mono_divides(AB.generators[l], p)) {
          slot = l;
          break;
        }
      if (slot < 0) fail(Errc::Internal, "product monomial not covered by the ambient generators");
      const Monomial u = mono_div(p, AB.generators[slot]);
      vecs.push_back(ModVec::term(toric.y_ring, kab, slot,
                                  Monomial(std::vector<int>(hb_factorize(u, toric.basis))),
                                  Rational(1)));
    }
  }
  Presentation prod = submodule_presentation(AB.presentation, vecs, lim);
  Presentation dual = hom_module(prod, R0.presentation, lim);
  Presentation bidual = hom_module(dual, R0.presentation, lim);

  long lo = 0;
  for (long sft : bidual.gen_shifts) lo = std::min(lo, sft);
  std::vector<BigInt> dims = graded_dimensions_range(bidual, static_cast<int>(lo), D, lim);
  for (int d = static_cast<int>(lo); d <= D; ++d) {
    const BigInt expect = d < 0 ? BigInt(0) : BigInt(static_cast<long>(weight_space_dim(ws, a + b, d)));
    if (dims[d - lo] != expect) return false;
  }
  return true;
}

}  // namespace nccr
