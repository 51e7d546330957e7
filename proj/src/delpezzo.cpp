#include "nccr/delpezzo.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace nccr {

namespace {

DivisorClass vec_add(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DivisorClass vec_sub(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

DivisorClass vec_scale(long c, const DivisorClass& a) {
  DivisorClass r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

void check_dim(const SurfaceLattice& s, const DivisorClass& a) {
  if (static_cast<int>(a.size()) != s.rank)
    fail(Errc::LatticeMismatch, "divisor class has " + std::to_string(a.size()) +
                                    " coordinates, lattice rank is " + std::to_string(s.rank));
}

// Enumerates solutions of sum(m) = target_sum, sum(m^2) = target_sq over the
// blowup multiplicities; each solution becomes the class dH - sum m_i E_i.
void multiplicity_dfs(int pos, int p, long target_sum, long target_sq, long d,
                      std::vector<long>& m, std::vector<DivisorClass>& out) {
  int rem = p - pos;
  if (target_sq < 0) return;
  if (rem == 0) {
    if (target_sum != 0 || target_sq != 0) return;
    DivisorClass c(1 + p);
    c[0] = d;
    for (int i = 0; i < p; ++i) c[1 + i] = -m[i];
    out.push_back(c);
    return;
  }
  // Cauchy-Schwarz: a sum S over rem entries needs sum of squares >= S^2/rem.
  if (target_sum * target_sum > static_cast<long>(rem) * target_sq) return;
  long span = 0;
  while (span * span <= target_sq) ++span;
  for (long v = -span; v <= span; ++v) {
    m[pos] = v;
    multiplicity_dfs(pos + 1, p, target_sum - v, target_sq - v * v, d, m, out);
  }
  m[pos] = 0;
}

std::vector<DivisorClass> compute_minus_ones(int p) {
  std::vector<DivisorClass> out;
  std::vector<long> m(p, 0);
  for (long d = -2; d <= 8; ++d) {
    // C = dH - sum m_i E_i with C.C = -1 and C.K = -1 forces
    // sum m_i = 3d - 1 and sum m_i^2 = d^2 + 1.
    multiplicity_dfs(0, p, 3 * d - 1, d * d + 1, d, m, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<DivisorClass>& minus_ones_cached(const SurfaceLattice& s) {
  static const std::vector<DivisorClass> none;
  if (s.kind == SurfaceLattice::Kind::Quadric) return none;
  static std::vector<std::vector<DivisorClass>> cache(9);
  static std::vector<char> ready(9, 0);
  int p = s.blowups;
  if (!ready[p]) {
    cache[p] = compute_minus_ones(p);
    ready[p] = 1;
  }
  return cache[p];
}

long long chi_line(const SurfaceLattice& s, const DivisorClass& d) {
  long dd = pair_classes(s, d, d);
  long dk = pair_classes(s, d, s.canonical);
  return 1 + (dd - dk) / 2;
}

// Sections of O(D): subtracting a (-1)-class that pairs negatively with D
// does not change h0, and a class pairing negatively with an ample or nef
// class has no sections.  Once nothing peels and D is nef, higher cohomology
// vanishes and h0 equals the Euler characteristic.
long long h0_sections(const SurfaceLattice& s, DivisorClass d) {
  const auto& ones = minus_ones_cached(s);
  DivisorClass minus_k = vec_scale(-1, s.canonical);
  while (true) {
    if (pair_classes(s, d, minus_k) < 0) return 0;
    bool peeled = false;
    for (const auto& c : ones) {
      if (pair_classes(s, d, c) < 0) {
        d = vec_sub(d, c);
        peeled = true;
        break;
      }
    }
    if (!peeled) break;
  }
  for (const auto& g : mori_generators(s)) {
    if (pair_classes(s, d, g) < 0) return 0;
  }
  long long chi = chi_line(s, d);
  if (chi < 0) fail(Errc::Internal, "negative Euler characteristic for a nef class");
  return chi;
}

// Smallest j >= from with base + j*step ample; the step being ample
// guarantees termination and that ampleness persists for larger j.
int ample_onset(const SurfaceLattice& s, const DivisorClass& base, const DivisorClass& step,
                int from) {
  for (int j = from; j < from + 100000; ++j) {
    DivisorClass t = vec_add(base, vec_scale(j, step));
    if (is_ample(s, t)) return j;
  }
  fail(Errc::Internal, "ample sweep bound not found");
}

void require_ample(const SurfaceLattice& s, const DivisorClass& l) {
  check_dim(s, l);
  if (!is_ample(s, l)) fail(Errc::NotAmple, "polarization is not ample");
}

Rational self_intersection_half(const SurfaceLattice& s, const DivisorClass& d) {
  return make_rational(pair_classes(s, d, d), 2);
}

}  // namespace

SurfaceLattice make_blowup_surface(int p) {
  if (p < 0) fail(Errc::SyntaxError, "negative number of blowups");
  if (p > 8) fail(Errc::TooManyPoints, "at most 8 points can be blown up");
  SurfaceLattice s;
  s.kind = SurfaceLattice::Kind::Blowup;
  s.blowups = p;
  s.rank = 1 + p;
  s.basis_names.push_back("H");
  for (int i = 1; i <= p; ++i) s.basis_names.push_back("E" + std::to_string(i));
  s.form.assign(s.rank, std::vector<long>(s.rank, 0));
  s.form[0][0] = 1;
  for (int i = 1; i <= p; ++i) s.form[i][i] = -1;
  s.canonical.assign(s.rank, 1);
  s.canonical[0] = -3;
  s.name = (p == 0) ? "P2" : "dP" + std::to_string(p);
  return s;
}

SurfaceLattice make_quadric_surface() {
  SurfaceLattice s;
  s.kind = SurfaceLattice::Kind::Quadric;
  s.blowups = 0;
  s.rank = 2;
  s.basis_names = {"f1", "f2"};
  s.form = {{0, 1}, {1, 0}};
  s.canonical = {-2, -2};
  s.name = "P1xP1";
  return s;
}

SurfaceLattice make_surface(const std::string& name) {
  if (name == "P2") return make_blowup_surface(0);
  if (name == "P1xP1") return make_quadric_surface();
  if (name.size() > 2 && name[0] == 'd' && name[1] == 'P') {
    const std::string digits = name.substr(2);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(Errc::SyntaxError, "unknown surface '" + name + "'");
    long p = std::strtol(digits.c_str(), nullptr, 10);
    if (p > 8) fail(Errc::TooManyPoints, "at most 8 points can be blown up");
    return make_blowup_surface(static_cast<int>(p));
  }
  fail(Errc::SyntaxError, "unknown surface '" + name + "' (expected P2, dP1..dP8 or P1xP1)");
}

long pair_classes(const SurfaceLattice& s, const DivisorClass& a, const DivisorClass& b) {
  check_dim(s, a);
  check_dim(s, b);
  long acc = 0;
  for (int i = 0; i < s.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < s.rank; ++j) {
      if (s.form[i][j] != 0) acc += a[i] * s.form[i][j] * b[j];
    }
  }
  return acc;
}

std::vector<DivisorClass> minus_one_classes(const SurfaceLattice& s) {
  return minus_ones_cached(s);
}

std::vector<DivisorClass> mori_generators(const SurfaceLattice& s) {
  if (s.kind == SurfaceLattice::Kind::Quadric) return {{1, 0}, {0, 1}};
  std::vector<DivisorClass> gens = minus_ones_cached(s);
  if (s.blowups == 0) gens.push_back({1});
  if (s.blowups == 1) gens.push_back({1, -1});  // the ruling H - E1
  return gens;
}

bool is_ample(const SurfaceLattice& s, const DivisorClass& l) {
  check_dim(s, l);
  if (pair_classes(s, l, l) <= 0) return false;
  for (const auto& g : mori_generators(s)) {
    if (pair_classes(s, l, g) <= 0) return false;
  }
  return true;
}

NumericalClass line_bundle_class(const SurfaceLattice& s, const DivisorClass& d) {
  check_dim(s, d);
  NumericalClass e;
  e.rank = 1;
  e.c1 = d;
  e.ch2 = self_intersection_half(s, d);
  return e;
}

void validate_class(const SurfaceLattice& s, const NumericalClass& e) {
  check_dim(s, e.c1);
  Rational twice = e.ch2 * 2;
  if (!is_integer(twice))
    fail(Errc::NonIntegralResult, "ch2 must have denominator dividing 2");
}

long euler_form(const SurfaceLattice& s, const NumericalClass& e, const NumericalClass& f) {
  validate_class(s, e);
  validate_class(s, f);
  // chi(E,F) = rr' + r ch2' + r' ch2 - c1.c1' - K.(r c1' - r' c1)/2
  Rational chi = Rational(e.rank) * Rational(f.rank);
  chi += Rational(e.rank) * f.ch2;
  chi += Rational(f.rank) * e.ch2;
  chi -= Rational(pair_classes(s, e.c1, f.c1));
  DivisorClass mixed = vec_sub(vec_scale(e.rank, f.c1), vec_scale(f.rank, e.c1));
  chi -= make_rational(pair_classes(s, s.canonical, mixed), 2);
  if (!is_integer(chi))
    fail(Errc::NonIntegralResult, "Euler pairing is not an integer for these classes");
  return static_cast<long>(chi.get_num().get_si());
}

Rational slope(const SurfaceLattice& s, const NumericalClass& e) {
  validate_class(s, e);
  if (e.rank == 0) fail(Errc::ZeroRank, "slope requires nonzero rank");
  return make_rational(-pair_classes(s, e.c1, s.canonical), e.rank);
}

NumericalClass mutate(const SurfaceLattice& s, const NumericalClass& e, const NumericalClass& f,
                      MutationSide side) {
  long chi = euler_form(s, e, f);
  NumericalClass r;
  if (side == MutationSide::Left) {
    r.rank = chi * e.rank - f.rank;
    r.c1 = vec_sub(vec_scale(chi, e.c1), f.c1);
    r.ch2 = Rational(chi) * e.ch2 - f.ch2;
  } else {
    r.rank = chi * f.rank - e.rank;
    r.c1 = vec_sub(vec_scale(chi, f.c1), e.c1);
    r.ch2 = Rational(chi) * f.ch2 - e.ch2;
  }
  return r;
}

NumericalClass helix_twist(const SurfaceLattice& s, const NumericalClass& e, int j) {
  validate_class(s, e);
  DivisorClass shift = vec_scale(-j, s.canonical);  // -jK
  NumericalClass r;
  r.rank = e.rank;
  r.c1 = vec_add(e.c1, vec_scale(e.rank, shift));
  long k2 = pair_classes(s, s.canonical, s.canonical);
  r.ch2 = e.ch2 + Rational(pair_classes(s, e.c1, shift)) +
          Rational(e.rank) * make_rational(static_cast<long>(j) * j * k2, 2);
  return r;
}

CohomologyTriple line_bundle_cohomology(const SurfaceLattice& s, const DivisorClass& d) {
  check_dim(s, d);
  CohomologyTriple t;
  t.h0 = h0_sections(s, d);
  t.h2 = h0_sections(s, vec_sub(s.canonical, d));  // Serre duality
  long long chi = chi_line(s, d);
  t.h1 = t.h0 + t.h2 - chi;  // Riemann-Roch closure
  if (t.h1 < 0) fail(Errc::Internal, "Riemann-Roch closure produced negative h1");
  return t;
}

CollectionCheck strong_collection_check(const SurfaceLattice& s,
                                        const std::vector<DivisorClass>& ds) {
  for (const auto& d : ds) check_dim(s, d);
  CollectionCheck res;
  int n = static_cast<int>(ds.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      // forward direction: Ext^k(O(D_a), O(D_b)) = H^k(O(D_b - D_a))
      CohomologyTriple t = line_bundle_cohomology(s, vec_sub(ds[b], ds[a]));
      if (t.h1 != 0) res.witnesses.push_back({a, b, 1, 0, t.h1});
      if (t.h2 != 0) res.witnesses.push_back({a, b, 2, 0, t.h2});
      if (a == b) continue;
      // backward direction: every Ext^k(O(D_b), O(D_a)) must vanish
      CohomologyTriple u = line_bundle_cohomology(s, vec_sub(ds[a], ds[b]));
      if (u.h0 != 0) res.witnesses.push_back({b, a, 0, 0, u.h0});
      if (u.h1 != 0) res.witnesses.push_back({b, a, 1, 0, u.h1});
      if (u.h2 != 0) res.witnesses.push_back({b, a, 2, 0, u.h2});
    }
  }
  res.ok = res.witnesses.empty();
  return res;
}

CollectionCheck tilting_cone_check(const SurfaceLattice& s, const DivisorClass& l,
                                   const std::vector<DivisorClass>& ds, int extra_sweep) {
  require_ample(s, l);
  for (const auto& d : ds) check_dim(s, d);
  CollectionCheck res;
  int n = static_cast<int>(ds.size());
  int bound = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // beyond this j, D_b - D_a + jL - K is ample and Kawamata-Viehweg
      // vanishing covers the remaining degrees
      DivisorClass base = vec_sub(vec_sub(ds[b], ds[a]), s.canonical);
      bound = std::max(bound, ample_onset(s, base, l, 0));
    }
  }
  res.sweep_bound = bound;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int j = 0; j <= bound + extra_sweep; ++j) {
        DivisorClass d = vec_add(vec_sub(ds[b], ds[a]), vec_scale(j, l));
        CohomologyTriple t = line_bundle_cohomology(s, d);
        if (t.h1 != 0) res.witnesses.push_back({a, b, 1, j, t.h1});
        if (t.h2 != 0) res.witnesses.push_back({a, b, 2, j, t.h2});
      }
    }
  }
  res.ok = res.witnesses.empty();
  return res;
}

CollectionCheck crepancy_cone_check(const SurfaceLattice& s, const DivisorClass& l,
                                    const std::vector<DivisorClass>& ds, int extra_sweep) {
  require_ample(s, l);
  for (const auto& d : ds) check_dim(s, d);
  CollectionCheck res;
  if (vec_add(s.canonical, l) == DivisorClass(s.rank, 0)) {
    // omega is L^{-1}: the negative-degree part vanishes identically
    res.ok = true;
    return res;
  }
  int n = static_cast<int>(ds.size());
  int bound = 1;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // for j <= -t with -(D_b - D_a) + tL ample, Serre duality plus
      // Kawamata-Viehweg kills both H^0 and H^1
      DivisorClass base = vec_sub(ds[a], ds[b]);
      bound = std::max(bound, ample_onset(s, base, l, 1));
    }
  }
  res.sweep_bound = bound;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int j = -1; j >= -(bound + extra_sweep); --j) {
        DivisorClass d = vec_add(vec_sub(ds[b], ds[a]), vec_scale(j, l));
        CohomologyTriple t = line_bundle_cohomology(s, d);
        if (t.h0 != 0) res.witnesses.push_back({a, b, 0, j, t.h0});
        if (t.h1 != 0) res.witnesses.push_back({a, b, 1, j, t.h1});
      }
    }
  }
  res.ok = res.witnesses.empty();
  return res;
}

std::vector<long long> cone_local_cohomology(const SurfaceLattice& s, const DivisorClass& l,
                                             int i, int u_lo, int u_hi) {
  require_ample(s, l);
  if (i < 0 || i > 2) fail(Errc::SyntaxError, "cohomological index must be 0, 1 or 2");
  if (u_lo > u_hi) fail(Errc::SyntaxError, "empty degree range");
  std::vector<long long> out;
  for (int u = u_lo; u <= u_hi; ++u) {
    CohomologyTriple t = line_bundle_cohomology(s, vec_scale(u, l));
    if (i == 0) {
      // degree-u sections already present in the section ring do not
      // contribute; below degree zero the ring is empty
      out.push_back(u >= 0 ? 0 : t.h0);
    } else if (i == 1) {
      out.push_back(t.h1);
    } else {
      out.push_back(t.h2);
    }
  }
  return out;
}

ConeReport cone_properties(const SurfaceLattice& s, const DivisorClass& l, int extra_sweep) {
  require_ample(s, l);
  ConeReport rep;
  // beyond this j, jL - K is ample and higher cohomology of O(jL) vanishes
  int bound = ample_onset(s, vec_scale(-1, s.canonical), l, 0);
  rep.sweep_bound = bound;
  bool h1_clean = true, h2_clean = true;
  for (int j = 0; j <= bound + extra_sweep; ++j) {
    CohomologyTriple t = line_bundle_cohomology(s, vec_scale(j, l));
    if (t.h1 != 0) {
      h1_clean = false;
      rep.witnesses.push_back({-1, -1, 1, j, t.h1});
    }
    if (t.h2 != 0) {
      h2_clean = false;
      rep.witnesses.push_back({-1, -1, 2, j, t.h2});
    }
  }
  rep.cm = h1_clean;
  rep.rational = h1_clean && h2_clean;
  // omega = L^{-m}: K = -mL as lattice vectors
  for (int idx = 0; idx < s.rank; ++idx) {
    if (l[idx] == 0) continue;
    if (s.canonical[idx] % l[idx] != 0) break;
    long m = -(s.canonical[idx] / l[idx]);
    if (m >= 1 && s.canonical == vec_scale(-m, l)) rep.gorenstein_index = static_cast<int>(m);
    break;
  }
  rep.blowup_crepant = rep.gorenstein_index && *rep.gorenstein_index == 1;
  rep.terminal = rep.gorenstein_index && *rep.gorenstein_index >= 2;
  return rep;
}

KoSlopeReport ko_slope_report(const SurfaceLattice& s, const std::vector<NumericalClass>& es) {
  for (const auto& e : es) validate_class(s, e);
  int n = static_cast<int>(es.size());
  if (n == 0) fail(Errc::SyntaxError, "empty collection");
  for (int i = 0; i < n; ++i) {
    if (euler_form(s, es[i], es[i]) != 1)
      fail(Errc::NotNumericallyExceptional,
           "chi(E,E) != 1 at position " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      if (euler_form(s, es[j], es[i]) != 0)
        fail(Errc::NotNumericallyExceptional,
             "chi(E_j, E_i) != 0 for j > i at (" + std::to_string(j) + "," + std::to_string(i) +
                 ")");
    }
  }
  KoSlopeReport rep;
  auto window_class = [&](int u) {
    int q = (u >= 0) ? u / n : -((-u + n - 1) / n);
    int r = u - q * n;
    return helix_twist(s, es[r], q);
  };
  std::vector<NumericalClass> win;
  for (int u = -n; u <= 2 * n; ++u) {
    rep.indices.push_back(u);
    win.push_back(window_class(u));
  }
  for (const auto& e : win) rep.slopes.push_back(slope(s, e));
  rep.monotone = true;
  for (size_t k = 1; k < rep.slopes.size(); ++k) {
    if (rep.slopes[k - 1] > rep.slopes[k]) rep.monotone = false;
  }
  rep.serre_chi_ok = true;
  for (size_t a = 0; a < win.size(); ++a) {
    for (size_t b = 0; b < win.size(); ++b) {
      long lhs = euler_form(s, win[a], win[b]);
      long rhs = euler_form(s, win[b], helix_twist(s, win[a], -1));
      if (lhs != rhs) rep.serre_chi_ok = false;
    }
  }
  rep.line_bundles = true;
  for (const auto& e : win) {
    if (e.rank != 1 || e.ch2 != self_intersection_half(s, e.c1)) rep.line_bundles = false;
  }
  if (rep.line_bundles) {
    for (size_t a = 0; a < win.size(); ++a) {
      for (size_t b = 0; b < win.size(); ++b) {
        if (a == b) continue;
        CohomologyTriple t = line_bundle_cohomology(s, vec_sub(win[b].c1, win[a].c1));
        if (t.h1 != 0) {
          rep.ext1_vanish = false;
          rep.witnesses.push_back({rep.indices[a], rep.indices[b], 1, 0, t.h1});
        }
        if (a < b && t.h2 != 0) {
          rep.no_forward_ext2 = false;
          rep.witnesses.push_back({rep.indices[a], rep.indices[b], 2, 0, t.h2});
        }
        if (a > b && t.h0 != 0) {
          rep.no_backward_hom = false;
          rep.witnesses.push_back({rep.indices[a], rep.indices[b], 0, 0, t.h0});
        }
      }
    }
  }
  return rep;
}

}  // namespace nccr
