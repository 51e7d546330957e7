#include "nccr/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nccr/delpezzo.hpp"
#include "nccr/invariants.hpp"
#include "nccr/parse.hpp"
#include "nccr/singularity.hpp"

namespace nccr {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- parsing

long strict_long(const std::string& text) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(text, &pos);
  } catch (const std::exception&) {
    fail(Errc::SyntaxError, "expected an integer, got '" + text + "'");
  }
  if (pos != text.size())
    fail(Errc::SyntaxError, "trailing characters in integer '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    parts.push_back(item);
  }
  return parts;
}

std::vector<int> parse_int_csv(const std::string& text, const std::string& what) {
  if (text.empty()) fail(Errc::SyntaxError, what + " must not be empty");
  std::vector<int> out;
  for (const auto& p : split(text, ',')) out.push_back(static_cast<int>(strict_long(p)));
  return out;
}

std::vector<long> parse_long_csv(const std::string& text, const std::string& what) {
  if (text.empty()) fail(Errc::SyntaxError, what + " must not be empty");
  std::vector<long> out;
  for (const auto& p : split(text, ',')) out.push_back(strict_long(p));
  return out;
}

Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    fail(Errc::SyntaxError, "expected a rational number, got '" + text + "'");
  }
}

DivisorClass parse_polarization(const SurfaceLattice& s, const std::string& text) {
  if (text == "anticanonical" || text == "-K") {
    DivisorClass l(s.rank);
    for (int i = 0; i < s.rank; ++i) l[i] = -s.canonical[i];
    return l;
  }
  return parse_long_csv(text, "divisor class");
}

// "r:c1,...:ch2" is a general numerical class; a bare vector is O(D).
NumericalClass parse_class(const SurfaceLattice& s, const std::string& text) {
  if (text.find(':') == std::string::npos)
    return line_bundle_class(s, parse_long_csv(text, "divisor class"));
  auto parts = split(text, ':');
  if (parts.size() != 3)
    fail(Errc::SyntaxError, "class format is rank:c1,..:ch2, got '" + text + "'");
  NumericalClass e;
  e.rank = strict_long(parts[0]);
  e.c1 = parse_long_csv(parts[1], "c1");
  e.ch2 = parse_rational(parts[2]);
  validate_class(s, e);
  return e;
}

std::vector<DivisorClass> naive_collection(const SurfaceLattice& s) {
  if (s.kind != SurfaceLattice::Kind::Blowup)
    fail(Errc::SyntaxError, "the naive collection is defined for P2 and its blowups");
  std::vector<DivisorClass> c;
  for (int i = 1; i <= s.blowups; ++i) {
    DivisorClass e(s.rank, 0);
    e[i] = 1;
    c.push_back(e);
  }
  DivisorClass h(s.rank, 0);
  c.push_back(h);
  h[0] = 1;
  c.push_back(h);
  h[0] = 2;
  c.push_back(h);
  return c;
}

std::vector<DivisorClass> parse_collection(const SurfaceLattice& s, const std::string& text) {
  if (text == "naive") return naive_collection(s);
  std::vector<DivisorClass> c;
  for (const auto& p : split(text, ';')) c.push_back(parse_long_csv(p, "divisor class"));
  if (c.empty()) fail(Errc::SyntaxError, "empty collection");
  return c;
}

std::vector<NumericalClass> parse_class_collection(const SurfaceLattice& s,
                                                   const std::string& text) {
  std::vector<NumericalClass> out;
  if (text == "naive") {
    for (const auto& d : naive_collection(s)) out.push_back(line_bundle_class(s, d));
    return out;
  }
  for (const auto& p : split(text, ';')) out.push_back(parse_class(s, p));
  if (out.empty()) fail(Errc::SyntaxError, "empty collection");
  return out;
}

// ------------------------------------------------------------- rendering

ordered_json json_bigint(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

std::string mono_str(const RingPtr& ring, const Monomial& m) {
  return Polynomial::term(ring, m, Rational(1)).str();
}

// Canonical display form for binomial/toric relations: lexicographic term
// order with a positive leading coefficient.
std::string relation_str(Polynomial p) {
  if (p.is_zero()) return "0";
  p.resort(TermOrder::lex());
  if (p.leading().c < 0) p = -p;
  std::string s = p.str();
  p.resort(TermOrder::grevlex());
  return s;
}

ordered_json json_series(const SeriesTruncation& st) {
  ordered_json j = ordered_json::array();
  for (auto c : st.coefficients) j.push_back(c);
  return j;
}

ordered_json json_class(const NumericalClass& e) {
  ordered_json j;
  j["rank"] = e.rank;
  j["c1"] = e.c1;
  j["ch2"] = to_string(e.ch2);
  return j;
}

ordered_json json_witness(const PairWitness& w, bool with_j) {
  ordered_json j;
  j["from"] = w.a;
  j["to"] = w.b;
  j["i"] = w.i;
  if (with_j) j["j"] = w.j;
  j["dim"] = w.value;
  return j;
}

ordered_json json_witness_list(const std::vector<PairWitness>& ws, bool with_j) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(json_witness(w, with_j));
  return a;
}

std::string scalar_str(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_scalar_array(const ordered_json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const ordered_json& e) {
           return !e.is_object() && !e.is_array();
         });
}

std::string inline_array(const ordered_json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += scalar_str(v[i]);
  }
  return s + "]";
}

void render_node(std::ostream& os, const std::string& key, const ordered_json& v, int indent) {
  std::string pad(2 * indent, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, u] : v.items()) render_node(os, k, u, indent + 1);
  } else if (v.is_array() && !is_scalar_array(v)) {
    os << pad << key << ":\n";
    for (const auto& elem : v) {
      bool first = true;
      for (const auto& [k, u] : elem.items()) {
        os << pad << (first ? "  - " : "    ") << k << ": "
           << (is_scalar_array(u) ? inline_array(u) : scalar_str(u)) << "\n";
        first = false;
      }
    }
  } else if (v.is_array()) {
    os << pad << key << ": " << inline_array(v) << "\n";
  } else {
    os << pad << key << ": " << scalar_str(v) << "\n";
  }
}

std::string render_text(const ordered_json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) render_node(os, k, v, 0);
  return os.str();
}

// --------------------------------------------------------------- options

struct Options {
  // shared
  std::string format = "json";
  bool timing = false;
  int threads = 1;
  EngineLimits limits;
  // inputs
  std::string vars, poly, weights, ideal, order = "grevlex";
  std::string surface, polarization, collection, class_e, class_f, side = "left";
  std::string lc_range;
  int weight = 0, weight_b = 0, degree = 6, truncation = 8;
  int lo = 0, hi = 0;
  bool has_lo = false, has_hi = false;
  int extra_sweep = 0;
};

TermOrder order_from_name(const std::string& name) {
  if (name == "grevlex") return TermOrder::grevlex();
  if (name == "lex") return TermOrder::lex();
  if (name == "ds" || name == "local") return TermOrder::local_ds();
  fail(Errc::SyntaxError, "unknown order '" + name + "' (grevlex, lex, ds)");
}

ordered_json result_shell(const std::string& command, ordered_json inputs) {
  ordered_json j;
  j["schema"] = "nccr/1";
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  return j;
}

// ------------------------------------------------------------- commands

ordered_json cmd_mu_tau(const Options& o) {
  auto names = split(o.vars, ',');
  auto ring = make_ring(names);
  Polynomial f = parse_polynomial(o.poly, ring);
  SingularityReport rep = quasi_homogeneity_test(f, o.limits);
  ordered_json in;
  in["vars"] = o.vars;
  in["poly"] = o.poly;
  ordered_json j = result_shell("mu-tau", in);
  j["milnor"] = rep.milnor ? json_bigint(*rep.milnor) : ordered_json(nullptr);
  j["tyurina"] = rep.tyurina ? json_bigint(*rep.tyurina) : ordered_json(nullptr);
  j["quasi_homogeneous"] =
      rep.quasi_homogeneous ? ordered_json(*rep.quasi_homogeneous) : ordered_json(nullptr);
  j["isolated"] = rep.milnor.has_value();
  return j;
}

ordered_json weights_input(const Options& o) {
  ordered_json in;
  in["weights"] = o.weights;
  return in;
}

ordered_json cmd_hilbert_basis(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  auto hb = invariant_hilbert_basis(ws, o.limits);
  ordered_json j = result_shell("invariants.hilbert-basis", weights_input(o));
  j["count"] = hb.basis.size();
  ordered_json basis = ordered_json::array();
  for (const auto& m : hb.basis) basis.push_back(mono_str(ws.ring, m));
  j["basis"] = basis;
  j["certificates"]["degree_bound"] = hb.degree_bound;
  j["certificates"]["closure_checked"] = hb.closure_checked;
  return j;
}

ordered_json cmd_toric_ideal(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  auto tp = toric_presentation(ws, o.limits);
  ordered_json j = result_shell("invariants.toric-ideal", weights_input(o));
  ordered_json vars = ordered_json::array();
  for (std::size_t i = 0; i < tp.basis.size(); ++i) {
    ordered_json v;
    v["name"] = tp.y_ring->vars[i];
    v["monomial"] = mono_str(ws.ring, tp.basis[i]);
    vars.push_back(v);
  }
  j["variables"] = vars;
  ordered_json rels = ordered_json::array();
  for (const auto& r : tp.relations) rels.push_back(relation_str(r));
  j["relations"] = rels;
  j["binomial"] = tp.binomial;
  j["certificates"]["basis_degree_bound"] = tp.basis_degree_bound;
  return j;
}

ordered_json cmd_covariant(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  auto cv = covariant_presentation(ws, o.weight, o.truncation, o.limits);
  ordered_json in = weights_input(o);
  in["weight"] = o.weight;
  in["truncation"] = o.truncation;
  ordered_json j = result_shell("invariants.covariant", std::move(in));
  ordered_json gens = ordered_json::array();
  for (const auto& g : cv.generators) gens.push_back(mono_str(ws.ring, g));
  j["generators"] = gens;
  j["relation_count"] = cv.presentation.relations.size();
  j["hilbert"] = json_series(cv.hilbert);
  j["certificates"]["generator_degree_bound"] = cv.generator_degree_bound;
  j["certificates"]["relation_degree_bound"] = cv.relation_degree_bound;
  j["certificates"]["certified_to"] = cv.certified_to;
  return j;
}

ordered_json cmd_cm_sweep(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  int lo = o.has_lo ? o.lo : -ws.n_plus + 1;
  int hi = o.has_hi ? o.hi : ws.n_minus - 1;
  if (lo > hi) fail(Errc::SyntaxError, "empty weight range");
  ordered_json in = weights_input(o);
  in["lo"] = lo;
  in["hi"] = hi;
  ordered_json j = result_shell("invariants.cm-sweep", std::move(in));
  ordered_json rows = ordered_json::array();
  bool all = true;
  for (int a = lo; a <= hi; ++a) {
    auto rep = cm_check_covariant(ws, a, o.limits);
    ordered_json r;
    r["weight"] = rep.weight;
    r["projective_dimension"] = rep.projective_dimension;
    r["depth"] = rep.depth;
    r["dimension"] = rep.dimension;
    r["cm"] = rep.cm;
    rows.push_back(r);
    all = all && rep.cm;
  }
  j["reports"] = rows;
  j["all_cm"] = all;
  j["certificates"]["guaranteed_window"] =
      std::to_string(-ws.n_plus) + " < a < " + std::to_string(ws.n_minus);
  return j;
}

ordered_json cmd_gorenstein(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  auto rep = gorenstein_check(ws, o.limits);
  ordered_json j = result_shell("invariants.gorenstein", weights_input(o));
  j["gorenstein"] = rep.gorenstein;
  j["cm_certified"] = rep.cm_certified;
  ordered_json num = ordered_json::array();
  for (const auto& c : rep.numerator) num.push_back(json_bigint(c));
  j["numerator"] = num;
  j["denominator_degrees"] = rep.denominator_degrees;
  return j;
}

ordered_json cmd_quiver(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  auto q = nccr_quiver(ws, o.truncation, o.limits);
  ordered_json in = weights_input(o);
  in["truncation"] = o.truncation;
  ordered_json j = result_shell("invariants.quiver", std::move(in));
  j["vertices"] = q.vertex_count;
  ordered_json rels = ordered_json::array();
  for (const auto& r : q.toric.relations) rels.push_back(relation_str(r));
  j["toric_relations"] = rels;
  ordered_json blocks = ordered_json::array();
  for (const auto& [w, cv] : q.blocks) {
    ordered_json b;
    b["weight_difference"] = w;
    ordered_json gens = ordered_json::array();
    for (const auto& g : cv.generators) gens.push_back(mono_str(ws.ring, g));
    b["generators"] = gens;
    b["hilbert"] = json_series(cv.hilbert);
    blocks.push_back(b);
  }
  j["blocks"] = blocks;
  ordered_json arrows = ordered_json::array();
  for (const auto& ar : q.arrows) {
    ordered_json a;
    a["source"] = ar.source;
    a["target"] = ar.target;
    a["count"] = ar.arrows.size();
    ordered_json ms = ordered_json::array();
    for (const auto& m : ar.arrows) ms.push_back(mono_str(ws.ring, m));
    a["generators"] = ms;
    arrows.push_back(a);
  }
  j["arrows"] = arrows;
  j["certificates"]["truncation"] = o.truncation;
  return j;
}

ordered_json cmd_end_check(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  ordered_json in = weights_input(o);
  in["degree"] = o.degree;
  ordered_json j = result_shell("invariants.end-check", std::move(in));
  j["match"] = end_ring_check(ws, o.degree, o.limits);
  j["certificates"]["degree"] = o.degree;
  return j;
}

ordered_json cmd_bidual_check(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  ordered_json in = weights_input(o);
  in["a"] = o.weight;
  in["b"] = o.weight_b;
  in["degree"] = o.degree;
  ordered_json j = result_shell("invariants.bidual-check", std::move(in));
  j["match"] = bidual_product_check(ws, o.weight, o.weight_b, o.degree, o.limits);
  j["certificates"]["degree"] = o.degree;
  return j;
}

ordered_json cmd_koszul_check(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  ordered_json in = weights_input(o);
  in["weight"] = o.weight;
  in["degree"] = o.degree;
  ordered_json j = result_shell("invariants.koszul-check", std::move(in));
  j["holds"] = koszul_identity_check(ws, o.weight, o.degree, o.limits);
  j["certificates"]["degree"] = o.degree;
  return j;
}

ordered_json cmd_lc_bound(const Options& o) {
  WeightSystem ws = validate_weights(parse_int_csv(o.weights, "weights"), o.limits);
  ordered_json j = result_shell("invariants.lc-bound", weights_input(o));
  j["plus"] = local_cohomology_weight_bound(ws, '+');
  j["minus"] = local_cohomology_weight_bound(ws, '-');
  return j;
}

ordered_json surface_input(const Options& o) {
  ordered_json in;
  in["surface"] = o.surface;
  return in;
}

ordered_json cmd_surface(const Options& o) {
  SurfaceLattice s = make_surface(o.surface);
  ordered_json j = result_shell("delpezzo.surface", surface_input(o));
  j["name"] = s.name;
  j["kind"] = s.kind == SurfaceLattice::Kind::Blowup ? "blowup" : "quadric";
  j["rank"] = s.rank;
  j["basis"] = s.basis_names;
  j["canonical"] = s.canonical;
  auto ones = minus_one_classes(s);
  j["minus_one_count"] = ones.size();
  ordered_json cs = ordered_json::array();
  for (const auto& c : ones) cs.push_back(c);
  j["minus_one_classes"] = cs;
  return j;
}

ordered_json cmd_euler(const Options& o) {
  SurfaceLattice s = make_surface(o.surface);
  NumericalClass e = parse_class(s, o.class_e);
  NumericalClass f = parse_class(s, o.class_f);
  ordered_json in = surface_input(o);
  in["E"] = o.class_e;
  in["F"] = o.class_f;
  ordered_json j = result_shell("delpezzo.euler", std::move(in));
  j["chi"] = euler_form(s, e, f);
  return j;
}

ordered_json cmd_slope(const Options& o) {
  SurfaceLattice s = make_surface(o.surface);
  NumericalClass e = parse_class(s, o.class_e);
  ordered_json in = surface_input(o);
  in["E"] = o.class_e;
  ordered_json j = result_shell("delpezzo.slope", std::move(in));
  j["slope"] = to_string(slope(s, e));
  return j;
}

ordered_json cmd_mutate(const Options& o) {
  SurfaceLattice s = make_surface(o.surface);
  NumericalClass e = parse_class(s, o.class_e);
  NumericalClass f = parse_class(s, o.class_f);
  MutationSide side;
  if (o.side == "left") {
    side = MutationSide::Left;
  } else if (o.side == "right") {
    side = MutationSide::Right;
  } else {
    fail(Errc::SyntaxError, "side must be left or right");
  }
  ordered_json in = surface_input(o);
  in["E"] = o.class_e;
  in["F"] = o.class_f;
  in["side"] = o.side;
  ordered_json j = result_shell("delpezzo.mutate", std::move(in));
  j["result"] = json_class(mutate(s, e, f, side));
  j["convention"] = "left: chi(E,F)[E] - [F]; right: chi(E,F)[F] - [E]";
  return j;
}

ordered_json cmd_cohomology(const Options& o) {
  SurfaceLattice s = make_surface(o.surface);
  DivisorClass d = parse_long_csv(o.class_e, "divisor class");
  auto t = line_bundle_cohomology(s, d);
  ordered_json in = surface_input(o);
  in["D"] = o.class_e;
  ordered_json j = result_shell("delpezzo.cohomology", std::move(in));
  j["h0"] = t.h0;
  j["h1"] = t.h1;
  j["h2"] = t.h2;
  j["chi"] = t.h0 - t.h1 + t.h2;
  return j;
}

ordered_json cmd_strong_check(const Options& o) {
  SurfaceLattice s = make_surface(o.surface);
  auto coll = parse_collection(s, o.collection);
  auto res = strong_collection_check(s, coll);
  ordered_json in = surface_input(o);
  in["collection"] = o.collection;
  ordered_json j = result_shell("delpezzo.strong-check", std::move(in));
  j["verdict"] = res.ok;
  j["witnesses"] = json_witness_list(res.witnesses, false);
  return j;
}

ordered_json cone_check_json(const Options& o, const char* command, bool tilting) {
  SurfaceLattice s = make_surface(o.surface);
  DivisorClass l = parse_polarization(s, o.polarization);
  auto coll = parse_collection(s, o.collection);
  CollectionCheck res = tilting ? tilting_cone_check(s, l, coll, o.extra_sweep)
                                : crepancy_cone_check(s, l, coll, o.extra_sweep);
  ordered_json in = surface_input(o);
  in["L"] = o.polarization;
  in["collection"] = o.collection;
  in["extra_sweep"] = o.extra_sweep;
  ordered_json j = result_shell(command, std::move(in));
  j["verdict"] = res.ok;
  if (!tilting) {
    DivisorClass neg(s.rank);
    for (int i = 0; i < s.rank; ++i) neg[i] = -l[i];
    j["short_circuit"] = (s.canonical == neg);
  }
  j["witnesses"] = json_witness_list(res.witnesses, true);
  j["certificates"]["sweep_bound"] = res.sweep_bound;
  return j;
}

ordered_json cmd_cone_props(const Options& o) {
  SurfaceLattice s = make_surface(o.surface);
  DivisorClass l = parse_polarization(s, o.polarization);
  auto rep = cone_properties(s, l, o.extra_sweep);
  ordered_json in = surface_input(o);
  in["L"] = o.polarization;
  in["extra_sweep"] = o.extra_sweep;
  if (!o.lc_range.empty()) in["lc_range"] = o.lc_range;
  ordered_json j = result_shell("delpezzo.cone-props", std::move(in));
  j["cm"] = rep.cm;
  j["rational"] = rep.rational;
  j["gorenstein_index"] =
      rep.gorenstein_index ? ordered_json(*rep.gorenstein_index) : ordered_json(nullptr);
  j["blowup_crepant"] = rep.blowup_crepant;
  j["terminal"] = rep.terminal;
  j["witnesses"] = json_witness_list(rep.witnesses, true);
  j["certificates"]["sweep_bound"] = rep.sweep_bound;
  if (!o.lc_range.empty()) {
    auto parts = split(o.lc_range, ':');
    if (parts.size() != 2) fail(Errc::SyntaxError, "lc-range format is lo:hi");
    int lo = static_cast<int>(strict_long(parts[0]));
    int hi = static_cast<int>(strict_long(parts[1]));
    ordered_json lc;
    lc["u_lo"] = lo;
    lc["u_hi"] = hi;
    lc["H1_m"] = cone_local_cohomology(s, l, 0, lo, hi);
    lc["H2_m"] = cone_local_cohomology(s, l, 1, lo, hi);
    lc["H3_m"] = cone_local_cohomology(s, l, 2, lo, hi);
    j["local_cohomology"] = lc;
  }
  return j;
}

ordered_json cmd_ko_report(const Options& o) {
  SurfaceLattice s = make_surface(o.surface);
  auto coll = parse_class_collection(s, o.collection);
  auto rep = ko_slope_report(s, coll);
  ordered_json in = surface_input(o);
  in["collection"] = o.collection;
  ordered_json j = result_shell("delpezzo.ko-report", std::move(in));
  j["indices"] = rep.indices;
  ordered_json slopes = ordered_json::array();
  for (const auto& sl : rep.slopes) slopes.push_back(to_string(sl));
  j["slopes"] = slopes;
  j["monotone"] = rep.monotone;
  j["serre_chi_ok"] = rep.serre_chi_ok;
  j["line_bundles"] = rep.line_bundles;
  j["no_forward_ext2"] = rep.no_forward_ext2;
  j["no_backward_hom"] = rep.no_backward_hom;
  j["ext1_vanish"] = rep.ext1_vanish;
  j["witnesses"] = json_witness_list(rep.witnesses, false);
  j["convention"] = "helix indices: E(i+jn) = twist of E(i) by -jK";
  return j;
}

ordered_json groebner_input(const Options& o) {
  ordered_json in;
  in["vars"] = o.vars;
  in["ideal"] = o.ideal;
  in["order"] = o.order;
  return in;
}

ordered_json cmd_gb_basis(const Options& o) {
  auto ring = make_ring(split(o.vars, ','));
  auto gens = parse_polynomial_list(o.ideal, ring);
  auto gb = groebner(gens, order_from_name(o.order), o.limits);
  ordered_json j = result_shell("groebner.basis", groebner_input(o));
  ordered_json basis = ordered_json::array();
  for (const auto& g : gb.gens) basis.push_back(g.str());
  j["basis"] = basis;
  j["size"] = gb.gens.size();
  return j;
}

ordered_json cmd_gb_nf(const Options& o) {
  auto ring = make_ring(split(o.vars, ','));
  auto gens = parse_polynomial_list(o.ideal, ring);
  Polynomial f = parse_polynomial(o.poly, ring);
  auto gb = groebner(gens, order_from_name(o.order), o.limits);
  ordered_json in = groebner_input(o);
  in["poly"] = o.poly;
  ordered_json j = result_shell("groebner.nf", std::move(in));
  Polynomial r = reduce(gb, f, o.limits);
  j["remainder"] = r.is_zero() ? "0" : r.str();
  j["member"] = r.is_zero();
  j["certificates"]["basis_size"] = gb.gens.size();
  return j;
}

ordered_json cmd_gb_resolve(const Options& o) {
  auto ring = make_ring(split(o.vars, ','));
  auto gens = parse_polynomial_list(o.ideal, ring);
  auto fr = free_resolution(cyclic_presentation(ring, gens), o.limits);
  ordered_json in;
  in["vars"] = o.vars;
  in["ideal"] = o.ideal;
  ordered_json j = result_shell("groebner.resolve", std::move(in));
  j["projective_dimension"] = fr.projective_dimension();
  ordered_json steps = ordered_json::array();
  ordered_json base;
  base["rank"] = fr.base_shifts.size();
  base["shifts"] = fr.base_shifts;
  steps.push_back(base);
  for (const auto& st : fr.steps) {
    ordered_json e;
    e["rank"] = st.shifts.size();
    e["shifts"] = st.shifts;
    steps.push_back(e);
  }
  j["steps"] = steps;
  return j;
}

ordered_json cmd_gb_depth(const Options& o) {
  auto ring = make_ring(split(o.vars, ','));
  auto gens = parse_polynomial_list(o.ideal, ring);
  auto rep = depth_and_cm(cyclic_presentation(ring, gens), -1, o.limits);
  ordered_json in;
  in["vars"] = o.vars;
  in["ideal"] = o.ideal;
  ordered_json j = result_shell("groebner.depth", std::move(in));
  j["projective_dimension"] = rep.projective_dimension;
  j["depth"] = rep.depth;
  j["dimension"] = rep.dimension;
  j["cm"] = rep.cm;
  return j;
}

// ------------------------------------------------------------ app wiring

struct Invocation {
  Options opt;
  std::function<ordered_json(const Options&)> runner;
};

CLI::App* add_leaf(CLI::App* parent, Invocation& inv, const std::string& name,
                   const std::string& desc, ordered_json (*fn)(const Options&)) {
  CLI::App* sub = parent->add_subcommand(name, desc);
  sub->fallthrough();
  sub->callback([&inv, fn] { inv.runner = fn; });
  return sub;
}

void bind_quiver_options(CLI::App* sub, Options& o) {
  sub->add_option("--weights", o.weights, "comma-separated torus weights")->required();
  sub->add_option("--truncation", o.truncation, "series truncation degree");
}

void build_app(CLI::App& app, Invocation& inv) {
  Options& o = inv.opt;
  app.description("exact engines for quotient singularities and surface cones");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", o.timing, "include wall-clock milliseconds in the report");
  app.add_option("--threads", o.threads, "worker threads (results are identical)");
  app.add_option("--max-arity", o.limits.max_arity, "variable-count cap");
  app.add_option("--max-basis", o.limits.max_basis, "basis/generator cap");
  app.add_option("--max-degree", o.limits.max_degree, "degree cap");

  CLI::App* mu = add_leaf(&app, inv, "mu-tau", "Milnor/Tyurina numbers and quasi-homogeneity",
                          cmd_mu_tau);
  mu->add_option("--vars", o.vars, "comma-separated variable names")->required();
  mu->add_option("--poly", o.poly, "polynomial with an isolated singularity at 0")->required();

  CLI::App* invs = app.add_subcommand("invariants", "one-torus invariant rings and covariants");
  invs->fallthrough();
  invs->require_subcommand(1);
  CLI::App* hb = add_leaf(invs, inv, "hilbert-basis", "minimal invariant monomial generators",
                          cmd_hilbert_basis);
  hb->add_option("--weights", o.weights)->required();
  CLI::App* ti = add_leaf(invs, inv, "toric-ideal", "presentation of the invariant ring",
                          cmd_toric_ideal);
  ti->add_option("--weights", o.weights)->required();
  CLI::App* cv = add_leaf(invs, inv, "covariant", "presentation of a weight slice", cmd_covariant);
  cv->add_option("--weights", o.weights)->required();
  cv->add_option("--weight", o.weight, "torus weight of the slice")->required();
  cv->add_option("--truncation", o.truncation);
  CLI::App* cm = add_leaf(invs, inv, "cm-sweep", "Cohen-Macaulay test over a weight range",
                          cmd_cm_sweep);
  cm->add_option("--weights", o.weights)->required();
  cm->add_option("--lo", o.lo)->each([&o](const std::string&) { o.has_lo = true; });
  cm->add_option("--hi", o.hi)->each([&o](const std::string&) { o.has_hi = true; });
  CLI::App* go = add_leaf(invs, inv, "gorenstein", "symmetric-numerator test", cmd_gorenstein);
  go->add_option("--weights", o.weights)->required();
  CLI::App* qv = add_leaf(invs, inv, "quiver", "endomorphism quiver of the slice sum", cmd_quiver);
  bind_quiver_options(qv, o);
  CLI::App* ec = add_leaf(invs, inv, "end-check", "endomorphism dimensions vs lattice counts",
                          cmd_end_check);
  ec->add_option("--weights", o.weights)->required();
  ec->add_option("--degree", o.degree);
  CLI::App* bc = add_leaf(invs, inv, "bidual-check", "product bidual vs slice sum",
                          cmd_bidual_check);
  bc->add_option("--weights", o.weights)->required();
  bc->add_option("--a", o.weight)->required();
  bc->add_option("--b", o.weight_b)->required();
  bc->add_option("--degree", o.degree);
  CLI::App* kz = add_leaf(invs, inv, "koszul-check", "alternating-sum identity on slice counts",
                          cmd_koszul_check);
  kz->add_option("--weights", o.weights)->required();
  kz->add_option("--weight", o.weight)->required();
  kz->add_option("--degree", o.degree);
  CLI::App* lb = add_leaf(invs, inv, "lc-bound", "top weight of one-sided local cohomology",
                          cmd_lc_bound);
  lb->add_option("--weights", o.weights)->required();

  // top-level shortcut for the most common invariants query
  CLI::App* q2 = add_leaf(&app, inv, "quiver", "shortcut for invariants quiver", cmd_quiver);
  bind_quiver_options(q2, o);

  CLI::App* dp = app.add_subcommand("delpezzo", "Picard-lattice and cone-of-sections checks");
  dp->fallthrough();
  dp->require_subcommand(1);
  CLI::App* sf = add_leaf(dp, inv, "surface", "lattice data and (-1)-classes", cmd_surface);
  sf->add_option("--surface", o.surface, "P2, dP1..dP8 or P1xP1")->required();
  CLI::App* eu = add_leaf(dp, inv, "euler", "Euler pairing chi(E,F)", cmd_euler);
  eu->add_option("--surface", o.surface)->required();
  eu->add_option("--E", o.class_e, "divisor vector or rank:c1,..:ch2")->required();
  eu->add_option("--F", o.class_f)->required();
  CLI::App* sl = add_leaf(dp, inv, "slope", "-c1.K/rank", cmd_slope);
  sl->add_option("--surface", o.surface)->required();
  sl->add_option("--E", o.class_e)->required();
  CLI::App* mt = add_leaf(dp, inv, "mutate", "numerical mutation of a pair", cmd_mutate);
  mt->add_option("--surface", o.surface)->required();
  mt->add_option("--E", o.class_e)->required();
  mt->add_option("--F", o.class_f)->required();
  mt->add_option("--side", o.side, "left or right");
  CLI::App* ch = add_leaf(dp, inv, "cohomology", "exact (h0,h1,h2) of a line bundle",
                          cmd_cohomology);
  ch->add_option("--surface", o.surface)->required();
  ch->add_option("--D", o.class_e, "divisor class vector")->required();
  CLI::App* st = add_leaf(dp, inv, "strong-check", "exceptional collection of type Hom",
                          cmd_strong_check);
  st->add_option("--surface", o.surface)->required();
  st->add_option("--collection", o.collection, "'naive' or vec;vec;...")->required();
  CLI::App* tc = add_leaf(dp, inv, "tilting-check", "vanishing sweep for j >= 0",
                          [](const Options& o) { return cone_check_json(o, "delpezzo.tilting-check", true); });
  tc->alias("cone-check");
  tc->add_option("--surface", o.surface)->required();
  tc->add_option("--L", o.polarization, "ample class vector or 'anticanonical'")->required();
  tc->add_option("--collection", o.collection)->required();
  tc->add_option("--extra-sweep", o.extra_sweep, "widen the sweep past the bound");
  CLI::App* cc = add_leaf(dp, inv, "crepancy-check", "vanishing sweep for j <= -1",
                          [](const Options& o) { return cone_check_json(o, "delpezzo.crepancy-check", false); });
  cc->add_option("--surface", o.surface)->required();
  cc->add_option("--L", o.polarization)->required();
  cc->add_option("--collection", o.collection)->required();
  cc->add_option("--extra-sweep", o.extra_sweep);
  CLI::App* cp = add_leaf(dp, inv, "cone-props", "CM/rationality/index of the section cone",
                          cmd_cone_props);
  cp->add_option("--surface", o.surface)->required();
  cp->add_option("--L", o.polarization)->required();
  cp->add_option("--lc-range", o.lc_range, "also tabulate local cohomology over lo:hi");
  cp->add_option("--extra-sweep", o.extra_sweep);
  CLI::App* ko = add_leaf(dp, inv, "ko-report", "slopes and vanishing over the helix window",
                          cmd_ko_report);
  ko->add_option("--surface", o.surface)->required();
  ko->add_option("--collection", o.collection)->required();

  CLI::App* gb = app.add_subcommand("groebner", "Groebner/standard-basis engines");
  gb->fallthrough();
  gb->require_subcommand(1);
  CLI::App* gbb = add_leaf(gb, inv, "basis", "completed basis under the chosen order",
                           cmd_gb_basis);
  gbb->add_option("--vars", o.vars)->required();
  gbb->add_option("--ideal", o.ideal, "comma-separated generators")->required();
  gbb->add_option("--order", o.order, "grevlex, lex or ds");
  CLI::App* gbn = add_leaf(gb, inv, "nf", "normal form / membership", cmd_gb_nf);
  gbn->add_option("--vars", o.vars)->required();
  gbn->add_option("--ideal", o.ideal)->required();
  gbn->add_option("--poly", o.poly)->required();
  gbn->add_option("--order", o.order);
  CLI::App* gbr = add_leaf(gb, inv, "resolve", "minimal graded free resolution of R/I",
                           cmd_gb_resolve);
  gbr->add_option("--vars", o.vars)->required();
  gbr->add_option("--ideal", o.ideal)->required();
  CLI::App* gbd = add_leaf(gb, inv, "depth", "depth and CM verdict for R/I", cmd_gb_depth);
  gbd->add_option("--vars", o.vars)->required();
  gbd->add_option("--ideal", o.ideal)->required();
}

std::string deepest_help(CLI::App& app) {
  CLI::App* cur = &app;
  while (true) {
    auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
  }
  return cur->help();
}

}  // namespace

CliOutcome run_command(const std::vector<std::string>& args) {
  CliOutcome res;
  Invocation inv;
  CLI::App app{"nccr"};
  build_app(app, inv);

  std::vector<const char*> argv;
  argv.push_back("nccr");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    res.out = deepest_help(app);
    res.exit_code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string(e.what()) + "\n\n" + deepest_help(app);
    res.exit_code = 2;
    return res;
  }

  if (!inv.runner) {
    res.err = app.help();
    res.exit_code = 2;
    return res;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    ordered_json j = inv.runner(inv.opt);
    if (inv.opt.timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      j["timing_ms"] = ms;
    }
    res.out = (inv.opt.format == "text") ? render_text(j) : j.dump(2) + "\n";
    res.exit_code = 0;
  } catch (const Error& e) {
    res.err = std::string(e.what()) + "\n";
    if (e.is_resource_error()) {
      res.exit_code = 3;
    } else if (e.code() == Errc::Internal) {
      res.exit_code = 1;
    } else {
      res.exit_code = 2;
    }
  }
  return res;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliOutcome res = run_command(args);
  if (!res.out.empty()) std::cout << res.out;
  if (!res.err.empty()) std::cerr << res.err;
  return res.exit_code;
}

}  // namespace nccr
