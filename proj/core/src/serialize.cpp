#include "abelcert/serialize.hpp"

#include <algorithm>
#include <cstdint>

#include <json.hpp>

#include "abelcert/errors.hpp"
#include "abelcert/finite_field.hpp"
#include "abelcert/galois.hpp"
#include "abelcert/integer.hpp"
#include "abelcert/laurent.hpp"
#include "abelcert/number_field.hpp"
#include "abelcert/poly.hpp"

namespace abelcert {

namespace {

using json = nlohmann::ordered_json;

json j_int(const Integer& v) {
  static const Integer kLimit = Integer(1) << 53;
  if (v > -kLimit && v < kLimit) return json(v.convert_to<long long>());
  return json(v.str());
}

Integer parse_big(const json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidInput("verify: expected an integer or a decimal string");
}

std::string rat_str(const Rational& q) {
  const Integer num = numerator(q), den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  const Integer num(text.substr(0, slash));
  const Integer den(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("verify: zero denominator in rational");
  return Rational(num, den);
}

json j_conditions(const std::vector<Condition>& conditions) {
  json arr = json::array();
  for (const Condition& c : conditions) {
    json e;
    e["name"] = c.name;
    e["statement"] = c.statement;
    e["verified"] = c.verified;
    arr.push_back(std::move(e));
  }
  return arr;
}

bool stored_conditions_all_verified(const json& j) {
  if (!j.contains("conditions")) return true;
  for (const json& e : j.at("conditions")) {
    if (!e.at("verified").get<bool>()) return false;
  }
  return true;
}

json j_form(const DiagonalForm& form) {
  json j;
  j["degree"] = form.degree;
  json coeffs = json::array();
  for (const Integer& c : form.coeffs) coeffs.push_back(j_int(c));
  j["coefficients"] = coeffs;
  j["text"] = to_string(form);
  return j;
}

DiagonalForm parse_form(const json& j) {
  std::vector<Integer> coeffs;
  for (const json& c : j.at("coefficients")) coeffs.push_back(parse_big(c));
  return make_diagonal_form(j.at("degree").get<unsigned>(), std::move(coeffs));
}

json j_profile(const ValuationProfile& profile) {
  json arr = json::array();
  for (const auto& [val, unit] : profile.entries) {
    json e;
    e["valuation"] = val;
    e["unit"] = j_int(unit);
    arr.push_back(std::move(e));
  }
  return arr;
}

json j_cycle(const CycleType& type) {
  json arr = json::array();
  for (unsigned part : type) arr.push_back(part);
  return arr;
}

CycleType parse_cycle(const json& j) {
  CycleType t;
  for (const json& e : j) t.push_back(e.get<unsigned>());
  return t;
}

json j_structure(const GroupStructure& s) {
  json j;
  j["order"] = j_int(s.order);
  j["m"] = j_int(s.m);
  j["n"] = j_int(s.n);
  return j;
}

json j_curve(const CurveModel& E) {
  json j;
  j["a1"] = E.a1;
  j["a2"] = E.a2;
  j["a3"] = E.a3;
  j["a4"] = E.a4;
  j["a6"] = E.a6;
  return j;
}

CurveModel parse_curve(const json& j) {
  CurveModel E;
  E.a1 = j.at("a1").get<uint64_t>();
  E.a2 = j.at("a2").get<uint64_t>();
  E.a3 = j.at("a3").get<uint64_t>();
  E.a4 = j.at("a4").get<uint64_t>();
  E.a6 = j.at("a6").get<uint64_t>();
  return E;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Builders (shared between to_json_text and the embedding kinds).
// ---------------------------------------------------------------------------

json build(const NoAbelianPointsCertificate& cert) {
  json j;
  j["kind"] = "NoAbelianPoints";
  j["form"] = j_form(cert.form);
  j["prime"] = j_int(cert.prime);
  j["profile"] = j_profile(cert.profile);
  j["conditions"] = j_conditions(cert.conditions);
  j["lemma_chain"] = cert.lemma_chain;
  return j;
}

json build(const HenselWitness& w) {
  json j;
  j["kind"] = "HenselWitness";
  j["form"] = j_form(w.form);
  j["prime"] = j_int(w.prime);
  j["precision"] = w.precision;
  j["max_precision"] = w.max_precision;
  j["budget"] = w.budget;
  json tuple = json::array();
  for (const Integer& t : w.tuple) tuple.push_back(j_int(t));
  j["tuple"] = tuple;
  j["coordinate"] = w.coordinate;
  j["grad_valuation"] = w.grad_valuation;
  j["value_is_zero"] = w.value_is_zero;
  j["value_valuation"] = w.value_valuation;
  j["conditions"] = j_conditions(w.conditions);
  j["lemma_chain"] = w.lemma_chain;
  return j;
}

json build(const ThmEllWitness& w) {
  json j;
  j["kind"] = "GenusOneIndexWitness";
  j["ell"] = w.ell;
  j["prime"] = w.p;
  j["p_bound"] = w.p_bound;
  j["order"] = j_int(w.order);
  j["structure"] = j_structure(w.structure);
  j["conditions"] = j_conditions(w.conditions);
  j["lemma_chain"] = w.lemma_chain;
  return j;
}

json build(const Thm3Witness& w) {
  json j;
  j["kind"] = "NumberFieldWitness";
  j["poly"] = to_string(w.f);
  j["degree"] = w.n;
  j["ell"] = w.ell;
  j["prime"] = w.p;
  j["order_of_p"] = w.order_of_p;
  j["curve"] = j_curve(w.curve);
  j["curve_order"] = j_int(w.curve_order);
  j["p_bound"] = w.p_bound;
  j["ell_bound"] = w.ell_bound;
  j["conditions"] = j_conditions(w.conditions);
  j["lemma_chain"] = w.lemma_chain;
  return j;
}

json build(const SplitPrimeWitness& w) {
  json j;
  j["kind"] = "SplitPrime";
  j["poly"] = to_string(w.f);
  j["prime"] = w.prime;
  j["p_max"] = w.p_max;
  j["cycle_type"] = j_cycle(w.type);
  j["conditions"] = j_conditions(w.conditions);
  j["lemma_chain"] = w.lemma_chain;
  return j;
}

json build(const GaloisVerdict& v) {
  json j;
  j["kind"] = "SnCertificate";
  j["poly"] = to_string(v.f);
  j["verdict"] = to_string(v.kind);
  j["group"] = v.group_name;
  j["scan_bound"] = v.scan_bound;
  json criteria;
  criteria["full_cycle"] = v.has_full_cycle;
  criteria["big_prime_cycle"] = v.has_big_prime_cycle;
  criteria["transposition"] = v.has_transposition_type;
  j["criteria"] = criteria;
  json evidence = json::array();
  for (const auto& [p, type] : v.evidence) {
    json e;
    e["prime"] = p;
    e["cycle_type"] = j_cycle(type);
    evidence.push_back(std::move(e));
  }
  j["evidence"] = evidence;
  return j;
}

json build(const GenusPlan& plan) {
  json j;
  j["kind"] = "GenusPlan";
  j["genus"] = plan.g;
  j["k"] = plan.k;
  j["ell"] = plan.ell;
  j["branch_points"] = plan.branch_points;
  j["genus_check"] = plan.genus_check;
  if (plan.base_form) j["base_form"] = j_form(*plan.base_form);
  if (plan.base_certificate) j["base_certificate"] = build(*plan.base_certificate);
  if (plan.ell_witness) j["ell_witness"] = build(*plan.ell_witness);
  j["conditions"] = j_conditions(plan.conditions);
  j["lemma_chain"] = plan.lemma_chain;
  return j;
}

json build(const NormEquationCertificate& cert) {
  json j;
  j["kind"] = "NormEquation";
  j["poly"] = to_string(cert.f);
  j["degree"] = cert.d;
  j["rhs_valuation"] = cert.rhs_valuation;
  j["galois"] = build(cert.verdict);
  j["conditions"] = j_conditions(cert.conditions);
  j["lemma_chain"] = cert.lemma_chain;
  return j;
}

json build(const TameSymbolResult& r) {
  json j;
  j["kind"] = "TameSymbol";
  j["residue_mode"] = r.residue_mode;
  j["field_poly"] = to_string(r.field->modulus());
  j["va"] = r.va;
  j["vb"] = r.vb;
  j["trunc_a"] = r.trunc_a >= kLaurentExact ? json("exact") : json(r.trunc_a);
  j["trunc_b"] = r.trunc_b >= kLaurentExact ? json("exact") : json(r.trunc_b);
  json rep = json::array();
  for (const Rational& c : r.representative) rep.push_back(rat_str(c));
  j["representative"] = rep;
  j["representative_text"] = r.field->to_string(r.representative);
  j["trivial"] = r.trivial;
  if (r.rep_minimal_poly) j["rep_minimal_poly"] = to_string(*r.rep_minimal_poly);
  if (r.sqrt_field_poly) j["sqrt_field_poly"] = to_string(*r.sqrt_field_poly);
  if (r.sqrt_group) j["sqrt_group"] = *r.sqrt_group;
  j["conditions"] = j_conditions(r.conditions);
  j["lemma_chain"] = r.lemma_chain;
  return j;
}

json build(const K4Report& r) {
  json j;
  j["kind"] = "K4Report";
  j["group_order"] = r.group_order;
  j["vertex_stabilizer_orders"] = r.vertex_stabilizer_orders;
  j["edge_stabilizer_orders"] = r.edge_stabilizer_orders;
  json checks;
  checks["vertex_stabilizers_order_6"] = r.vertex_stabilizers_order_6;
  checks["vertex_stabilizers_non_normal"] = r.vertex_stabilizers_non_normal;
  checks["edge_stabilizers_order_4"] = r.edge_stabilizers_order_4;
  checks["edge_stabilizers_non_normal"] = r.edge_stabilizers_non_normal;
  checks["commutator_is_a4"] = r.commutator_is_a4;
  checks["only_overgroups_a4_s4"] = r.only_overgroups_a4_s4;
  checks["a4_s4_fix_nothing"] = r.a4_s4_fix_nothing;
  j["checks"] = checks;
  j["conditions"] = j_conditions(r.conditions);
  j["lemma_chain"] = r.lemma_chain;
  return j;
}

json build(const FindEllResult& r) {
  json j;
  j["kind"] = "FindEll";
  j["q"] = r.q;
  j["N"] = j_int(r.N);
  j["ell"] = j_int(r.ell);
  j["case"] = r.case_label;
  return j;
}

// ---------------------------------------------------------------------------
// Verification: re-run every machine-checkable premise of an artifact.
// ---------------------------------------------------------------------------

void add_check(VerifyReport& r, const std::string& name, const std::string& statement, bool ok) {
  r.checks.push_back(make_condition(name, statement, ok));
  if (!ok) r.verified = false;
}

VerifyReport verify_json(const json& j);

void verify_no_abelian(const json& j, VerifyReport& r) {
  const DiagonalForm form = parse_form(j.at("form"));
  const Integer p = parse_big(j.at("prime"));
  const auto cert = certify_no_abelian_points(form, p);
  add_check(r, "recertified", "re-running the certification procedure yields a certificate",
            cert.has_value());
  if (cert) {
    bool match = cert->profile.entries.size() == j.at("profile").size();
    if (match) {
      size_t i = 0;
      for (const json& e : j.at("profile")) {
        match = match && cert->profile.entries[i].first == e.at("valuation").get<unsigned>() &&
                cert->profile.entries[i].second == parse_big(e.at("unit"));
        ++i;
      }
    }
    add_check(r, "profile_matches", "the stored valuation profile equals the recomputed one",
              match);
  }
  add_check(r, "stored_conditions_verified", "every recorded condition is marked verified",
            stored_conditions_all_verified(j));
}

void verify_hensel(const json& j, VerifyReport& r) {
  const DiagonalForm form = parse_form(j.at("form"));
  const Integer p = parse_big(j.at("prime"));
  const unsigned precision = j.at("precision").get<unsigned>();
  const unsigned coordinate = j.at("coordinate").get<unsigned>();
  const unsigned grad_valuation = j.at("grad_valuation").get<unsigned>();
  const bool value_is_zero = j.at("value_is_zero").get<bool>();
  const unsigned value_valuation = j.at("value_valuation").get<unsigned>();

  std::vector<Integer> tuple;
  for (const json& t : j.at("tuple")) tuple.push_back(parse_big(t));
  add_check(r, "tuple_shape", "the tuple has one entry per variable",
            tuple.size() == form.num_vars() && coordinate < form.num_vars());
  if (tuple.size() != form.num_vars() || coordinate >= form.num_vars()) return;

  Integer modulus = 1;
  for (unsigned i = 0; i < precision; ++i) modulus *= p;
  bool in_range = true, primitive = false;
  for (const Integer& t : tuple) {
    if (t < 0 || t >= modulus) in_range = false;
    if (t % p != 0) primitive = true;
  }
  add_check(r, "tuple_range", "tuple entries lie in [0, p^precision)", in_range);
  add_check(r, "primitive", "some coordinate is a p-adic unit", primitive);

  const unsigned d = form.degree;
  Integer value = 0;
  for (unsigned i = 0; i < form.num_vars(); ++i) {
    Integer pw = 1;
    for (unsigned e = 0; e < d; ++e) pw *= tuple[i];
    value += form.coeffs[i] * pw;
  }
  Integer partial = Integer(d) * form.coeffs[coordinate];
  for (unsigned e = 0; e + 1 < d; ++e) partial *= tuple[coordinate];

  const bool partial_ok = partial != 0 && valuation(partial, p) == grad_valuation;
  add_check(r, "controlling_partial",
            "the recorded partial derivative is nonzero with the recorded valuation", partial_ok);

  bool criterion;
  if (value_is_zero) {
    criterion = value == 0;
    add_check(r, "exact_zero", "the form vanishes exactly at the tuple", criterion);
  } else {
    criterion = value != 0 && valuation(value, p) == value_valuation &&
                value_valuation >= 2 * grad_valuation + 1;
    add_check(r, "hensel_inequality",
              "v(F) matches and exceeds twice the partial's valuation as Newton's lemma requires",
              criterion);
  }
  add_check(r, "stored_conditions_verified", "every recorded condition is marked verified",
            stored_conditions_all_verified(j));
}

void verify_genus_one_index(const json& j, VerifyReport& r) {
  const unsigned ell = j.at("ell").get<unsigned>();
  const uint64_t p = j.at("prime").get<uint64_t>();
  const Integer order = parse_big(j.at("order"));

  add_check(r, "prime", "p is prime", is_prime_u64(p));
  add_check(r, "good_reduction", "p avoids the bad primes 2, 3, 5 of the fixed curve",
            p != 2 && p != 3 && p != 5);
  add_check(r, "residue_class", "p = 2 (mod 3), the supersingular residue class", p % 3 == 2);
  if (!is_prime_u64(p) || p == 2 || p == 3 || p == 5) return;

  const Fq F(p, 1);
  const CurveModel E = reduce_curve(selmer_jacobian(), F);
  const Integer count = count_points(F, E);
  add_check(r, "order_recount", "the recomputed point count equals the stored order",
            count == order);
  const GroupStructure s = group_structure(F, E);
  add_check(r, "structure_recount", "the recomputed group structure matches",
            s.order == parse_big(j.at("structure").at("order")) &&
                s.m == parse_big(j.at("structure").at("m")) &&
                s.n == parse_big(j.at("structure").at("n")));

  if (ell == 4) {
    add_check(r, "quartic_point", "the group contains a point of order 4 and 4 does not divide p-1",
              (p - 1) % 4 != 0 && has_point_of_order(F, E, 4));
  } else {
    add_check(r, "ell_prime", "ell is an odd prime at least 5",
              ell >= 5 && ell % 2 == 1 && is_prime_u64(ell));
    add_check(r, "supersingular_order", "#E(F_p) = p + 1", count == Integer(p) + 1);
    add_check(r, "ell_divides", "ell divides p + 1", (Integer(p) + 1) % ell == 0);
    add_check(r, "point_of_order", "the group contains a point of exact order ell",
              has_point_of_order(F, E, ell));
  }
}

void verify_number_field(const json& j, VerifyReport& r) {
  const IntPoly f = parse_polynomial(j.at("poly").get<std::string>());
  const unsigned n = j.at("degree").get<unsigned>();
  const uint64_t ell = j.at("ell").get<uint64_t>();
  const uint64_t p = j.at("prime").get<uint64_t>();
  const unsigned order_of_p = j.at("order_of_p").get<unsigned>();
  const CurveModel E = parse_curve(j.at("curve"));
  const Integer curve_order = parse_big(j.at("curve_order"));

  add_check(r, "degree", "the stored degree equals deg f",
            f.degree() >= 1 && n == static_cast<unsigned>(f.degree()));
  add_check(r, "primes", "p and ell are prime", is_prime_u64(p) && is_prime_u64(ell));
  add_check(r, "p_exceeds_degree", "p > deg f + 1", p > n + 1);
  add_check(r, "ell_square_below_p", "ell is odd and ell^2 < p",
            ell % 2 == 1 && Integer(ell) * ell < p);
  const Integer disc = discriminant(f);
  add_check(r, "unramified", "neither p nor ell divides disc f",
            disc != 0 && disc % p != 0 && disc % ell != 0);
  const Integer ord = multiplicative_order(Integer(p) % ell, Integer(ell));
  add_check(r, "order_condition",
            "the multiplicative order of p mod ell matches and exceeds deg f",
            ord == order_of_p && ord > n);

  if (!is_prime_u64(p)) return;
  const Fq F(p, 1);
  add_check(r, "curve_smooth", "the stored curve is smooth over F_p", curve_is_smooth(F, E));
  const Integer count = count_points(F, E);
  add_check(r, "curve_order", "the recomputed point count matches and is divisible by ell",
            count == curve_order && curve_order % ell == 0);
}

void verify_genus_plan(const json& j, VerifyReport& r) {
  const unsigned g = j.at("genus").get<unsigned>();
  const unsigned k = j.at("k").get<unsigned>();
  const unsigned ell = j.at("ell").get<unsigned>();
  const unsigned branch = j.at("branch_points").get<unsigned>();
  const unsigned genus_check = j.at("genus_check").get<unsigned>();

  const GenusDecomposition dec = decompose_genus(g);
  add_check(r, "decomposition", "g - 1 = k * ell with the canonical choice of ell",
            dec.k == k && dec.ell == ell);
  add_check(r, "branch_count", "the double cover uses 2 k ell branch points",
            branch == 2 * k * ell);
  add_check(r, "riemann_hurwitz", "a double cover of a genus-1 base with that many branch "
            "points has genus g",
            riemann_hurwitz_double_cover(1, branch) == genus_check && genus_check == g);

  if (j.contains("base_certificate")) {
    const VerifyReport sub = verify_json(j.at("base_certificate"));
    add_check(r, "base_certificate", "the embedded genus-1 base certificate re-verifies",
              sub.verified);
  }
  if (j.contains("ell_witness")) {
    const VerifyReport sub = verify_json(j.at("ell_witness"));
    add_check(r, "ell_witness", "the embedded genus-1 index witness re-verifies", sub.verified);
  }
  add_check(r, "base_present", "the plan carries a genus-1 base with the required torsion "
            "obstruction",
            j.contains("base_certificate") || j.contains("ell_witness"));
}

void verify_split_prime(const json& j, VerifyReport& r) {
  const IntPoly f = parse_polynomial(j.at("poly").get<std::string>());
  const uint64_t p = j.at("prime").get<uint64_t>();
  const CycleType stored = parse_cycle(j.at("cycle_type"));

  add_check(r, "prime", "p is prime", is_prime_u64(p));
  add_check(r, "residue_class", "p = 2 (mod 3)", p % 3 == 2);
  const Integer disc = discriminant(f);
  add_check(r, "unramified", "p does not divide disc f", disc != 0 && disc % p != 0);
  add_check(r, "splits_completely", "f splits into distinct linear factors mod p",
            splits_completely(f, p));
  const auto type = cycle_type(f, p);
  const CycleType ones(static_cast<size_t>(f.degree()), 1);
  add_check(r, "cycle_type", "the recomputed cycle type is all ones and matches",
            type.has_value() && *type == stored && stored == ones);
}

bool type_is_full_cycle(const CycleType& t, unsigned d) { return t.size() == 1 && t[0] == d; }

bool type_is_big_prime_cycle(const CycleType& t, unsigned d) {
  unsigned big = 0, count_big = 0;
  for (unsigned part : t) {
    if (part > 1) {
      big = part;
      ++count_big;
    }
  }
  return count_big == 1 && is_prime_u64(big) && 2 * big > d;
}

bool type_is_transposition(const CycleType& t) {
  unsigned twos = 0;
  bool others_odd = true;
  for (unsigned part : t) {
    if (part == 2) {
      ++twos;
    } else if (part % 2 == 0) {
      others_odd = false;
    }
  }
  return twos == 1 && others_odd;
}

void verify_sn(const json& j, VerifyReport& r) {
  const IntPoly f = parse_polynomial(j.at("poly").get<std::string>());
  const uint64_t bound = j.at("scan_bound").get<uint64_t>();
  const unsigned d = static_cast<unsigned>(f.degree());
  const Integer disc = discriminant(f);

  bool evidence_ok = true;
  bool full = false, big = false, transposition = false;
  for (const json& e : j.at("evidence")) {
    const uint64_t p = e.at("prime").get<uint64_t>();
    CycleType stored = parse_cycle(e.at("cycle_type"));
    std::sort(stored.begin(), stored.end());
    if (disc % p == 0) evidence_ok = false;
    auto type = cycle_type(f, p);
    if (!type) {
      evidence_ok = false;
    } else {
      std::sort(type->begin(), type->end());
      if (*type != stored) evidence_ok = false;
    }
    full = full || type_is_full_cycle(stored, d);
    big = big || type_is_big_prime_cycle(stored, d);
    transposition = transposition || type_is_transposition(stored);
  }
  add_check(r, "evidence_cycle_types",
            "every evidence prime is unramified and reproduces its recorded cycle type",
            evidence_ok);
  const json& criteria = j.at("criteria");
  add_check(r, "criteria_flags", "the stored criterion flags follow from the stored evidence",
            criteria.at("full_cycle").get<bool>() == full &&
                criteria.at("big_prime_cycle").get<bool>() == big &&
                criteria.at("transposition").get<bool>() == transposition);
  const GaloisVerdict rerun = sn_certificate(f, bound);
  add_check(r, "full_rescan", "re-running the certification scan reproduces the verdict",
            to_string(rerun.kind) == j.at("verdict").get<std::string>() &&
                rerun.group_name == j.at("group").get<std::string>());
  if (j.at("verdict").get<std::string>() == "CertifiedSymmetric") {
    add_check(r, "symmetric_criteria", "a symmetric-group verdict requires all three criteria",
              full && big && transposition);
  }
}

void verify_norm_equation(const json& j, VerifyReport& r) {
  const IntPoly f = parse_polynomial(j.at("poly").get<std::string>());
  const unsigned d = j.at("degree").get<unsigned>();
  const unsigned m = j.at("rhs_valuation").get<unsigned>();

  add_check(r, "degree", "the stored degree equals deg f >= 3",
            f.degree() >= 3 && d == static_cast<unsigned>(f.degree()));
  add_check(r, "valuation_obstruction", "d does not divide the right-hand valuation m",
            d != 0 && m % d != 0);
  const VerifyReport sub = verify_json(j.at("galois"));
  add_check(r, "galois_subproof", "the embedded symmetric-group certificate re-verifies",
            sub.verified);
  add_check(r, "galois_symmetric", "the embedded verdict certifies the full symmetric group",
            j.at("galois").at("verdict").get<std::string>() == "CertifiedSymmetric");
}

void verify_tame_symbol(const json& j, VerifyReport& r) {
  const IntPoly fp = parse_polynomial(j.at("field_poly").get<std::string>());
  const NumberField K(fp);
  NumberField::Elem rep;
  for (const json& c : j.at("representative")) rep.push_back(parse_rat(c.get<std::string>()));
  add_check(r, "representative_shape", "the representative has one coordinate per basis element",
            rep.size() == K.degree());
  if (rep.size() != K.degree()) return;

  const std::string mode = j.at("residue_mode").get<std::string>();
  const ResidueSquareDecision decision = decide_residue_square(K, rep, mode);
  add_check(r, "square_decision",
            "re-deciding squareness of the representative reproduces the triviality verdict",
            decision.is_square == j.at("trivial").get<bool>());
  bool polys_ok = true;
  if (j.contains("rep_minimal_poly")) {
    polys_ok = polys_ok && decision.rep_minimal_poly &&
               to_string(*decision.rep_minimal_poly) == j.at("rep_minimal_poly").get<std::string>();
  }
  if (j.contains("sqrt_field_poly")) {
    polys_ok = polys_ok && decision.sqrt_field_poly &&
               to_string(*decision.sqrt_field_poly) == j.at("sqrt_field_poly").get<std::string>();
  }
  if (j.contains("sqrt_group")) {
    polys_ok =
        polys_ok && decision.sqrt_group && *decision.sqrt_group == j.at("sqrt_group").get<std::string>();
  }
  add_check(r, "minimal_polynomials", "the recomputed minimal polynomials match the stored ones",
            polys_ok);
}

void verify_k4(const json& j, VerifyReport& r) {
  const K4Report rerun = k4_s4_report();
  const json fresh = build(rerun);
  add_check(r, "group_data", "the recomputed stabilizer orders match",
            fresh.at("group_order") == j.at("group_order") &&
                fresh.at("vertex_stabilizer_orders") == j.at("vertex_stabilizer_orders") &&
                fresh.at("edge_stabilizer_orders") == j.at("edge_stabilizer_orders"));
  add_check(r, "checks_match", "the recomputed subgroup facts match", fresh.at("checks") == j.at("checks"));
}

void verify_find_ell(const json& j, VerifyReport& r) {
  const uint64_t q = j.at("q").get<uint64_t>();
  const FindEllResult rerun = find_ell(q);
  add_check(r, "recomputation", "re-running the selection reproduces N, ell and the case label",
            rerun.N == parse_big(j.at("N")) && rerun.ell == parse_big(j.at("ell")) &&
                rerun.case_label == j.at("case").get<std::string>());
  const Integer N = parse_big(j.at("N")), ell = parse_big(j.at("ell"));
  add_check(r, "postconditions",
            "ell is prime, coprime to q(q-1), divides N, and N is an admissible curve order",
            is_prime(ell) && gcd(ell, Integer(q) * (Integer(q) - 1)) == 1 && N % ell == 0 &&
                admissible_order(q, N));
}

void verify_scan(const json& j, VerifyReport& r) {
  const DiagonalForm form = parse_form(j.at("form"));
  const uint64_t p_max = j.at("p_max").get<uint64_t>();
  const auto rerun = scan_primes_for_certificate(form, p_max, 1);
  bool primes_ok = rerun.size() == j.at("primes").size();
  if (primes_ok) {
    size_t i = 0;
    for (const json& p : j.at("primes")) {
      primes_ok = primes_ok && rerun[i].prime == parse_big(p);
      ++i;
    }
  }
  add_check(r, "prime_set", "re-scanning yields the same certified primes", primes_ok);
  bool embedded_ok = true;
  for (const json& cert : j.at("certificates")) {
    if (!verify_json(cert).verified) embedded_ok = false;
  }
  add_check(r, "embedded_certificates", "every embedded certificate re-verifies", embedded_ok);
}

void verify_catalan(const json& j, VerifyReport& r) {
  const unsigned s_max = j.at("s_max").get<unsigned>();
  const unsigned t_max = j.at("t_max").get<unsigned>();
  auto rerun = catalan_solutions(s_max, t_max);
  std::vector<std::pair<unsigned, unsigned>> stored;
  for (const json& e : j.at("solutions")) {
    stored.emplace_back(e.at(0).get<unsigned>(), e.at(1).get<unsigned>());
  }
  std::sort(rerun.begin(), rerun.end());
  std::sort(stored.begin(), stored.end());
  add_check(r, "recomputation", "the exhaustive solution list matches", rerun == stored);
}

VerifyReport verify_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InvalidInput("verify: artifact has no kind field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  VerifyReport r;
  r.certificate_kind = kind;
  r.verified = true;
  try {
    if (kind == "NoAbelianPoints") {
      verify_no_abelian(j, r);
    } else if (kind == "HenselWitness") {
      verify_hensel(j, r);
    } else if (kind == "GenusOneIndexWitness") {
      verify_genus_one_index(j, r);
    } else if (kind == "NumberFieldWitness") {
      verify_number_field(j, r);
    } else if (kind == "GenusPlan") {
      verify_genus_plan(j, r);
    } else if (kind == "SplitPrime") {
      verify_split_prime(j, r);
    } else if (kind == "SnCertificate") {
      verify_sn(j, r);
    } else if (kind == "NormEquation") {
      verify_norm_equation(j, r);
    } else if (kind == "TameSymbol") {
      verify_tame_symbol(j, r);
    } else if (kind == "K4Report") {
      verify_k4(j, r);
    } else if (kind == "FindEll") {
      verify_find_ell(j, r);
    } else if (kind == "CertificateScan") {
      verify_scan(j, r);
    } else if (kind == "CatalanSolutions") {
      verify_catalan(j, r);
    } else {
      throw InvalidInput("verify: unknown certificate kind " + kind);
    }
  } catch (const InvalidInput&) {
    throw;
  } catch (const json::exception&) {
    throw InvalidInput("verify: malformed " + kind + " artifact");
  } catch (const Error& e) {
    add_check(r, "premise_recomputation", e.what(), false);
  }
  return r;
}

}  // namespace

std::string to_json_text(const NoAbelianPointsCertificate& cert) { return dump(build(cert)); }
std::string to_json_text(const HenselWitness& witness) { return dump(build(witness)); }
std::string to_json_text(const ThmEllWitness& witness) { return dump(build(witness)); }
std::string to_json_text(const Thm3Witness& witness) { return dump(build(witness)); }
std::string to_json_text(const GenusPlan& plan) { return dump(build(plan)); }
std::string to_json_text(const SplitPrimeWitness& witness) { return dump(build(witness)); }
std::string to_json_text(const GaloisVerdict& verdict) { return dump(build(verdict)); }
std::string to_json_text(const NormEquationCertificate& cert) { return dump(build(cert)); }
std::string to_json_text(const TameSymbolResult& symbol) { return dump(build(symbol)); }
std::string to_json_text(const K4Report& report) { return dump(build(report)); }
std::string to_json_text(const FindEllResult& result) { return dump(build(result)); }

std::string scan_to_json_text(const DiagonalForm& form, uint64_t p_max,
                              const std::vector<NoAbelianPointsCertificate>& certs) {
  json j;
  j["kind"] = "CertificateScan";
  j["form"] = j_form(form);
  j["p_max"] = p_max;
  json primes = json::array();
  for (const auto& c : certs) primes.push_back(j_int(c.prime));
  j["primes"] = primes;
  json arr = json::array();
  for (const auto& c : certs) arr.push_back(build(c));
  j["certificates"] = arr;
  return dump(j);
}

std::string catalan_to_json_text(unsigned s_max, unsigned t_max,
                                 const std::vector<std::pair<unsigned, unsigned>>& solutions) {
  json j;
  j["kind"] = "CatalanSolutions";
  j["s_max"] = s_max;
  j["t_max"] = t_max;
  json arr = json::array();
  for (const auto& [s, t] : solutions) arr.push_back(json::array({s, t}));
  j["solutions"] = arr;
  return dump(j);
}

VerifyReport verify_certificate_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception&) {
    throw InvalidInput("verify: input is not valid JSON");
  }
  return verify_json(j);
}

std::string to_json_text(const VerifyReport& report) {
  json j;
  j["kind"] = "VerifyReport";
  j["certificate_kind"] = report.certificate_kind;
  j["verified"] = report.verified;
  j["checks"] = j_conditions(report.checks);
  return dump(j);
}

}  // namespace abelcert
