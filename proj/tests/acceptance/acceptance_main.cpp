// Acceptance gate: ten end-to-end criteria covering the certificate family,
// the positive local-solvability control, the curve-order constructions, the
// genus decomposition, the Laurent-series laboratory, the oracle-equivalence
// corpus, and CLI determinism.  Each criterion prints exactly one line,
// [PASS] or [FAIL]; the process exits with the number of failures.
//
// Wall-clock budgets (seconds) are pinned next to the criteria they bound.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

#include "abelcert/appendix.hpp"
#include "abelcert/diagonal.hpp"
#include "abelcert/elliptic.hpp"
#include "abelcert/errors.hpp"
#include "abelcert/galois.hpp"
#include "abelcert/global.hpp"
#include "abelcert/laurent.hpp"
#include "abelcert/local.hpp"
#include "abelcert/poly.hpp"

using namespace abelcert;

namespace {

int g_failures = 0;

// Runs one criterion, timing it and enforcing an optional wall-clock budget.
// The body returns an empty string on success or a short failure reason.
void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("unexpected exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
    std::ostringstream reason;
    reason << "exceeded the " << budget_seconds << " s budget";
    failure = reason.str();
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << (failure.empty() ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title
       << " [" << elapsed << "s]";
  if (!failure.empty()) {
    line << " -- " << failure;
    ++g_failures;
  }
  std::cout << line.str() << "\n" << std::flush;
}

Integer int_pow(const Integer& base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<uint64_t> primes_up_to(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p <= n; ++p) {
    if (is_prime(Integer(p))) out.push_back(p);
  }
  return out;
}

// All prime powers p^a <= n, ascending.
std::vector<uint64_t> prime_powers_up_to(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t p : primes_up_to(n)) {
    for (uint64_t q = p; q <= n; q *= p) {
      out.push_back(q);
      if (q > n / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(ABELCERT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// ---------------------------------------------------------------------------

std::string criterion_theorem1_family() {
  // a X^3 + b p Y^3 + c p^2 Z^3 for p = 2 (mod 3) and unit triples (a,b,c):
  // the certificate must be issued, and an independent brute-force search
  // must confirm that no primitive tuple solves the form mod p^3.
  unsigned certified = 0;
  for (uint64_t p : {2, 5, 11, 17, 23}) {
    for (int a = 1; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) {
        for (int c = 1; c <= 6; ++c) {
          if (a % p == 0 || b % p == 0 || c % p == 0) continue;
          const DiagonalForm form =
              build_theorem1_form(Integer(a), Integer(b), Integer(c), Integer(p));
          const auto cert = certify_no_abelian_points(form, Integer(p));
          std::ostringstream id;
          id << "(a,b,c,p)=(" << a << "," << b << "," << c << "," << p << ")";
          if (!cert) return "no certificate for " + id.str();
          for (const Condition& cond : cert->conditions) {
            if (!cond.verified) return "unverified condition for " + id.str();
          }
          const BruteMode mode = p <= 11 ? BruteMode::Exhaustive : BruteMode::Cascade;
          if (brute_force_primitive(form, Integer(p), 3, mode)) {
            return "brute force found a primitive zero mod p^3 for " + id.str();
          }
          ++certified;
        }
      }
    }
  }
  if (certified != 800) {
    return "expected 800 instances, saw " + std::to_string(certified);
  }
  return "";
}

std::string criterion_selmer_local_control() {
  // The everywhere-locally-solvable cubic: an explicitly liftable witness
  // must exist at every prime, with precision escalation capped at 5.
  const DiagonalForm selmer = parse_diagonal_form("3x^3 + 4y^3 + 5z^3");
  for (uint64_t p : primes_up_to(100)) {
    const auto witness = local_solve_escalating(selmer, Integer(p), 5);
    if (!witness) return "no liftable witness at p = " + std::to_string(p);
    if (!witness->value_is_zero &&
        witness->value_valuation < 2 * witness->grad_valuation + 1) {
      return "witness inequality violated at p = " + std::to_string(p);
    }
    for (const Condition& cond : witness->conditions) {
      if (!cond.verified) return "unverified witness condition at p = " + std::to_string(p);
    }
  }
  return "";
}

std::string criterion_find_ell() {
  // Postconditions at every prime power q <= 10^4, then explicit curve
  // realization of the order N by model enumeration for every q <= 256.
  for (uint64_t q : prime_powers_up_to(10'000)) {
    const FindEllResult r = find_ell(q);
    const Integer qq1 = Integer(q) * (Integer(q) - 1);
    if (!is_prime(r.ell)) return "ell not prime at q = " + std::to_string(q);
    if (gcd(r.ell, qq1) != 1) return "gcd(ell, q(q-1)) != 1 at q = " + std::to_string(q);
    if (r.N % r.ell != 0) return "ell does not divide N at q = " + std::to_string(q);
    if (!admissible_order(q, r.N)) return "N not admissible at q = " + std::to_string(q);
  }
  for (uint64_t q : prime_powers_up_to(256)) {
    const FindEllResult r = find_ell(q);
    uint64_t p = q;
    unsigned a = 1;
    for (uint64_t d = 2; d * d <= p; ++d) {
      while (p % d == 0 && p > d) {
        p /= d;
        ++a;
      }
    }
    const Fq F(p, a);
    const auto model =
        search_curve_with_order(F, [&](const Integer& N) { return N == r.N; });
    if (!model) return "no curve with N points over F_" + std::to_string(q);
    if (count_points(F, *model) != r.N) {
      return "realized curve order mismatch at q = " + std::to_string(q);
    }
  }
  return "";
}

std::string criterion_catalan() {
  const std::vector<std::pair<unsigned, unsigned>> expected = {
      {1, 0}, {1, 1}, {2, 1}, {3, 2}};
  auto got = catalan_solutions(60, 40);
  std::sort(got.begin(), got.end());
  if (got != expected) return "solution list differs from {(1,0),(1,1),(2,1),(3,2)}";
  return "";
}

std::string criterion_supersingular_witnesses() {
  const ThmEllWitness w4 = theorem_ell_search(4);
  if (w4.p != 11 || w4.structure.m != 1 || w4.structure.n != 12) {
    return "ell = 4 did not reproduce p = 11 with group Z/12";
  }
  const ThmEllWitness w5 = theorem_ell_search(5);
  if (w5.p != 29 || w5.order != 30) return "ell = 5 did not return p = 29 with order 30";
  for (unsigned ell : {5, 7, 11, 13, 17, 19, 23}) {
    const ThmEllWitness w = theorem_ell_search(ell);
    if (w.order != Integer(w.p) + 1) {
      return "order != p + 1 at ell = " + std::to_string(ell);
    }
    if (w.order % ell != 0) return "ell does not divide the order at ell = " + std::to_string(ell);
  }
  return "";
}

std::string criterion_supersingular_reduction() {
  // CM criterion echo for the j = 0 Jacobian: supersingular (order p + 1)
  // exactly at the good primes p = 2 (mod 3).
  const CurveQ E = selmer_jacobian();
  for (uint64_t p : primes_up_to(500)) {
    if (p == 2 || p == 3 || p == 5) continue;  // bad reduction
    const Fq F(p, 1);
    const CurveModel Ep = reduce_curve(E, F);
    const Integer N = count_points(F, Ep);
    const bool supersingular = N == Integer(p) + 1;
    if (supersingular != (p % 3 == 2)) {
      return "supersingularity mismatch at p = " + std::to_string(p);
    }
  }
  return "";
}

std::string criterion_genus_decomposition() {
  for (unsigned g = 4; g <= 10'000; ++g) {
    const GenusDecomposition dec = decompose_genus(g);
    if (dec.k * dec.ell != g - 1) return "k * ell != g - 1 at g = " + std::to_string(g);
    const bool ell_ok =
        dec.ell == 4 || (dec.ell % 2 == 1 && is_prime(Integer(dec.ell)));
    if (!ell_ok) return "ell neither 4 nor an odd prime at g = " + std::to_string(g);
    if (riemann_hurwitz_double_cover(1, 2 * dec.k * dec.ell) != g) {
      return "double-cover genus inconsistent at g = " + std::to_string(g);
    }
  }
  try {
    genus_construction_plan(3);
    return "genus 3 unexpectedly produced a plan";
  } catch (const HypothesisError&) {
    // expected: the decomposition g - 1 = k * ell requires g >= 4
  }
  return "";
}

std::string criterion_appendix() {
  for (const char* text : {"x^3 - x - 1", "x^4 - x - 1"}) {
    if (!norm_equation_certificate(parse_polynomial(text), 2)) {
      return std::string("no norm-equation certificate for ") + text + ", m = 2";
    }
  }

  if (quartic_galois_group(parse_polynomial("x^4 - 2")) != QuarticGroup::D4) {
    return "quartic group of x^4 - 2 is not D4";
  }
  const auto field = laurent_number_field(parse_polynomial("x^2 - 2"));
  const TameSymbolResult symbol =
      tame_symbol(parse_laurent("r", field), parse_laurent("t", field), "Qab");
  if (symbol.trivial) return "the (sqrt 2, uniformizer) symbol came out split";
  if (!symbol.sqrt_group || *symbol.sqrt_group != "D4") {
    return "the square-root field of the symbol residue was not classified D4";
  }

  const K4Report k4 = k4_s4_report();
  if (!(k4.vertex_stabilizers_order_6 && k4.vertex_stabilizers_non_normal &&
        k4.edge_stabilizers_order_4 && k4.edge_stabilizers_non_normal &&
        k4.commutator_is_a4 && k4.only_overgroups_a4_s4 && k4.a4_s4_fix_nothing)) {
    return "an exhaustive stabilizer assertion failed";
  }

  for (const char* text : {"x^3 - x - 1", "x^4 - x - 1", "x^5 - x - 1"}) {
    if (sn_certificate(parse_polynomial(text)).kind != GaloisVerdictKind::CertifiedSymmetric) {
      return std::string("failed to certify the symmetric group for ") + text;
    }
  }
  for (const char* text : {"x^4 + 1", "x^4 + x^3 + x^2 + x + 1", "x^3 - 3x - 1"}) {
    if (sn_certificate(parse_polynomial(text)).kind == GaloisVerdictKind::CertifiedSymmetric) {
      return std::string("wrongly certified the symmetric group for ") + text;
    }
  }
  return "";
}

std::string criterion_oracle_equivalence() {
  // 500 generated diagonal forms, mixed staircase and non-staircase
  // profiles: the valuation criterion may never declare a form anisotropic
  // when a primitive p-adic zero exists at the refuting precision, and the
  // two brute-force engines must agree verdict for verdict.
  std::mt19937_64 rng(0x5eed5'ca1eULL);
  const uint64_t corpus_primes[] = {2, 3, 5, 7};
  unsigned staircase_forms = 0, solvable_forms = 0, refuted_forms = 0;

  auto unit_mod = [&](uint64_t p) {
    std::uniform_int_distribution<int> pick(1, 9);
    int u = pick(rng);
    while (u % static_cast<int>(p) == 0) u = pick(rng);
    std::uniform_int_distribution<int> sign(0, 1);
    return sign(rng) ? Integer(u) : Integer(-u);
  };

  auto check_form = [&](const DiagonalForm& form, uint64_t p) -> std::string {
    const ValuationProfile profile = valuation_profile(form, Integer(p));
    unsigned max_a = 0;
    for (const auto& entry : profile.entries) max_a = std::max(max_a, entry.first);
    const unsigned m = max_a + 1;
    const bool anisotropic_verdict = staircase_check(profile, form.degree, 1);
    const bool auto_zero = brute_force_primitive(form, Integer(p), m, BruteMode::Auto);
    const bool cascade_zero = brute_force_primitive(form, Integer(p), m, BruteMode::Cascade);
    std::ostringstream id;
    id << to_string(form) << " at p = " << p << ", m = " << m;
    if (auto_zero != cascade_zero) return "engines disagree on " + id.str();
    if (anisotropic_verdict && cascade_zero) {
      return "false anisotropic verdict on " + id.str();
    }
    if (anisotropic_verdict) ++staircase_forms;
    cascade_zero ? ++solvable_forms : ++refuted_forms;
    return "";
  };

  // 240 cubic and 240 quintic three-variable forms; every second form gets
  // a distinct-residue (staircase) valuation vector, the rest are random.
  for (unsigned n = 0; n < 480; ++n) {
    const unsigned d = n < 240 ? 3 : 5;
    const uint64_t p = corpus_primes[rng() % 4];
    std::vector<unsigned> vals(3);
    if (n % 2 == 0) {
      // Three distinct valuations <= 3 that stay distinct mod d.
      std::vector<unsigned> pool = d == 3 ? std::vector<unsigned>{0, 1, 2}
                                          : std::vector<unsigned>{0, 1, 2, 3};
      std::shuffle(pool.begin(), pool.end(), rng);
      vals.assign(pool.begin(), pool.begin() + 3);
      if (d == 3 && rng() % 2 == 1) {
        for (unsigned& v : vals) ++v;  // shifted staircase, common factor p
      }
    } else {
      for (unsigned& v : vals) v = static_cast<unsigned>(rng() % 3);
    }
    std::vector<Integer> coeffs;
    for (unsigned v : vals) coeffs.push_back(unit_mod(p) * int_pow(Integer(p), v));
    const std::string reason = check_form(make_diagonal_form(d, std::move(coeffs)), p);
    if (!reason.empty()) return reason;
  }
  // 20 full five-variable quintic staircases at p = 2 (refuted at mod 2^5).
  for (unsigned n = 0; n < 20; ++n) {
    std::vector<unsigned> vals = {0, 1, 2, 3, 4};
    std::shuffle(vals.begin(), vals.end(), rng);
    std::vector<Integer> coeffs;
    for (unsigned v : vals) coeffs.push_back(unit_mod(2) * int_pow(Integer(2), v));
    const std::string reason = check_form(make_diagonal_form(5, std::move(coeffs)), 2);
    if (!reason.empty()) return reason;
  }

  if (staircase_forms < 150 || solvable_forms < 100 || refuted_forms < 150) {
    std::ostringstream counts;
    counts << "corpus not mixed enough: " << staircase_forms << " staircase, " << solvable_forms
           << " solvable, " << refuted_forms << " refuted";
    return counts.str();
  }
  return "";
}

std::string criterion_cli_determinism() {
  const std::string artifact = "/tmp/abelcert_acceptance_artifact.json";
  {
    const CliRun seed = run_cli("find-ell --q 8 --out " + artifact);
    if (seed.exit_code != 0) return "could not write the verify fixture";
  }
  const std::string commands[] = {
      "certify-cubic --a 2 --b 4 --c 5 --p 2",
      "certify-cy --ell 5 --p 2",
      "scan --form \"2x^3 + 4y^3 + 5z^3\" --pmax 30",
      "solve-local --form \"3x^3 + 4y^3 + 5z^3\" --p 3",
      "find-ell --q 64",
      "thm-ell --ell 5",
      "thm3 --f \"x^2 - 2\"",
      "cor2 --f \"x^3 - x - 1\"",
      "genus-plan --g 5",
      "norm-cert --f \"x^3 - x - 1\" --m 2",
      "tame-symbol --a r --b t --f \"x^2 - 2\" --residue Qab",
      "sn-cert --f \"x^4 - x - 1\"",
      "k4",
      "catalan",
      "verify --in " + artifact,
  };
  for (const std::string& cmd : commands) {
    const CliRun first = run_cli(cmd);
    const CliRun second = run_cli(cmd);
    if (first.exit_code != 0) return "exit " + std::to_string(first.exit_code) + " from: " + cmd;
    if (first.exit_code != second.exit_code || first.output != second.output) {
      return "output differs between runs of: " + cmd;
    }
    if (first.output.empty()) return "no output from: " + cmd;
  }
  std::remove(artifact.c_str());
  return "";
}

}  // namespace

int main() {
  criterion(1, "staircase cubics certify and brute force refutes them (800 instances)", 60,
            criterion_theorem1_family);
  criterion(2, "locally solvable control has liftable witnesses at every prime up to 100", 120,
            criterion_selmer_local_control);
  criterion(3, "curve order and auxiliary prime postconditions, with explicit realization", 600,
            criterion_find_ell);
  criterion(4, "the exponential gap equation has exactly four small solutions", 0,
            criterion_catalan);
  criterion(5, "supersingular witnesses: ell = 4 at p = 11 (Z/12), ell = 5 at p = 29, order p+1",
            0, criterion_supersingular_witnesses);
  criterion(6, "j = 0 reduction is supersingular exactly at good primes p = 2 (mod 3)", 60,
            criterion_supersingular_reduction);
  criterion(7, "genus decomposition and double-cover bookkeeping for 4 <= g <= 10^4", 0,
            criterion_genus_decomposition);
  criterion(8, "norm equations, the quaternion symbol, stabilizers, and group certificates", 0,
            criterion_appendix);
  criterion(9, "valuation criterion never contradicts brute force on a 500-form corpus", 0,
            criterion_oracle_equivalence);
  criterion(10, "every subcommand is byte-for-byte deterministic", 0, criterion_cli_determinism);

  if (g_failures == 0) {
    std::cout << "all 10 acceptance criteria passed\n";
  } else {
    std::cout << g_failures << " acceptance criteria failed\n";
  }
  return g_failures;
}
