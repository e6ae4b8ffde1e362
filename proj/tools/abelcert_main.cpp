// abelcert: construct and verify machine-checkable certificates that
// hypersurfaces and curves acquire no points over maximal abelian extensions.
//
// Every subcommand prints one JSON artifact (default) or a human-readable
// digest to stdout; --out additionally writes the artifact to a file.  Output
// is deterministic byte for byte for a fixed invocation.
//
// Exit codes:
//   0  success (a certificate/witness/report was produced and printed)
//   1  the method does not apply or finds no certificate for this input
//   2  invalid usage or malformed input
//   3  a search or enumeration exceeded its budget
//   4  internal consistency check failed (a bug, never silent)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelcert/appendix.hpp"
#include "abelcert/errors.hpp"
#include "abelcert/galois.hpp"
#include "abelcert/global.hpp"
#include "abelcert/laurent.hpp"
#include "abelcert/local.hpp"
#include "abelcert/serialize.hpp"

namespace {

using namespace abelcert;

struct OutputOptions {
  std::string format = "json";  // "json" or "human"
  std::string out_path;         // optional file target for the artifact
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format: json or human")
      ->check(CLI::IsMember({"json", "human"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Also write the JSON artifact to this file");
}

// Human digest rendered generically from the artifact itself: scalar facts,
// then the checked conditions, then the reasoning chain.
std::string human_digest(const std::string& json_text) {
  const auto j = nlohmann::ordered_json::parse(json_text);
  std::ostringstream out;
  out << j.at("kind").get<std::string>() << "\n";
  for (const auto& [key, value] : j.items()) {
    if (key == "kind" || key == "conditions" || key == "lemma_chain") continue;
    if (value.is_object() || value.is_array()) {
      out << "  " << key << ": " << value.dump() << "\n";
    } else if (value.is_string()) {
      out << "  " << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << "  " << key << ": " << value.dump() << "\n";
    }
  }
  if (j.contains("conditions")) {
    out << "conditions:\n";
    for (const auto& c : j.at("conditions")) {
      out << "  [" << (c.at("verified").get<bool>() ? "ok" : "FAIL") << "] "
          << c.at("name").get<std::string>() << ": " << c.at("statement").get<std::string>()
          << "\n";
    }
  }
  if (j.contains("lemma_chain")) {
    out << "reasoning:\n";
    for (const auto& step : j.at("lemma_chain")) {
      out << "  - " << step.get<std::string>() << "\n";
    }
  }
  return out.str();
}

int emit(const std::string& json_text, const OutputOptions& opts) {
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << opts.out_path << " for writing\n";
      return 2;
    }
    file << json_text;
  }
  if (opts.format == "human") {
    std::cout << human_digest(json_text);
  } else {
    std::cout << json_text;
  }
  return 0;
}

int no_certificate(const std::string& detail) {
  std::cerr << "no certificate by this method: " << detail << "\n";
  return 1;
}

unsigned scan_workers_from_env() {
  const char* env = std::getenv("ABELCERT_WORKERS");
  if (env == nullptr) return 1;
  const long v = std::strtol(env, nullptr, 10);
  if (v < 1 || v > 256) throw InvalidInput("ABELCERT_WORKERS must be between 1 and 256");
  return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certificates for curves and hypersurfaces without points over maximal "
      "abelian extensions"};
  app.require_subcommand(1);

  // ---- certify-cubic ------------------------------------------------------
  struct {
    long long a = 0, b = 0, c = 0;
    long long p = -1;
    uint64_t p_max = 1000;
    OutputOptions out;
  } cubic;
  auto* cmd_cubic = app.add_subcommand(
      "certify-cubic", "Certify a X^3 + b Y^3 + c Z^3 locally solvable nowhere abelian at p");
  cmd_cubic->add_option("--a", cubic.a, "Coefficient of X^3")->required();
  cmd_cubic->add_option("--b", cubic.b, "Coefficient of Y^3")->required();
  cmd_cubic->add_option("--c", cubic.c, "Coefficient of Z^3")->required();
  cmd_cubic->add_option("--p", cubic.p, "Certify at this prime; omit to scan for the smallest");
  cmd_cubic->add_option("--pmax", cubic.p_max, "Scan bound when --p is omitted")
      ->capture_default_str();
  add_output_options(cmd_cubic, cubic.out);

  // ---- certify-cy ---------------------------------------------------------
  struct {
    long long ell = 0, p = 0;
    OutputOptions out;
  } cy;
  auto* cmd_cy = app.add_subcommand(
      "certify-cy", "Certify the degree-ell staircase hypersurface sum p^i X_i^ell at p");
  cmd_cy->add_option("--ell", cy.ell, "Degree and variable count")->required();
  cmd_cy->add_option("--p", cy.p, "Prime")->required();
  add_output_options(cmd_cy, cy.out);

  // ---- scan ---------------------------------------------------------------
  struct {
    std::string form;
    uint64_t p_max = 100;
    OutputOptions out;
  } scan;
  auto* cmd_scan =
      app.add_subcommand("scan", "Scan all primes up to a bound for staircase certificates");
  cmd_scan->add_option("--form", scan.form, "Diagonal form, e.g. \"3x^3 + 4y^3 + 5z^3\"")
      ->required();
  cmd_scan->add_option("--pmax", scan.p_max, "Upper bound on the primes scanned")
      ->capture_default_str();
  add_output_options(cmd_scan, scan.out);

  // ---- solve-local --------------------------------------------------------
  struct {
    std::string form;
    long long p = 0;
    unsigned max_precision = 5;
    uint64_t budget = 50'000'000;
    OutputOptions out;
  } solve;
  auto* cmd_solve = app.add_subcommand(
      "solve-local", "Search for a Newton-lemma witness of a primitive p-adic zero");
  cmd_solve->add_option("--form", solve.form, "Diagonal form")->required();
  cmd_solve->add_option("--p", solve.p, "Prime")->required();
  cmd_solve->add_option("--max-precision", solve.max_precision, "Escalation cap on p-adic precision")
      ->capture_default_str();
  cmd_solve->add_option("--budget", solve.budget, "Enumeration budget")->capture_default_str();
  add_output_options(cmd_solve, solve.out);

  // ---- find-ell -----------------------------------------------------------
  struct {
    uint64_t q = 0;
    OutputOptions out;
  } fell;
  auto* cmd_fell = app.add_subcommand(
      "find-ell", "Curve order N and prime ell with gcd(ell, q(q-1)) = 1 for the field F_q");
  cmd_fell->add_option("--q", fell.q, "Prime power")->required();
  add_output_options(cmd_fell, fell.out);

  // ---- thm-ell ------------------------------------------------------------
  struct {
    unsigned ell = 0;
    uint64_t p_max = 100000;
    OutputOptions out;
  } tell;
  auto* cmd_tell = app.add_subcommand(
      "thm-ell", "Genus-one index witness: the fixed curve acquires an ell-torsion obstruction");
  cmd_tell->add_option("--ell", tell.ell, "4 or an odd prime >= 5")->required();
  cmd_tell->add_option("--pmax", tell.p_max, "Bound for the prime search")->capture_default_str();
  add_output_options(cmd_tell, tell.out);

  // ---- thm3 ---------------------------------------------------------------
  struct {
    std::string f;
    uint64_t p_max = 100000, ell_max = 97;
    OutputOptions out;
  } t3;
  auto* cmd_t3 = app.add_subcommand(
      "thm3", "Number-field witness: a curve over F_p whose order obstruction survives "
              "every abelian base change described by f");
  cmd_t3->add_option("--f", t3.f, "Monic squarefree integer polynomial")->required();
  cmd_t3->add_option("--pmax", t3.p_max, "Bound for the prime search")->capture_default_str();
  cmd_t3->add_option("--ellmax", t3.ell_max, "Bound for the auxiliary prime ell")
      ->capture_default_str();
  add_output_options(cmd_t3, t3.out);

  // ---- cor2 ---------------------------------------------------------------
  struct {
    std::string f;
    uint64_t p_max = 100000;
    OutputOptions out;
  } c2;
  auto* cmd_c2 = app.add_subcommand(
      "cor2", "Smallest prime p = 2 (mod 3) splitting completely in the field cut out by f");
  cmd_c2->add_option("--f", c2.f, "Monic squarefree integer polynomial")->required();
  cmd_c2->add_option("--pmax", c2.p_max, "Scan bound")->capture_default_str();
  add_output_options(cmd_c2, c2.out);

  // ---- genus-plan ---------------------------------------------------------
  struct {
    unsigned g = 0;
    OutputOptions out;
  } gp;
  auto* cmd_gp = app.add_subcommand(
      "genus-plan", "Branched double-cover construction plan for a curve of genus g");
  cmd_gp->add_option("--g", gp.g, "Target genus (>= 4)")->required();
  add_output_options(cmd_gp, gp.out);

  // ---- norm-cert ----------------------------------------------------------
  struct {
    std::string f;
    unsigned m = 0;
    uint64_t bound = 500;
    OutputOptions out;
  } nc;
  auto* cmd_nc = app.add_subcommand(
      "norm-cert", "Anisotropy certificate for N_{K/Q}(X) = t Z^d over Q^ab((t^(1/2)))");
  cmd_nc->add_option("--f", nc.f, "Monic polynomial cutting out K")->required();
  cmd_nc->add_option("--m", nc.m, "Valuation of the right-hand side (v(t) = 2 normalization)")
      ->required();
  cmd_nc->add_option("--bound", nc.bound, "Prime scan bound for the symmetric-group certificate")
      ->capture_default_str();
  add_output_options(cmd_nc, nc.out);

  // ---- tame-symbol --------------------------------------------------------
  struct {
    std::string a, b;
    std::string f = "x";
    std::string residue = "Qab";
    OutputOptions out;
  } ts;
  auto* cmd_ts = app.add_subcommand(
      "tame-symbol", "Quaternion symbol (a, b) over a complete discretely valued field, "
                     "decided in the residue field");
  cmd_ts->add_option("--a", ts.a,
                     "Laurent series in the local uniformizer t, e.g. \"r + t\" or \"4\" "
                     "(in Qab mode t denotes the uniformizer t^(1/2) of Q^ab((t^(1/2))))")
      ->required();
  cmd_ts->add_option("--b", ts.b, "Laurent series in the local uniformizer t")->required();
  cmd_ts->add_option("--f", ts.f, "Minimal polynomial of the residue coefficient field (default Q)")
      ->capture_default_str();
  cmd_ts->add_option("--residue", ts.residue, "Residue square test: Q (exact) or Qab (abelian)")
      ->check(CLI::IsMember({"Q", "Qab"}))
      ->capture_default_str();
  add_output_options(cmd_ts, ts.out);

  // ---- sn-cert ------------------------------------------------------------
  struct {
    std::string f;
    uint64_t bound = 500;
    OutputOptions out;
  } sn;
  auto* cmd_sn = app.add_subcommand(
      "sn-cert", "Certify a full symmetric Galois group from cycle types at good primes");
  cmd_sn->add_option("--f", sn.f, "Monic irreducible integer polynomial")->required();
  cmd_sn->add_option("--bound", sn.bound, "Prime scan bound")->capture_default_str();
  add_output_options(cmd_sn, sn.out);

  // ---- k4 -----------------------------------------------------------------
  struct {
    OutputOptions out;
  } k4;
  auto* cmd_k4 = app.add_subcommand(
      "k4", "Stabilizer report for the symmetric action on the complete graph on 4 vertices");
  add_output_options(cmd_k4, k4.out);

  // ---- catalan ------------------------------------------------------------
  struct {
    unsigned s_max = 60, t_max = 40;
    OutputOptions out;
  } cat;
  auto* cmd_cat =
      app.add_subcommand("catalan", "All solutions of |2^s - 3^t| = 1 within the exponent box");
  cmd_cat->add_option("--smax", cat.s_max, "Bound on s")->capture_default_str();
  cmd_cat->add_option("--tmax", cat.t_max, "Bound on t")->capture_default_str();
  add_output_options(cmd_cat, cat.out);

  // ---- verify -------------------------------------------------------------
  struct {
    std::string in_path;
    OutputOptions out;
  } ver;
  auto* cmd_ver = app.add_subcommand(
      "verify", "Load a serialized artifact and re-run all of its machine-checkable premises");
  cmd_ver->add_option("--in", ver.in_path, "Path to a JSON artifact")->required();
  add_output_options(cmd_ver, ver.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_cubic->parsed()) {
      const auto form = make_diagonal_form(
          3, {Integer(cubic.a), Integer(cubic.b), Integer(cubic.c)});
      if (cubic.p >= 0) {
        const auto cert = certify_no_abelian_points(form, Integer(cubic.p));
        if (!cert) {
          return no_certificate("the valuation profile at p = " + std::to_string(cubic.p) +
                                " is not a staircase with the required coprimality");
        }
        return emit(to_json_text(*cert), cubic.out);
      }
      const auto certs = scan_primes_for_certificate(form, cubic.p_max, 1);
      if (certs.empty()) {
        return no_certificate("no prime up to " + std::to_string(cubic.p_max) +
                              " yields a staircase certificate for this form");
      }
      return emit(to_json_text(certs.front()), cubic.out);
    }

    if (cmd_cy->parsed()) {
      const auto form = build_cy_form(Integer(cy.ell), Integer(cy.p));
      const auto cert = certify_no_abelian_points(form, Integer(cy.p));
      if (!cert) {
        return no_certificate("the staircase family requires gcd(ell, p(p-1)) = 1");
      }
      return emit(to_json_text(*cert), cy.out);
    }

    if (cmd_scan->parsed()) {
      const auto form = parse_diagonal_form(scan.form);
      const auto certs = scan_primes_for_certificate(form, scan.p_max, scan_workers_from_env());
      const int rc = emit(scan_to_json_text(form, scan.p_max, certs), scan.out);
      if (rc != 0) return rc;
      if (certs.empty()) {
        std::cerr << "no certificate by this method: no prime up to " << scan.p_max
                  << " yields a staircase certificate for this form\n";
        return 1;
      }
      return 0;
    }

    if (cmd_solve->parsed()) {
      const auto form = parse_diagonal_form(solve.form);
      const auto witness =
          local_solve_escalating(form, Integer(solve.p), solve.max_precision, solve.budget);
      if (!witness) {
        return no_certificate("no primitive zero with a Newton-lemma certificate up to precision " +
                              std::to_string(solve.max_precision));
      }
      return emit(to_json_text(*witness), solve.out);
    }

    if (cmd_fell->parsed()) {
      return emit(to_json_text(find_ell(fell.q)), fell.out);
    }

    if (cmd_tell->parsed()) {
      SearchBounds bounds;
      bounds.p_max = tell.p_max;
      return emit(to_json_text(theorem_ell_search(tell.ell, bounds)), tell.out);
    }

    if (cmd_t3->parsed()) {
      SearchBounds bounds;
      bounds.p_max = t3.p_max;
      bounds.ell_max = t3.ell_max;
      return emit(to_json_text(theorem3_search(parse_polynomial(t3.f), bounds)), t3.out);
    }

    if (cmd_c2->parsed()) {
      const auto witness = corollary2_witness(parse_polynomial(c2.f), c2.p_max);
      if (!witness) {
        return no_certificate("no prime p = 2 (mod 3) up to " + std::to_string(c2.p_max) +
                              " splits completely in this field");
      }
      return emit(to_json_text(*witness), c2.out);
    }

    if (cmd_gp->parsed()) {
      return emit(to_json_text(genus_construction_plan(gp.g)), gp.out);
    }

    if (cmd_nc->parsed()) {
      const auto cert = norm_equation_certificate(parse_polynomial(nc.f), nc.m, nc.bound);
      if (!cert) {
        return no_certificate(
            "requires a certified full symmetric Galois group and d not dividing m");
      }
      return emit(to_json_text(*cert), nc.out);
    }

    if (cmd_ts->parsed()) {
      const auto field =
          ts.f == "x" ? laurent_rational_field() : laurent_number_field(parse_polynomial(ts.f));
      // The input symbol is the local uniformizer itself (t^(1/2) in Qab mode).
      const auto a = parse_laurent(ts.a, field);
      const auto b = parse_laurent(ts.b, field);
      return emit(to_json_text(tame_symbol(a, b, ts.residue)), ts.out);
    }

    if (cmd_sn->parsed()) {
      return emit(to_json_text(sn_certificate(parse_polynomial(sn.f), sn.bound)), sn.out);
    }

    if (cmd_k4->parsed()) {
      return emit(to_json_text(k4_s4_report()), k4.out);
    }

    if (cmd_cat->parsed()) {
      return emit(catalan_to_json_text(cat.s_max, cat.t_max,
                                       catalan_solutions(cat.s_max, cat.t_max)),
                  cat.out);
    }

    if (cmd_ver->parsed()) {
      std::ifstream file(ver.in_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot read " << ver.in_path << "\n";
        return 2;
      }
      std::ostringstream buffer;
      buffer << file.rdbuf();
      const VerifyReport report = verify_certificate_text(buffer.str());
      const int rc = emit(to_json_text(report), ver.out);
      if (rc != 0) return rc;
      return report.verified ? 0 : 1;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "method inapplicable: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }

  return 2;  // unreachable: a subcommand is required
}
