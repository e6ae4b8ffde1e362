#include <string>

#include "abelcert/serialize.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace abelcert;
using nlohmann::json;

namespace {

void expect_verified(const std::string& text, const char* kind) {
  const VerifyReport rep = verify_certificate_text(text);
  CAPTURE(kind);
  CHECK(rep.certificate_kind == kind);
  CHECK(rep.verified);
  CHECK_FALSE(rep.checks.empty());
  for (const Condition& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.statement);
    CHECK(c.verified);
  }
}

}  // namespace

TEST_SUITE("formats") {

TEST_CASE("serialization is deterministic and newline-terminated") {
  const auto cert = certify_no_abelian_points(parse_diagonal_form("2x^3 + 4y^3 + 5z^3"),
                                              Integer(2));
  REQUIRE(cert.has_value());
  const std::string a = to_json_text(*cert);
  const std::string b = to_json_text(*cert);
  CHECK(a == b);
  CHECK(a.back() == '\n');
  CHECK(json::parse(a)["kind"] == "NoAbelianPoints");
}

TEST_CASE("large integers serialize as decimal strings, small ones as numbers") {
  // 2^64 + 15 = 21 (mod 23): a legal unit coefficient far beyond 2^53.
  const Integer big = (Integer(1) << 64) + 15;
  REQUIRE(big % 23 != 0);
  const auto cert = certify_no_abelian_points(
      make_diagonal_form(3, {big, Integer(23), Integer(23) * 23 * 7}), Integer(23));
  REQUIRE(cert.has_value());
  const std::string text = to_json_text(*cert);
  CHECK(text.find("\"18446744073709551631\"") != std::string::npos);
  const json j = json::parse(text);
  CHECK(j["prime"] == 23);  // a plain JSON number
  expect_verified(text, "NoAbelianPoints");
}

TEST_CASE("every artifact kind round-trips through its verifier") {
  const DiagonalForm selmer = parse_diagonal_form("3x^3 + 4y^3 + 5z^3");
  const DiagonalForm stair = parse_diagonal_form("x^3 + 11y^3 + 7260z^3");

  expect_verified(to_json_text(*certify_no_abelian_points(stair, Integer(11))),
                  "NoAbelianPoints");
  expect_verified(to_json_text(*local_solve_escalating(selmer, Integer(3))), "HenselWitness");
  expect_verified(to_json_text(theorem_ell_search(5)), "GenusOneIndexWitness");
  expect_verified(to_json_text(theorem3_search(parse_polynomial("x^2 - 2"))),
                  "NumberFieldWitness");
  expect_verified(to_json_text(*corollary2_witness(parse_polynomial("x^2 - 2"))), "SplitPrime");
  expect_verified(to_json_text(sn_certificate(parse_polynomial("x^4 - x - 1"))),
                  "SnCertificate");
  expect_verified(to_json_text(genus_construction_plan(4)), "GenusPlan");
  expect_verified(to_json_text(genus_construction_plan(5)), "GenusPlan");
  expect_verified(to_json_text(*norm_equation_certificate(parse_polynomial("x^3 - x - 1"), 2)),
                  "NormEquation");
  const auto Q = laurent_rational_field();
  expect_verified(to_json_text(tame_symbol(parse_laurent("t", Q), parse_laurent("t", Q), "Q")),
                  "TameSymbol");
  expect_verified(to_json_text(k4_s4_report()), "K4Report");
  expect_verified(to_json_text(find_ell(8)), "FindEll");
  expect_verified(scan_to_json_text(stair, 50, scan_primes_for_certificate(stair, 50)),
                  "CertificateScan");
  expect_verified(catalan_to_json_text(60, 40, catalan_solutions(60, 40)), "CatalanSolutions");
}

TEST_CASE("the verifier re-runs premises instead of trusting stored flags") {
  const auto cert = certify_no_abelian_points(parse_diagonal_form("2x^3 + 4y^3 + 5z^3"),
                                              Integer(2));
  REQUIRE(cert.has_value());

  // Tamper with the prime: the staircase premise fails on recomputation.
  json j = json::parse(to_json_text(*cert));
  j["prime"] = 3;
  const VerifyReport bad = verify_certificate_text(j.dump(2) + "\n");
  CHECK_FALSE(bad.verified);

  // Tamper with the claimed profile: caught even though conditions read true.
  json j2 = json::parse(to_json_text(*cert));
  j2["profile"][0]["valuation"] = 0;
  CHECK_FALSE(verify_certificate_text(j2.dump(2) + "\n").verified);

  // A wrong Catalan list is rejected.
  json j3 = json::parse(catalan_to_json_text(60, 40, catalan_solutions(60, 40)));
  j3["solutions"].push_back(json::array({5, 3}));
  CHECK_FALSE(verify_certificate_text(j3.dump(2) + "\n").verified);

  // A tampered supersingular witness prime is recomputed and rejected.
  json j4 = json::parse(to_json_text(theorem_ell_search(5)));
  j4["prime"] = 31;  // 31 = 1 mod 3: not supersingular for the fixed curve
  CHECK_FALSE(verify_certificate_text(j4.dump(2) + "\n").verified);
}

TEST_CASE("unknown kinds and malformed artifacts are input errors") {
  CHECK_THROWS_AS(verify_certificate_text("{\"kind\": \"Unheard\"}"), InvalidInput);
  CHECK_THROWS_AS(verify_certificate_text("not json at all"), InvalidInput);
  CHECK_THROWS_AS(verify_certificate_text("{}"), InvalidInput);
  // Right kind, missing fields.
  CHECK_THROWS_AS(verify_certificate_text("{\"kind\": \"NoAbelianPoints\"}"), InvalidInput);
}

TEST_CASE("verify reports serialize like every other artifact") {
  const std::string cert_text = to_json_text(find_ell(8));
  const VerifyReport rep = verify_certificate_text(cert_text);
  const std::string rep_text = to_json_text(rep);
  CHECK(rep_text == to_json_text(verify_certificate_text(cert_text)));
  const json j = json::parse(rep_text);
  CHECK(j["kind"] == "VerifyReport");
  CHECK(j["verified"] == true);
  CHECK(j["certificate_kind"] == "FindEll");
}

}  // TEST_SUITE
