// End-to-end tests of the command line surface: exit codes, JSON shape,
// determinism, and the verify round trip. Each case launches the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr, merged
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + std::string(ABELCERT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const char* name) {
  return std::string("/tmp/abelcert_cli_test_") + name + "_" + std::to_string(getpid()) + ".json";
}

}  // namespace

TEST_CASE("find-ell emits the documented order and auxiliary prime") {
  const RunResult r = run_cli("find-ell --q 8");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["kind"] == "FindEll");
  CHECK(j["N"] == 10);
  CHECK(j["ell"] == 5);
  CHECK(j["case"] == "II");
}

TEST_CASE("certify-cubic issues a certificate for a staircase instance") {
  const RunResult r = run_cli("certify-cubic --a 2 --b 4 --c 5 --p 2");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["kind"] == "NoAbelianPoints");
  CHECK(j["prime"] == 2);
  REQUIRE(j.contains("lemma_chain"));
  CHECK(j["lemma_chain"].size() == 5);
}

TEST_CASE("certify-cubic on the everywhere-locally-solvable control exits 1") {
  const RunResult r = run_cli("certify-cubic --a 3 --b 4 --c 5");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("no certificate") != std::string::npos);
  // Same verdict when pinned to single primes.
  for (const char* p : {"2", "3", "5", "7"}) {
    const RunResult rp = run_cli(std::string("certify-cubic --a 3 --b 4 --c 5 --p ") + p);
    CAPTURE(p);
    CHECK(rp.exit_code == 1);
  }
}

TEST_CASE("certify-cy covers higher-degree staircases") {
  const RunResult r = run_cli("certify-cy --ell 5 --p 2");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["kind"] == "NoAbelianPoints");
  CHECK(j["form"]["degree"] == 5);
  // ell | p - 1 breaks the hypothesis: 5 | 11 - 1.
  const RunResult bad = run_cli("certify-cy --ell 5 --p 11");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("scan lists certificates and respects the worker override") {
  const RunResult r = run_cli("scan --form \"x^3 + 11y^3 + 7260z^3\" --pmax 50");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["kind"] == "CertificateScan");
  REQUIRE(j["certificates"].size() == 1);
  CHECK(j["certificates"][0]["prime"] == 11);

  const RunResult threaded =
      run_cli("scan --form \"x^3 + 11y^3 + 7260z^3\" --pmax 50", "ABELCERT_WORKERS=3 ");
  CHECK(threaded.exit_code == 0);
  CHECK(threaded.output == r.output);

  const RunResult none = run_cli("scan --form \"3x^3 + 4y^3 + 5z^3\" --pmax 100");
  CHECK(none.exit_code == 1);
  CHECK(none.output.find("no certificate") != std::string::npos);
}

TEST_CASE("solve-local reports witnesses, honest failures, and budget exhaustion") {
  const RunResult r = run_cli("solve-local --form \"3x^3 + 4y^3 + 5z^3\" --p 3");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["kind"] == "HenselWitness");
  CHECK(j["precision"] == 3);

  const RunResult budget =
      run_cli("solve-local --form \"3x^3 + 4y^3 + 5z^3\" --p 7 --max-precision 5 --budget 10");
  CHECK(budget.exit_code == 3);

  // A staircase form has no witness at any precision: honest exit 1.
  const RunResult none = run_cli("solve-local --form \"2x^3 + 4y^3 + 5z^3\" --p 2");
  CHECK(none.exit_code == 1);
}

TEST_CASE("thm-ell, thm3 and cor2 expose the global searches") {
  const RunResult r4 = run_cli("thm-ell --ell 4");
  CHECK(r4.exit_code == 0);
  const json j4 = json::parse(r4.output);
  CHECK(j4["kind"] == "GenusOneIndexWitness");
  CHECK(j4["prime"] == 11);
  CHECK(j4["structure"]["n"] == 12);

  const RunResult r6 = run_cli("thm-ell --ell 6");
  CHECK(r6.exit_code == 2);  // neither 4 nor an odd prime

  const RunResult t3 = run_cli("thm3 --f \"x^2 - 2\"");
  CHECK(t3.exit_code == 0);
  const json jt3 = json::parse(t3.output);
  CHECK(jt3["kind"] == "NumberFieldWitness");
  CHECK(jt3["prime"] == 127);
  CHECK(jt3["ell"] == 11);

  const RunResult c2 = run_cli("cor2 --f \"x^2 - 2\"");
  CHECK(c2.exit_code == 0);
  CHECK(json::parse(c2.output)["prime"] == 17);

  // No split prime = 2 mod 3 can exist for the cyclotomic cubic field.
  const RunResult c2none = run_cli("cor2 --f \"x^2 + x + 1\" --pmax 5000");
  CHECK(c2none.exit_code == 1);
}

TEST_CASE("genus-plan: constructible targets succeed, genus 3 is refused") {
  const RunResult r = run_cli("genus-plan --g 4");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["kind"] == "GenusPlan");
  CHECK(j["genus"] == 4);
  CHECK(j["ell"] == 3);

  const RunResult r3 = run_cli("genus-plan --g 3");
  CHECK(r3.exit_code == 1);
  CHECK(r3.output.find("method inapplicable") != std::string::npos);
}

TEST_CASE("appendix commands: norm-cert, tame-symbol, sn-cert, k4, catalan") {
  const RunResult nc = run_cli("norm-cert --f \"x^3 - x - 1\" --m 2");
  CHECK(nc.exit_code == 0);
  CHECK(json::parse(nc.output)["kind"] == "NormEquation");
  const RunResult ncfail = run_cli("norm-cert --f \"x^3 - x - 1\" --m 3");
  CHECK(ncfail.exit_code == 1);

  const RunResult ts =
      run_cli("tame-symbol --a r --b t --f \"x^2 - 2\" --residue Qab");
  CHECK(ts.exit_code == 0);
  const json jts = json::parse(ts.output);
  CHECK(jts["kind"] == "TameSymbol");
  CHECK(jts["trivial"] == false);
  CHECK(jts["sqrt_group"] == "D4");

  const RunResult ts2 = run_cli("tame-symbol --a 4 --b t --residue Q");
  CHECK(ts2.exit_code == 0);
  CHECK(json::parse(ts2.output)["trivial"] == true);

  const RunResult sn = run_cli("sn-cert --f \"x^5 - x - 1\"");
  CHECK(sn.exit_code == 0);
  const json jsn = json::parse(sn.output);
  CHECK(jsn["verdict"] == "CertifiedSymmetric");
  CHECK(jsn["group"] == "S5");
  // An inconclusive verdict is still a successful report.
  const RunResult sn2 = run_cli("sn-cert --f \"x^4 + 1\"");
  CHECK(sn2.exit_code == 0);
  CHECK(json::parse(sn2.output)["verdict"] == "Inconclusive");

  const RunResult k4 = run_cli("k4");
  CHECK(k4.exit_code == 0);
  CHECK(json::parse(k4.output)["kind"] == "K4Report");

  const RunResult cat = run_cli("catalan");
  CHECK(cat.exit_code == 0);
  const json jc = json::parse(cat.output);
  CHECK(jc["solutions"].size() == 4);
}

TEST_CASE("verify round-trips artifacts written with --out") {
  const std::string path = temp_path("findell");
  const RunResult w = run_cli("find-ell --q 32 --out " + path);
  REQUIRE(w.exit_code == 0);
  const RunResult v = run_cli("verify --in " + path);
  CHECK(v.exit_code == 0);
  const json j = json::parse(v.output);
  CHECK(j["kind"] == "VerifyReport");
  CHECK(j["verified"] == true);

  // Tampering flips the verdict and the exit code.
  json art;
  {
    std::ifstream in(path);
    in >> art;
  }
  art["ell"] = 7;
  {
    std::ofstream out(path);
    out << art.dump(2) << "\n";
  }
  const RunResult bad = run_cli("verify --in " + path);
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.output)["verified"] == false);
  std::remove(path.c_str());

  const RunResult missing = run_cli("verify --in /nonexistent/nope.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("find-ell").exit_code == 2);            // missing required --q
  CHECK(run_cli("find-ell --q 6").exit_code == 2);      // not a prime power
  CHECK(run_cli("certify-cubic --a 2 --b 4").exit_code == 2);
  CHECK(run_cli("tame-symbol --a t --b t --residue R").exit_code == 2);
}

TEST_CASE("human-readable format is available and says so") {
  const RunResult r = run_cli("find-ell --q 8 --format human");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FindEll") != std::string::npos);
  CHECK(!json::accept(r.output));  // a digest, not a JSON document
}

TEST_CASE("repeated runs are byte-identical") {
  const char* cmds[] = {
      "find-ell --q 128",
      "certify-cubic --a 2 --b 4 --c 5 --p 2",
      "certify-cy --ell 5 --p 2",
      "scan --form \"x^3 + 11y^3 + 7260z^3\" --pmax 60",
      "solve-local --form \"3x^3 + 4y^3 + 5z^3\" --p 3",
      "thm-ell --ell 7",
      "thm3 --f \"x\"",
      "cor2 --f \"x^2 - 3\"",
      "genus-plan --g 9",
      "norm-cert --f \"x^4 - x - 1\" --m 2",
      "tame-symbol --a r --b t --f \"x^2 - 2\" --residue Qab",
      "sn-cert --f \"x^3 - x - 1\"",
      "k4",
      "catalan --smax 20 --tmax 20",
  };
  for (const char* cmd : cmds) {
    CAPTURE(cmd);
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}
