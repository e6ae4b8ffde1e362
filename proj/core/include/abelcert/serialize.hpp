#pragma once

// JSON serialization of every certificate/witness/report kind, plus the
// verifier that loads a serialized artifact and re-runs all of its
// machine-checkable premises.  Output is deterministic: fixed key order, no
// timestamps, integers below 2^53 as JSON numbers and larger ones as decimal
// strings.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abelcert/appendix.hpp"
#include "abelcert/elliptic.hpp"
#include "abelcert/global.hpp"
#include "abelcert/local.hpp"

namespace abelcert {

std::string to_json_text(const NoAbelianPointsCertificate& cert);
std::string to_json_text(const HenselWitness& witness);
std::string to_json_text(const ThmEllWitness& witness);
std::string to_json_text(const Thm3Witness& witness);
std::string to_json_text(const GenusPlan& plan);
std::string to_json_text(const SplitPrimeWitness& witness);
std::string to_json_text(const GaloisVerdict& verdict);
std::string to_json_text(const NormEquationCertificate& cert);
std::string to_json_text(const TameSymbolResult& symbol);
std::string to_json_text(const K4Report& report);
std::string to_json_text(const FindEllResult& result);

std::string scan_to_json_text(const DiagonalForm& form, uint64_t p_max,
                              const std::vector<NoAbelianPointsCertificate>& certs);
std::string catalan_to_json_text(unsigned s_max, unsigned t_max,
                                 const std::vector<std::pair<unsigned, unsigned>>& solutions);

struct VerifyReport {
  std::string certificate_kind;
  bool verified = false;
  std::vector<Condition> checks;
};

/// Parse a serialized artifact (any kind emitted by this library) and re-run
/// every premise it records.  Unknown kinds raise InvalidInput; a failing
/// premise yields verified = false, never an exception.
VerifyReport verify_certificate_text(const std::string& json_text);

std::string to_json_text(const VerifyReport& report);

}  // namespace abelcert
