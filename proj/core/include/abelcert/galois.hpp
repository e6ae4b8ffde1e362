#pragma once

// Galois-group evidence from factorization patterns modulo primes, the
// resolvent-cubic classification of irreducible quartics, and the abelianity
// test used by the residue-field square decision.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abelcert/finite_field.hpp"
#include "abelcert/poly.hpp"

namespace abelcert {

enum class QuarticGroup { S4, A4, D4, C4, V4 };
std::string to_string(QuarticGroup g);

/// Transitive subgroups of S4 whose member cycle types include the given one.
/// Used to cross-validate the resolvent classification against observed
/// factorization patterns.
bool quartic_group_allows_type(QuarticGroup g, const CycleType& type);

/// Classification of the Galois group of a monic irreducible quartic via the
/// resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) and the
/// discriminant-square test; a C4/D4 split by the two quadratic-residue
/// conditions over Q(sqrt(disc)).  The verdict is cross-validated against the
/// cycle types at the first 100 good primes; any inconsistency is an internal
/// error.
QuarticGroup quartic_galois_group(const IntPoly& f);

/// True iff Q[x]/(f) is an abelian Galois extension of Q.  Degree 1 and 2:
/// always.  Degree 3: iff disc(f) is a rational square (cyclic cubic).
/// Degree 4: iff the quartic group is C4 or V4.  Degree > 4: UnsupportedError.
bool is_abelian_extension(const IntPoly& f);

enum class GaloisVerdictKind { CertifiedSymmetric, ClassifiedQuartic, Inconclusive };
std::string to_string(GaloisVerdictKind k);

struct GaloisVerdict {
  IntPoly f;
  GaloisVerdictKind kind = GaloisVerdictKind::Inconclusive;
  std::string group_name;  // "S3", "S5", ... or the quartic group name
  /// First witnessing prime for each distinct cycle type observed.
  std::vector<std::pair<uint64_t, CycleType>> evidence;
  bool has_full_cycle = false;         // type {d}: transitivity witness
  bool has_big_prime_cycle = false;    // prime part q > d/2, others 1: primitivity
  bool has_transposition_type = false; // exactly one 2, all other parts odd
  uint64_t scan_bound = 0;
};

/// One-sided S_d certification by factorization patterns: scans primes not
/// dividing disc(f) up to the bound, and certifies the full symmetric group
/// when the three classical generation criteria are all witnessed.  The
/// third criterion accepts any pattern with exactly one even part, equal to
/// 2; raising such a Frobenius element to the odd lcm of its other parts
/// leaves a transposition, so repeated odd parts are admissible evidence.
/// Inconclusive is an honest third verdict, never an error.
GaloisVerdict sn_certificate(const IntPoly& f, uint64_t prime_scan_bound = 500);

}  // namespace abelcert
