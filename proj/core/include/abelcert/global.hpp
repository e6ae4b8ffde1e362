#pragma once

// Global search procedures: split-prime scans over number fields, the
// supersingular prime search for the index-ell genus-one curve, the (ell, p)
// parameter search for curves over F_p with rational ell-torsion missing from
// a given number field, and the genus decomposition g = k*ell + 1 together
// with the double-cover branch-count bookkeeping.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcert/certificate.hpp"
#include "abelcert/diagonal.hpp"
#include "abelcert/elliptic.hpp"
#include "abelcert/finite_field.hpp"
#include "abelcert/integer.hpp"
#include "abelcert/local.hpp"
#include "abelcert/poly.hpp"

namespace abelcert {

/// Explicit bounds for the deterministic searches.  Every search scans its
/// candidates in a documented ascending order and returns the minimal witness.
struct SearchBounds {
  uint64_t p_max = 100000;
  uint64_t ell_max = 97;
};

/// Witness that f splits completely modulo a prime p = 2 (mod 3).
struct SplitPrimeWitness {
  IntPoly f;
  uint64_t prime = 0;
  uint64_t p_max = 0;  // scan bound in effect
  CycleType type;      // must be all ones
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};

/// Smallest prime p <= p_max with p = 2 (mod 3), p not dividing disc(f), and
/// f splitting completely mod p.  Returns nullopt when no such prime exists
/// below the bound (for some f, e.g. x^2+x+1, none can ever exist because
/// split primes are forced to be 1 mod 3).
std::optional<uint64_t> corollary2_prime(const IntPoly& f, uint64_t p_max = 100000);

/// Same search, packaged with the verified conditions.
std::optional<SplitPrimeWitness> corollary2_witness(const IntPoly& f, uint64_t p_max = 100000);

/// Witness for the index-ell genus-one construction: a prime p where the
/// fixed j=0 Jacobian y^2 = x^3 - 432*60^2 has supersingular good reduction
/// and the reduced group contains a point of order ell.
struct ThmEllWitness {
  unsigned ell = 0;
  uint64_t p = 0;
  uint64_t p_bound = 0;     // search bound in effect
  Integer order;            // #E(F_p)
  GroupStructure structure; // Z/m x Z/n
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};

/// For an odd prime ell >= 5: smallest prime p with p > 3, p = 2 (mod 3),
/// p = -1 (mod ell), avoiding the bad primes {2,3,5}; the reduced order p+1
/// is verified by exhaustive counting.  For ell = 4 the fixed prime p = 11
/// is used (group Z/12, and 4 does not divide p-1).
ThmEllWitness theorem_ell_search(unsigned ell, const SearchBounds& bounds = {});

/// Witness for the torsion-avoidance construction over a number field K=Q[x]/f:
/// primes ell > 7 and p with ord(p mod ell) > deg f, both unramified in the
/// monogenic order, plus an explicit curve over F_p of order divisible by ell.
struct Thm3Witness {
  IntPoly f;
  unsigned n = 0;  // deg f
  uint64_t ell = 0;
  uint64_t p = 0;
  unsigned order_of_p = 0;  // multiplicative order of p mod ell
  CurveModel curve{};
  Integer curve_order;
  uint64_t p_bound = 0;     // search bounds in effect
  uint64_t ell_bound = 0;
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};

/// Deterministic search: smallest prime p > deg(f)+1, then smallest prime
/// ell > 7, with p and ell prime to disc(f), ell*ell < p, and
/// multiplicative_order(p, ell) > deg f; then the first curve over F_p (in
/// the documented model order) whose point count is divisible by ell.
Thm3Witness theorem3_search(const IntPoly& f, const SearchBounds& bounds = {});

/// g - 1 = k * ell with ell the smallest odd prime divisor of g-1, or ell = 4
/// when g-1 is a power of two.  Requires g >= 4.
struct GenusDecomposition {
  unsigned k = 0;
  unsigned ell = 0;
};
GenusDecomposition decompose_genus(unsigned g);

/// Genus of a double cover of a genus-g_base curve with b simple branch
/// points: 2*g_base - 1 + b/2.  Throws InvalidInput when b is odd.
unsigned riemann_hurwitz_double_cover(unsigned g_base, unsigned branch_count);

/// Construction plan for a genus-g curve without abelian points: the base
/// index-ell genus-one curve (a certified diagonal cubic when ell = 3, a
/// supersingular-reduction witness otherwise) plus the double-cover branch
/// data whose Riemann-Hurwitz genus equals g.
struct GenusPlan {
  unsigned g = 0;
  unsigned k = 0;
  unsigned ell = 0;
  unsigned branch_points = 0;  // 2*k*ell
  unsigned genus_check = 0;    // riemann_hurwitz_double_cover(1, branch_points)
  std::optional<DiagonalForm> base_form;                     // ell = 3 route
  std::optional<NoAbelianPointsCertificate> base_certificate;
  std::optional<ThmEllWitness> ell_witness;                  // ell = 4 or >= 5
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};
GenusPlan genus_construction_plan(unsigned g, const SearchBounds& bounds = {});

}  // namespace abelcert
