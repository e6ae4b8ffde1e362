#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelcert/certificate.hpp"
#include "abelcert/diagonal.hpp"
#include "abelcert/integer.hpp"

namespace abelcert {

// Certificate that a diagonal form has no points over the maximal abelian
// extension of Q, by the staircase valuation argument at p combined with the
// coprimality of d to every cyclotomic ramification index above p.
struct NoAbelianPointsCertificate {
  DiagonalForm form;
  Integer prime;
  ValuationProfile profile;
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};

// Issues a certificate iff the coefficient valuations at p sort to exactly
// (0, 1, ..., d-1) with p-unit cofactors and gcd(d, p(p-1)) = 1. Absence of
// a certificate never asserts solubility.
std::optional<NoAbelianPointsCertificate> certify_no_abelian_points(const DiagonalForm& form,
                                                                    const Integer& p);

// All certificates with p <= p_max, sorted by p. workers = 0 means one thread.
std::vector<NoAbelianPointsCertificate> scan_primes_for_certificate(const DiagonalForm& form,
                                                                    uint64_t p_max,
                                                                    unsigned workers = 0);

// A primitive tuple t (not all coordinates divisible by p) with
// v_p(F(t)) >= 2w + 1 where w = v_p(dF/dx_j (t)): the strengthened Hensel
// criterion, so t lifts to a Z_p-point.
struct HenselWitness {
  DiagonalForm form;
  Integer prime;
  unsigned precision = 0;          // tuple entries lie in [0, p^precision)
  std::vector<Integer> tuple;
  unsigned coordinate = 0;         // index j of the controlling partial
  unsigned grad_valuation = 0;     // w
  bool value_is_zero = false;      // F(t) = 0 exactly in Z
  unsigned value_valuation = 0;    // v_p(F(t)) when nonzero
  unsigned max_precision = 0;      // escalation cap in effect (0: direct call)
  uint64_t budget = 0;             // search budget in effect
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};

// Exhaustive scan of primitive tuples mod p^m in row-major order; returns the
// first Hensel-liftable witness, or none at this precision.
std::optional<HenselWitness> local_solve_diagonal(const DiagonalForm& form, const Integer& p,
                                                  unsigned m, uint64_t budget = 50'000'000);

// Precision escalation 1 -> 3 -> 5 (capped at max_precision).
std::optional<HenselWitness> local_solve_escalating(const DiagonalForm& form, const Integer& p,
                                                    unsigned max_precision = 5,
                                                    uint64_t budget = 50'000'000);

enum class BruteMode { Auto, Exhaustive, Cascade };

// True iff some primitive tuple mod p^m satisfies F = 0 mod p^m.
// Exhaustive mode enumerates k-1 coordinates against a lookup table for the
// last one (cost p^{m(k-1)}). Cascade mode runs a level-by-level search that
// prunes non-solutions mod p^j and answers early through the Hensel criterion
// whenever a node is liftable, extending reach far beyond the exhaustive
// budget for staircase-shaped forms.
bool brute_force_primitive(const DiagonalForm& form, const Integer& p, unsigned m,
                           BruteMode mode = BruteMode::Auto, uint64_t budget = 100'000'000);

}  // namespace abelcert
