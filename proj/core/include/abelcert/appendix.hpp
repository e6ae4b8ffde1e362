#pragma once

// The formal-Laurent-series laboratory: norm-equation anisotropy
// certificates over Q((t)), the tame quaternion symbol with its
// residue-field square decision, and the exhaustive S4-on-K4 stabilizer
// verification behind the genus-3 construction over Q((t)).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abelcert/certificate.hpp"
#include "abelcert/galois.hpp"
#include "abelcert/integer.hpp"
#include "abelcert/laurent.hpp"
#include "abelcert/number_field.hpp"
#include "abelcert/poly.hpp"

namespace abelcert {

/// Certificate that N(X_1, ..., X_d) = tau * Z^d has no points over the
/// maximal abelian extension of Q((t)), where N is the norm form of
/// K = Q[x]/(f) and v(tau) = m: issued iff the Galois group is certified
/// full symmetric (so K stays a field over every abelian extension) and
/// d does not divide m (the valuation obstruction for Z != 0).
struct NormEquationCertificate {
  IntPoly f;
  unsigned d = 0;              // deg f, also the exponent of Z
  unsigned rhs_valuation = 0;  // m = v(tau), in the v(t) = 2 normalization
  GaloisVerdict verdict;
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};

std::optional<NormEquationCertificate> norm_equation_certificate(
    const IntPoly& f, unsigned rhs_valuation, uint64_t galois_scan_bound = 500);

/// Nonzero integer zeros of the norm form of K inside the box
/// max |x_i| <= box_bound (by homogeneity this covers all rational zeros of
/// bounded height).  Returns a zero when one exists; the appendix fields are
/// expected to yield none.
std::optional<std::vector<Integer>> norm_form_small_zero(const NumberField& K,
                                                         unsigned box_bound);

/// Tame symbol of two nonzero Laurent series: the residue-field class of
/// (-1)^(v(a) v(b)) a^(v(b)) / b^(v(a)), together with the decision whether
/// the associated quaternion algebra (a, b) is split.
struct TameSymbolResult {
  std::shared_ptr<const NumberField> field;  // residue coefficient field
  long long va = 0, vb = 0;
  long long trunc_a = 0, trunc_b = 0;  // input truncation orders (echoed)
  NumberField::Elem representative;
  std::string residue_mode;  // "Q" or "Qab"
  bool trivial = false;
  std::optional<IntPoly> rep_minimal_poly;  // when the representative is irrational
  std::optional<IntPoly> sqrt_field_poly;   // minimal polynomial candidate of its sqrt
  std::optional<std::string> sqrt_group;    // quartic classification when applicable
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};

/// The square decision in the residue field.  Mode "Q": u must be rational;
/// exact rational square test.  Mode "Qab": rational u are always squares
/// (square roots generate quadratic, hence abelian, extensions); an
/// irrational u of degree <= 2 (the supported desk scale) is a square iff
/// adjoining sqrt(u) yields an abelian extension, decided through the
/// minimal polynomial of sqrt(u).
struct ResidueSquareDecision {
  bool is_square = false;
  std::string statement;                    // human-readable reason
  std::optional<IntPoly> rep_minimal_poly;  // when u is irrational
  std::optional<IntPoly> sqrt_field_poly;   // minimal polynomial candidate of sqrt(u)
  std::optional<std::string> sqrt_group;    // quartic classification when applicable
};
ResidueSquareDecision decide_residue_square(const NumberField& K,
                                            const NumberField::Elem& u,
                                            const std::string& residue_mode);

TameSymbolResult tame_symbol(const LaurentSeries& a, const LaurentSeries& b,
                             const std::string& residue_mode);

/// Exhaustive verification of the S4 action on the complete graph K4:
/// vertex stabilizers have order 6 and are non-normal, edge stabilizers have
/// order 4 and are non-normal, the commutator subgroup is A4, the only
/// subgroups containing A4 are A4 and S4, and neither fixes a vertex or an
/// edge.
struct K4Report {
  unsigned group_order = 0;
  std::vector<unsigned> vertex_stabilizer_orders;  // indexed by vertex, 4 entries
  std::vector<unsigned> edge_stabilizer_orders;    // indexed by edge, 6 entries
  bool vertex_stabilizers_order_6 = false;
  bool vertex_stabilizers_non_normal = false;
  bool edge_stabilizers_order_4 = false;
  bool edge_stabilizers_non_normal = false;
  bool commutator_is_a4 = false;
  bool only_overgroups_a4_s4 = false;
  bool a4_s4_fix_nothing = false;
  std::vector<Condition> conditions;
  std::vector<std::string> lemma_chain;
};

K4Report k4_s4_report();

}  // namespace abelcert
