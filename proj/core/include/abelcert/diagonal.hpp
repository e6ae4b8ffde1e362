#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abelcert/integer.hpp"

namespace abelcert {

// Diagonal form c_0 X_0^d + ... + c_{k-1} X_{k-1}^d with nonzero integer
// coefficients, d >= 2, k >= 2.
struct DiagonalForm {
  unsigned degree = 0;
  std::vector<Integer> coeffs;

  unsigned num_vars() const { return static_cast<unsigned>(coeffs.size()); }
};

DiagonalForm make_diagonal_form(unsigned degree, std::vector<Integer> coeffs);

// Accepts e.g. "2x^3 + 4y^3 + 5z^3" or "x0^5 + 2*x1^5 + 4*x2^5"; variables are
// a letter optionally followed by digits, all distinct, all with the same
// exponent d >= 2.
DiagonalForm parse_diagonal_form(const std::string& text);
std::string to_string(const DiagonalForm& form);

// Exact coefficient valuations at p: c_i = u_i * p^{a_i} with p not dividing u_i.
struct ValuationProfile {
  Integer p;
  std::vector<std::pair<unsigned, Integer>> entries;  // (valuation a_i, unit cofactor u_i)
};

ValuationProfile valuation_profile(const DiagonalForm& form, const Integer& p);

// True iff the residues {e*a_i mod d} are pairwise distinct. Then each term
// of the form has a distinct valuation mod d in any complete discretely
// valued extension with ramification index e, forcing a unique minimal term:
// the form has no nonzero solution over any such extension.
bool staircase_check(const ValuationProfile& profile, unsigned d, unsigned e);

// a X^3 + b p Y^3 + c p^2 Z^3 with p = 2 (mod 3), p not dividing abc.
DiagonalForm build_theorem1_form(const Integer& a, const Integer& b, const Integer& c,
                                 const Integer& p);

// X_0^ell + p X_1^ell + ... + p^{ell-1} X_{ell-1}^ell with ell an odd prime
// not dividing p(p-1).
DiagonalForm build_cy_form(const Integer& ell, const Integer& p);

}  // namespace abelcert
