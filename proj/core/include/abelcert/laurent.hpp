#pragma once

// Truncated Laurent series with exact coefficients over Q or over a number
// field Q(r).  The valuation of a series is always exact (its leading stored
// coefficient is nonzero); what is *unknown* is the tail from the truncation
// exponent onward.  A series with no stored coefficients is "zero to order
// trunc": asking for its valuation raises TruncationError.
//
// Coefficients are uniformly NumberField elements; plain rationals use the
// degree-1 field Q[x]/(x).

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "abelcert/number_field.hpp"

namespace abelcert {

/// Truncation exponent used for exact constants (effectively "known to
/// infinite order" while staying safely away from overflow in sums).
inline constexpr long long kLaurentExact = std::numeric_limits<long long>::max() / 4;

inline constexpr long long kLaurentDefaultTrunc = 40;

struct LaurentSeries {
  std::shared_ptr<const NumberField> field;   // coefficient field, never null
  long long v = 0;                            // exponent of coeffs[0]
  std::vector<NumberField::Elem> coeffs;      // empty => no known nonzero term
  long long trunc = kLaurentDefaultTrunc;     // exponents >= trunc are unknown
  std::string symbol = "t";                   // uniformizer name for printing
};

/// The rational coefficient field Q = Q[x]/(x).
std::shared_ptr<const NumberField> laurent_rational_field();
/// The number field Q[x]/(f).
std::shared_ptr<const NumberField> laurent_number_field(const IntPoly& f);

LaurentSeries laurent_zero(std::shared_ptr<const NumberField> field,
                           long long trunc = kLaurentDefaultTrunc,
                           std::string symbol = "t");
LaurentSeries laurent_monomial(std::shared_ptr<const NumberField> field,
                               NumberField::Elem coeff, long long exponent,
                               long long trunc = kLaurentDefaultTrunc,
                               std::string symbol = "t");
LaurentSeries laurent_from_rational(std::shared_ptr<const NumberField> field,
                                    const Rational& c,
                                    long long trunc = kLaurentDefaultTrunc,
                                    std::string symbol = "t");

/// Exact valuation.  TruncationError when no nonzero coefficient is known
/// (the series is zero at least to its truncation order).
long long laurent_valuation(const LaurentSeries& a);
/// Coefficient at the valuation.  Same error condition as laurent_valuation.
const NumberField::Elem& laurent_leading(const LaurentSeries& a);

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_neg(const LaurentSeries& a);
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b);
/// Multiplicative inverse; the result is known to order trunc(a) - 2 v(a).
LaurentSeries laurent_invert(const LaurentSeries& a);

/// "t^-1 + 2 + 3*t + O(t^40)"; number-field coefficients are parenthesized,
/// e.g. "(1 + r)*t^2".  A series with no known term prints as "O(t^40)".
std::string to_string(const LaurentSeries& a);

/// Parse a sum of monomial terms "c", "c*t^k", "r^j*t^k", "-t^-1 + 2", ...
/// over the given coefficient field.  `exponent_scale` multiplies every
/// exponent of the symbol (used for the normalization v(t) = 2 inside the
/// ramified quadratic extension, where the stored uniformizer is t^(1/2)).
LaurentSeries parse_laurent(const std::string& text,
                            std::shared_ptr<const NumberField> field,
                            long long exponent_scale = 1,
                            long long trunc = kLaurentDefaultTrunc,
                            std::string symbol = "t");

/// Scalar-ops adapter so the norm form can be evaluated at Laurent vectors.
struct LaurentOps {
  std::shared_ptr<const NumberField> field;
  std::string symbol = "t";

  LaurentSeries zero() const { return laurent_zero(field, kLaurentExact, symbol); }
  LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) const {
    return laurent_add(a, b);
  }
  LaurentSeries neg(const LaurentSeries& a) const { return laurent_neg(a); }
  LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) const {
    return laurent_mul(a, b);
  }
  LaurentSeries from_rational(const Rational& q) const {
    return laurent_from_rational(field, q, kLaurentExact, symbol);
  }
};

}  // namespace abelcert
