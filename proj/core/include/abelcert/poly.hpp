#pragma once

#include <string>
#include <vector>

#include "abelcert/integer.hpp"

namespace abelcert {

// Univariate integer polynomial. Coefficients are stored constant-first and
// normalized so the last stored coefficient is nonzero; the zero polynomial
// stores nothing.
struct IntPoly {
  std::vector<Integer> c;

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly from_coeffs(std::vector<Integer> v);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Integer& leading() const;
  bool is_monic() const;
  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  IntPoly derivative() const;

  bool operator==(const IntPoly&) const = default;
};

// Accepts sparse text ("x^4 - 2", "2x^3 + x") and the dense bracket list
// with the constant coefficient first ("[-2,0,0,0,1]").
IntPoly parse_polynomial(const std::string& text);
std::string to_string(const IntPoly& f);

// Resultant and discriminant over Z, computed exactly with fraction-free
// elimination of the Sylvester matrix.
Integer resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f), n = deg f >= 1.
// Degree-1 polynomials have discriminant 1.
Integer discriminant(const IntPoly& f);

// Equivalent to discriminant != 0 in degree >= 2; always true in degree 1.
bool is_squarefree_over_q(const IntPoly& f);

// Exact irreducibility over Q for monic integer polynomials of degree <= 4:
// rational root test plus an integer quadratic-factor search (sound by
// Gauss's lemma). Degree >= 5 raises UnsupportedError.
bool is_irreducible_low_degree(const IntPoly& f);

}  // namespace abelcert
