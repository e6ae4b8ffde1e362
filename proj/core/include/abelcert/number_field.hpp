#pragma once

// Exact arithmetic in Q[x]/(f) for a monic squarefree integer polynomial f,
// plus minimal polynomials of elements and the norm form in the power basis.
// Elements are coordinate vectors over the power basis 1, r, ..., r^(d-1).

#include <string>
#include <vector>

#include "abelcert/integer.hpp"
#include "abelcert/poly.hpp"

namespace abelcert {

class NumberField {
 public:
  using Elem = std::vector<Rational>;  // length degree(), power-basis coordinates

  /// f must be monic of degree >= 1 and squarefree; irreducibility is
  /// verified for degrees <= 4 and trusted (documented) above.
  explicit NumberField(IntPoly f);

  unsigned degree() const { return deg_; }
  const IntPoly& modulus() const { return f_; }

  Elem zero() const;
  Elem one() const;
  Elem from_rational(const Rational& c) const;
  Elem generator() const;  // the class of x

  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;  // InvalidInput on zero or a zero divisor
  Elem pow(const Elem& a, unsigned e) const;

  /// Rational content iff all higher coordinates vanish.
  bool is_rational(const Elem& a) const;

  std::string to_string(const Elem& a) const;  // e.g. "1/2 + 3*r^2"

 private:
  IntPoly f_;
  unsigned deg_ = 0;
  std::vector<Elem> power_;  // power_[k] = coordinates of r^k, k < 2*deg-1
};

/// Monic minimal polynomial of a over Q, found as the first linear dependence
/// among 1, a, a^2, ...; throws UnsupportedError when the monic minimal
/// polynomial has a non-integer coefficient.
IntPoly minimal_polynomial(const NumberField& K, const NumberField::Elem& a);

/// Norm form of the field in the power basis: the determinant of the
/// multiplication-by-beta matrix for beta = sum x_i r^(i-1).  Works over any
/// commutative ring of scalars supplied through the ops object (rationals,
/// Laurent series, polynomials); the determinant is computed by cofactor
/// expansion, which needs no division.
///
/// Ops must provide: Scalar zero() const; Scalar add(a,b) const;
/// Scalar neg(a) const; Scalar mul(a,b) const; Scalar from_rational(q) const.
template <typename Scalar, typename Ops>
Scalar norm_form_eval(const NumberField& K, const std::vector<Scalar>& x, const Ops& ops) {
  const unsigned d = K.degree();
  if (x.size() != d) throw InvalidInput("norm_form_eval: coordinate count must equal degree");

  // Coordinates of r^k in the power basis, k < 2d-1.
  std::vector<NumberField::Elem> powers(2 * d - 1);
  {
    NumberField::Elem cur = K.one();
    for (unsigned k = 0; k < 2 * d - 1; ++k) {
      powers[k] = cur;
      if (k + 1 < 2 * d - 1) cur = K.mul(cur, K.generator());
    }
  }

  // M[row][col] = coefficient of r^row in beta * r^col = sum_i x_i r^(i+col).
  std::vector<std::vector<Scalar>> M(d, std::vector<Scalar>(d, ops.zero()));
  for (unsigned col = 0; col < d; ++col) {
    for (unsigned i = 0; i < d; ++i) {
      const NumberField::Elem& red = powers[i + col];
      for (unsigned row = 0; row < d; ++row) {
        if (red[row] == 0) continue;
        M[row][col] = ops.add(M[row][col], ops.mul(ops.from_rational(red[row]), x[i]));
      }
    }
  }

  // Cofactor expansion along the first column of the submatrix selected by
  // `cols`; exponential in d, fine for the small degrees used here.
  std::vector<unsigned> cols(d);
  for (unsigned j = 0; j < d; ++j) cols[j] = j;
  auto det = [&](auto&& self, unsigned top, std::vector<unsigned>& live) -> Scalar {
    if (live.size() == 1) return M[top][live[0]];
    Scalar acc = ops.zero();
    for (size_t j = 0; j < live.size(); ++j) {
      const unsigned col = live[j];
      std::vector<unsigned> rest;
      rest.reserve(live.size() - 1);
      for (size_t j2 = 0; j2 < live.size(); ++j2) {
        if (j2 != j) rest.push_back(live[j2]);
      }
      Scalar term = ops.mul(M[top][col], self(self, top + 1, rest));
      acc = ops.add(acc, j % 2 == 0 ? term : ops.neg(term));
    }
    return acc;
  };
  return det(det, 0, cols);
}

/// Norm form over rational scalars.
Rational norm_form_eval_q(const NumberField& K, const std::vector<Rational>& x);

}  // namespace abelcert
