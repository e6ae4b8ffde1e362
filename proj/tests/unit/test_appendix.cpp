#include "abelcert/appendix.hpp"
#include "abelcert/laurent.hpp"
#include "abelcert/number_field.hpp"
#include "doctest.h"

using namespace abelcert;

namespace {

NumberField::Elem elem2(const NumberField& K, long long a, long long b) {
  return NumberField::Elem{Rational(a), Rational(b)};
}

}  // namespace

TEST_SUITE("appendix") {

TEST_CASE("number field arithmetic in Q(sqrt 2)") {
  const NumberField K(parse_polynomial("x^2 - 2"));
  CHECK(K.degree() == 2);
  const auto one_plus_r = elem2(K, 1, 1);
  CHECK(K.equal(K.mul(one_plus_r, one_plus_r), elem2(K, 3, 2)));  // (1+r)^2 = 3 + 2r
  // (1+r)(-1+r) = r^2 - 1 = 1, so inv(1+r) = -1 + r.
  CHECK(K.equal(K.inv(one_plus_r), elem2(K, -1, 1)));
  CHECK(K.is_zero(K.sub(one_plus_r, one_plus_r)));
  CHECK(K.is_rational(K.from_rational(Rational(7, 3))));
  CHECK_FALSE(K.is_rational(K.generator()));
  CHECK_THROWS_AS(K.inv(K.zero()), InvalidInput);
  CHECK(minimal_polynomial(K, one_plus_r) == parse_polynomial("x^2 - 2x - 1"));
  CHECK(minimal_polynomial(K, K.generator()) == parse_polynomial("x^2 - 2"));
  CHECK(minimal_polynomial(K, K.from_rational(Rational(4))) == parse_polynomial("x - 4"));
}

TEST_CASE("norm form: multiplicativity and values") {
  const NumberField K(parse_polynomial("x^2 - 2"));
  // N(x + y r) = x^2 - 2 y^2.
  CHECK(norm_form_eval_q(K, {Rational(3), Rational(1)}) == Rational(7));
  CHECK(norm_form_eval_q(K, {Rational(0), Rational(2)}) == Rational(-8));
  // Norm of a product is the product of norms (sampled).
  const auto a = elem2(K, 2, 3);
  const auto b = elem2(K, -1, 4);
  const auto ab = K.mul(a, b);
  const Rational na = norm_form_eval_q(K, {a[0], a[1]});
  const Rational nb = norm_form_eval_q(K, {b[0], b[1]});
  CHECK(norm_form_eval_q(K, {ab[0], ab[1]}) == na * nb);

  const NumberField L(parse_polynomial("x^3 - x - 1"));
  const auto g = L.generator();
  CHECK(norm_form_eval_q(L, {Rational(0), Rational(1), Rational(0)}) == Rational(1));  // N(r) = 1
  const auto u = L.add(L.one(), g);  // 1 + r
  CHECK(norm_form_eval_q(L, {u[0], u[1], u[2]}) == Rational(1));  // f(-1) = -1 - (-1) - 1 = -1
}

TEST_CASE("norm forms of the working fields are anisotropic in a box") {
  CHECK_FALSE(norm_form_small_zero(NumberField(parse_polynomial("x^2 - 2")), 20).has_value());
  CHECK_FALSE(norm_form_small_zero(NumberField(parse_polynomial("x^2 + 1")), 20).has_value());
  CHECK_FALSE(norm_form_small_zero(NumberField(parse_polynomial("x^3 - x - 1")), 12).has_value());
  // Split algebras are rejected at construction, not silently normed.
  CHECK_THROWS_AS(NumberField(parse_polynomial("x^2 - 1")), InvalidInput);
  CHECK_THROWS_AS(NumberField(parse_polynomial("x^2 - 2x + 1")), InvalidInput);
}

TEST_CASE("laurent arithmetic: valuations, inversion, parsing") {
  const auto Q = laurent_rational_field();
  const LaurentSeries t = laurent_monomial(Q, Q->one(), 1);
  const LaurentSeries a = parse_laurent("t^-1 + 2 + 3*t", Q);
  CHECK(laurent_valuation(a) == -1);
  CHECK(laurent_valuation(laurent_mul(a, a)) == -2);
  CHECK(laurent_valuation(laurent_mul(a, t)) == 0);

  // v(ab) = v(a) + v(b) on a sample grid.
  const LaurentSeries b = parse_laurent("5*t^3 - t^4", Q);
  CHECK(laurent_valuation(laurent_mul(a, b)) == 2);

  // Inversion round-trips to 1 within the guaranteed precision.
  const LaurentSeries inv = laurent_invert(a);
  const LaurentSeries prod = laurent_mul(a, inv);
  CHECK(laurent_valuation(prod) == 0);
  const LaurentSeries err = laurent_sub(prod, laurent_from_rational(Q, Rational(1)));
  CHECK_THROWS_AS(laurent_valuation(err), TruncationError);  // zero to known order

  // Cancellation that kills every known coefficient is a truncation error,
  // never a silent zero.
  CHECK_THROWS_AS(laurent_valuation(laurent_sub(a, a)), TruncationError);

  // Printing states the known terms and the unknown tail explicitly.
  CHECK(to_string(a) == "t^-1 + 2 + 3*t + O(t^40)");
  CHECK(to_string(laurent_zero(Q)) == "O(t^40)");

  // The exponent scale embeds Q((t)) into the ramified quadratic extension.
  const LaurentSeries scaled = parse_laurent("t", Q, 2);
  CHECK(laurent_valuation(scaled) == 2);

  // Number-field coefficients.
  const auto K = laurent_number_field(parse_polynomial("x^2 - 2"));
  const LaurentSeries c = parse_laurent("r + r*t^2", K);
  CHECK(laurent_valuation(c) == 0);
  CHECK(K->equal(laurent_leading(c), NumberField::Elem{Rational(0), Rational(1)}));
}

TEST_CASE("norm-equation certificates: symmetric group + valuation obstruction") {
  // d = 3, m = 2: certifiable.
  const auto c32 = norm_equation_certificate(parse_polynomial("x^3 - x - 1"), 2);
  REQUIRE(c32.has_value());
  CHECK(c32->d == 3);
  CHECK(c32->rhs_valuation == 2);
  CHECK(c32->verdict.kind == GaloisVerdictKind::CertifiedSymmetric);
  for (const Condition& c : c32->conditions) CHECK(c.verified);
  CHECK_FALSE(c32->lemma_chain.empty());

  // d = 4, m = 2: 4 does not divide 2, still certifiable.
  CHECK(norm_equation_certificate(parse_polynomial("x^4 - x - 1"), 2).has_value());

  // d | m kills the valuation obstruction.
  CHECK_FALSE(norm_equation_certificate(parse_polynomial("x^3 - x - 1"), 3).has_value());
  CHECK_FALSE(norm_equation_certificate(parse_polynomial("x^3 - x - 1"), 0).has_value());

  // Abelian or inconclusive Galois data refuses to certify.
  CHECK_FALSE(norm_equation_certificate(parse_polynomial("x^4 + 1"), 1).has_value());
  CHECK_FALSE(norm_equation_certificate(parse_polynomial("x^3 - 3x - 1"), 1).has_value());
}

TEST_CASE("residue square decision over Q and over the abelian closure") {
  const NumberField K(parse_polynomial("x^2 - 2"));

  // Exact rational squares over Q.
  CHECK(decide_residue_square(K, K.from_rational(Rational(4)), "Q").is_square);
  CHECK(decide_residue_square(K, K.from_rational(Rational(9, 16)), "Q").is_square);
  CHECK_FALSE(decide_residue_square(K, K.from_rational(Rational(2)), "Q").is_square);
  CHECK_FALSE(decide_residue_square(K, K.from_rational(Rational(-1)), "Q").is_square);
  CHECK_THROWS_AS(decide_residue_square(K, K.generator(), "Q"), InvalidInput);

  // Over Q^ab every rational is a square (quadratic extensions are abelian).
  CHECK(decide_residue_square(K, K.from_rational(Rational(2)), "Qab").is_square);
  CHECK(decide_residue_square(K, K.from_rational(Rational(-7)), "Qab").is_square);

  // sqrt(sqrt 2) generates the D4 field x^4 - 2: not abelian, not a square.
  const auto dec = decide_residue_square(K, K.generator(), "Qab");
  CHECK_FALSE(dec.is_square);
  REQUIRE(dec.rep_minimal_poly.has_value());
  CHECK(*dec.rep_minimal_poly == parse_polynomial("x^2 - 2"));
  REQUIRE(dec.sqrt_field_poly.has_value());
  CHECK(*dec.sqrt_field_poly == parse_polynomial("x^4 - 2"));
  REQUIRE(dec.sqrt_group.has_value());
  CHECK(*dec.sqrt_group == "D4");

  // 3 + 2r = (1 + r)^2 is already a square in K: reducible sqrt polynomial.
  CHECK(decide_residue_square(K, elem2(K, 3, 2), "Qab").is_square);
}

TEST_CASE("tame symbols over Q((t)) and its abelian-closure analogue") {
  const auto Q = laurent_rational_field();

  // (t, t): representative -1, a nonsquare in Q.
  const auto tt = tame_symbol(parse_laurent("t", Q), parse_laurent("t", Q), "Q");
  CHECK(tt.va == 1);
  CHECK(tt.vb == 1);
  CHECK_FALSE(tt.trivial);

  // (4, t): representative 4 = 2^2, split.
  const auto ft = tame_symbol(parse_laurent("4", Q), parse_laurent("t", Q), "Q");
  CHECK(ft.trivial);

  // (2, t) over Q: 2 is not a rational square. Over Q^ab it becomes one.
  CHECK_FALSE(tame_symbol(parse_laurent("2", Q), parse_laurent("t", Q), "Q").trivial);
  CHECK(tame_symbol(parse_laurent("2", Q), parse_laurent("t", Q), "Qab").trivial);

  // (r, t) over Q(sqrt 2)((t)) in abelian mode: the D4 obstruction.
  const auto K = laurent_number_field(parse_polynomial("x^2 - 2"));
  const auto rt = tame_symbol(parse_laurent("r", K), parse_laurent("t", K), "Qab");
  CHECK_FALSE(rt.trivial);
  REQUIRE(rt.sqrt_group.has_value());
  CHECK(*rt.sqrt_group == "D4");
  CHECK(rt.va == 0);
  CHECK(rt.vb == 1);
  for (const Condition& c : rt.conditions) CHECK(c.verified);

  // Unit leading coefficients with va = vb = 0: symbol is always split.
  const auto uu = tame_symbol(parse_laurent("3 + t", Q), parse_laurent("5 - t^2", Q), "Qab");
  CHECK(uu.trivial);
}

TEST_CASE("stabilizer combinatorics of the symmetric action on K4") {
  const K4Report r = k4_s4_report();
  CHECK(r.group_order == 24);
  CHECK(r.vertex_stabilizer_orders == std::vector<unsigned>(4, 6));
  CHECK(r.edge_stabilizer_orders == std::vector<unsigned>(6, 4));
  CHECK(r.vertex_stabilizers_order_6);
  CHECK(r.vertex_stabilizers_non_normal);
  CHECK(r.edge_stabilizers_order_4);
  CHECK(r.edge_stabilizers_non_normal);
  CHECK(r.commutator_is_a4);
  CHECK(r.only_overgroups_a4_s4);
  CHECK(r.a4_s4_fix_nothing);
  for (const Condition& c : r.conditions) CHECK(c.verified);
}

}  // TEST_SUITE
