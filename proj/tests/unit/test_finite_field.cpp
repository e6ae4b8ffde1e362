#include <set>

#include "abelcert/finite_field.hpp"
#include "doctest.h"

using namespace abelcert;

TEST_SUITE("finite_field") {

TEST_CASE("mod-p polynomial arithmetic round trips") {
  const IntPoly f = parse_polynomial("x^4 - x - 1");
  const PolyFp g = reduce_mod_p(f, 7);
  CHECK(g.degree() == 4);
  CHECK(lift_to_z(g) == parse_polynomial("x^4 + 6x + 6"));
  CHECK(fp_eval(g, 2) == (16 + 6 * 2 + 6) % 7);
  const PolyFp prod = fp_mul(g, g);
  CHECK(prod.degree() == 8);
  CHECK(fp_mod(prod, g).is_zero());
  const PolyFp der = fp_derivative(g);
  CHECK(lift_to_z(der) == parse_polynomial("4x^3 + 6"));
}

TEST_CASE("gcd is monic and detects common factors") {
  // (x - 1)(x - 2) and (x - 1)(x - 3) over F_5 share exactly (x - 1).
  const PolyFp a = fp_mul(fp_from_coeffs(5, {4, 1}), fp_from_coeffs(5, {3, 1}));
  const PolyFp b = fp_mul(fp_from_coeffs(5, {4, 1}), fp_from_coeffs(5, {2, 1}));
  const PolyFp g = fp_gcd(a, b);
  CHECK(lift_to_z(g) == parse_polynomial("x + 4"));
  CHECK(fp_divexact_by_gcd(a, g).degree() == 1);
}

TEST_CASE("irreducibility and the canonical modulus of F_8") {
  // First monic irreducible cubic over F_2 in the index order: x^3 + x + 1.
  const PolyFp m = find_irreducible(2, 3);
  CHECK(lift_to_z(m) == parse_polynomial("x^3 + x + 1"));
  CHECK(fp_is_irreducible(m));
  CHECK_FALSE(fp_is_irreducible(fp_from_coeffs(2, {1, 0, 0, 1})));  // x^3+1 = (x+1)(x^2+x+1)
}

TEST_CASE("root counts and split detection") {
  CHECK(count_distinct_roots(parse_polynomial("x^2 - 2"), 7) == 2);  // 3^2 = 2 mod 7
  CHECK(count_distinct_roots(parse_polynomial("x^2 - 2"), 5) == 0);
  CHECK(splits_completely(parse_polynomial("x^2 - 2"), 7));
  CHECK_FALSE(splits_completely(parse_polynomial("x^2 - 2"), 5));
  // x^3 - x - 1 splits completely mod 59 (Frobenius trivial there).
  CHECK(splits_completely(parse_polynomial("x^3 - x - 1"), 59));
}

TEST_CASE("frobenius cycle types from factorization degrees") {
  const IntPoly f = parse_polynomial("x^2 + 1");
  CHECK(cycle_type(f, 5) == CycleType{1, 1});  // -1 is a square mod 5
  CHECK(cycle_type(f, 3) == CycleType{2});     // -1 is not a square mod 3
  CHECK_FALSE(cycle_type(f, 2).has_value());   // (x+1)^2: not squarefree mod 2
}

TEST_CASE("prime-field and extension-field axioms on samples") {
  for (auto [p, a] : std::initializer_list<std::pair<uint64_t, unsigned>>{
           {101, 1}, {2, 3}, {3, 2}, {5, 2}}) {
    const Fq F(p, a);
    CAPTURE(p);
    CAPTURE(a);
    uint64_t expected_q = 1;
    for (unsigned i = 0; i < a; ++i) expected_q *= p;
    CHECK(F.q() == expected_q);
    // Sampled distributivity and inverses.
    const uint64_t step = F.q() / 7 + 1;
    for (uint64_t x = 1; x < F.q(); x += step) {
      for (uint64_t y = 1; y < F.q(); y += step) {
        CHECK(F.mul(x, F.add(y, F.one())) == F.add(F.mul(x, y), F.mul(x, F.one())));
        CHECK(F.mul(x, F.inv(x)) == F.one());
      }
      CHECK(F.add(x, F.neg(x)) == F.zero());
      CHECK(F.sub(x, x) == F.zero());
    }
    // The stored generator has full multiplicative order.
    uint64_t acc = F.one();
    unsigned order = 0;
    do {
      acc = F.mul(acc, F.generator());
      ++order;
    } while (acc != F.one());
    CHECK(order == F.q() - 1);
  }
}

TEST_CASE("coordinates and integer embedding agree") {
  const Fq F(3, 2);
  CHECK(F.from_integer(Integer(5)) == F.from_integer(Integer(2)));  // 5 = 2 mod 3
  const auto coords = F.coords(F.generator());
  CHECK(coords.size() == 2);
  CHECK(F.from_coords(coords) == F.generator());
  CHECK(F.from_coords({1, 0}) == F.one());
}

TEST_CASE("square roots: counts partition the field") {
  const Fq F(5, 2);  // F_25
  unsigned squares = 0, nonsquares = 0;
  for (uint64_t u = 0; u < F.q(); ++u) {
    const unsigned n = F.num_sqrt(u);
    if (u == 0) {
      CHECK(n == 1);
      continue;
    }
    CHECK((n == 0 || n == 2));
    if (n == 2) {
      ++squares;
      const auto [cnt, root] = F.sqrt(u);
      CHECK(cnt == 2);
      CHECK(F.mul(root, root) == u);
    } else {
      ++nonsquares;
    }
  }
  CHECK(squares == 12);  // (25 - 1) / 2
  CHECK(nonsquares == 12);
}

TEST_CASE("characteristic 2: trace and the Artin-Schreier preimage") {
  const Fq F(2, 4);  // F_16
  unsigned trace_zero = 0;
  for (uint64_t u = 0; u < F.q(); ++u) {
    const uint64_t tr = F.trace_f2(u);
    CHECK((tr == 0 || tr == 1));
    if (tr == 0) {
      ++trace_zero;
      const uint64_t z = F.artin_preimage(u);
      CHECK(F.add(F.mul(z, z), z) == u);  // z^2 + z = u
    }
  }
  CHECK(trace_zero == 8);  // the kernel of the trace is an index-2 subgroup
}

}  // TEST_SUITE
