#include <cmath>
#include <map>

#include "abelcert/elliptic.hpp"
#include "doctest.h"

using namespace abelcert;

namespace {

Fq make_field(uint64_t q) {
  const Factorization f = factorize(Integer(q));
  REQUIRE(f.is_prime_power());
  const uint64_t p = static_cast<uint64_t>(f.exponents.begin()->first);
  return Fq(p, f.exponents.begin()->second);
}

}  // namespace

TEST_SUITE("elliptic") {

TEST_CASE("point counts stay inside the Hasse interval") {
  for (uint64_t q : {5ULL, 7ULL, 8ULL, 9ULL, 11ULL, 16ULL, 25ULL, 27ULL}) {
    const Fq F = make_field(q);
    unsigned smooth = 0;
    for (uint64_t u = 0; u < F.q() && smooth < 6; ++u) {
      for (uint64_t v = 0; v < F.q() && smooth < 6; ++v) {
        CurveModel E;
        if (F.p() == 2) {
          E = CurveModel{1, u, 0, 0, v};  // ordinary family y^2 + xy = x^3 + u x^2 + v
        } else if (F.p() == 3) {
          E = CurveModel{0, u, 0, 0, v};
        } else {
          E = CurveModel{0, 0, 0, u, v};
        }
        if (!curve_is_smooth(F, E)) continue;
        ++smooth;
        const Integer N = count_points(F, E);
        const double root = 2.0 * std::sqrt(static_cast<double>(q));
        CHECK(N >= Integer(static_cast<long long>(std::ceil(q + 1 - root))));
        CHECK(N <= Integer(static_cast<long long>(std::floor(q + 1 + root))));
        CHECK(Integer(enumerate_points(F, E).size()) == N);
      }
    }
    CHECK(smooth > 0);
  }
}

TEST_CASE("group law: inverses, commutativity, order annihilation") {
  const Fq F(11, 1);
  const CurveModel E{0, 0, 0, 0, F.from_integer(Integer(-1555200))};
  REQUIRE(curve_is_smooth(F, E));
  const auto pts = enumerate_points(F, E);
  const Integer N = Integer(pts.size());
  for (const Point& P : pts) {
    CHECK(curve_add(F, E, P, curve_negate(F, E, P)).at_infinity);
    CHECK(curve_scalar_mul(F, E, N, P).at_infinity);
  }
  for (size_t i = 0; i < pts.size(); i += 3) {
    for (size_t j = 0; j < pts.size(); j += 4) {
      CHECK(curve_add(F, E, pts[i], pts[j]) == curve_add(F, E, pts[j], pts[i]));
    }
  }
  // A sampled associativity triple.
  const Point A = pts[1], B = pts[2], C = pts[3];
  CHECK(curve_add(F, E, curve_add(F, E, A, B), C) == curve_add(F, E, A, curve_add(F, E, B, C)));
}

TEST_CASE("the fixed j=0 Jacobian y^2 = x^3 - 432*60^2") {
  const CurveQ E = selmer_jacobian();
  CHECK(E.a6 == -1555200);
  CHECK(E.a1 == 0);
  CHECK(E.a4 == 0);

  // Supersingular exactly at good p = 2 mod 3 (j = 0, CM by sqrt(-3)).
  const Fq F11(11, 1);
  const CurveModel R11 = reduce_curve(E, F11);
  CHECK(curve_is_smooth(F11, R11));
  CHECK(count_points(F11, R11) == 12);
  CHECK(is_supersingular(F11, R11));
  const GroupStructure S = group_structure(F11, R11);
  CHECK(S.order == 12);
  CHECK(S.m == 1);
  CHECK(S.n == 12);  // cyclic Z/12

  const Fq F7(7, 1);
  const CurveModel R7 = reduce_curve(E, F7);
  CHECK(curve_is_smooth(F7, R7));
  CHECK_FALSE(is_supersingular(F7, R7));
  CHECK(count_points(F7, R7) != 8);

  // Torsion probes inside Z/12.
  CHECK(has_point_of_order(F11, R11, Integer(4)));
  CHECK(has_point_of_order(F11, R11, Integer(3)));
  CHECK_FALSE(has_point_of_order(F11, R11, Integer(8)));
  CHECK_FALSE(has_point_of_order(F11, R11, Integer(5)));
}

TEST_CASE("group structure invariants on extension fields") {
  const Fq F(2, 3);
  CurveModel E{0, 0, 1, 0, 0};  // supersingular family member y^2 + y = x^3
  REQUIRE(curve_is_smooth(F, E));
  const GroupStructure S = group_structure(F, E);
  CHECK(S.m * S.n == S.order);
  CHECK(S.n % S.m == 0);
  CHECK((Integer(F.q()) - 1) % S.m == 0);  // m | q - 1 (Weil pairing)
  CHECK(S.order == count_points(F, E));
}

TEST_CASE("admissibility of candidate orders") {
  CHECK(admissible_order(8, Integer(10)));      // t = -1
  CHECK_FALSE(admissible_order(8, Integer(3)));  // t = 6: t^2 = 36 > 32
  CHECK(admissible_order(4, Integer(5)));       // t = 0, p = 2 != 1 mod 4
  CHECK(admissible_order(5, Integer(3)));       // t = 3, gcd(3,5) = 1
  CHECK_FALSE(admissible_order(25, Integer(21)));  // t = 5 = p: not coprime, not zero
  CHECK_FALSE(admissible_order(13, Integer(14)));  // t = 0 but p = 1 mod 4
}

TEST_CASE("order and auxiliary prime for every case of the search") {
  // (q, N, ell, case) rows frozen from an independent enumeration.
  struct Row {
    uint64_t q;
    long long N, ell;
    const char* label;
  };
  const Row rows[] = {
      {2, 3, 3, "I"},     {4, 5, 5, "I"},     {16, 17, 17, "I"},  {8, 10, 5, "II"},
      {32, 34, 17, "II"}, {64, 66, 11, "II"}, {128, 130, 5, "II"}, {256, 258, 43, "II"},
      {3, 5, 5, "III"},   {9, 10, 5, "IV"},   {27, 28, 7, "IV"},  {81, 82, 41, "IV"},
      {243, 244, 61, "IV"}, {5, 3, 3, "V"},   {25, 23, 23, "V"},  {7, 5, 5, "V"},
      {11, 9, 3, "V"},    {13, 11, 11, "V"},  {49, 47, 47, "V"},
  };
  for (const Row& r : rows) {
    const FindEllResult res = find_ell(r.q);
    CAPTURE(r.q);
    CHECK(res.N == Integer(r.N));
    CHECK(res.ell == Integer(r.ell));
    CHECK(res.case_label == r.label);
    // The four postconditions, re-checked here independently.
    CHECK(res.N % res.ell == 0);
    CHECK(is_prime(res.ell));
    const Integer qq1 = Integer(r.q) * (Integer(r.q) - 1);
    CHECK(gcd(res.ell, qq1) == 1);
    CHECK(admissible_order(r.q, res.N));
  }
  CHECK_THROWS_AS(find_ell(6), InvalidInput);   // not a prime power
  CHECK_THROWS_AS(find_ell(1), InvalidInput);
}

TEST_CASE("deterministic model enumeration realizes the searched order") {
  for (uint64_t q : {8ULL, 11ULL, 16ULL, 27ULL}) {
    const Fq F = make_field(q);
    const FindEllResult r = find_ell(q);
    const auto E = search_curve_with_order(F, [&](const Integer& n) { return n == r.N; });
    REQUIRE(E.has_value());
    CHECK(count_points(F, *E) == r.N);
    CHECK(curve_is_smooth(F, *E));
    // Determinism of the enumeration: same model on a second scan.
    const auto E2 = search_curve_with_order(F, [&](const Integer& n) { return n == r.N; });
    REQUIRE(E2.has_value());
    CHECK(E->a1 == E2->a1);
    CHECK(E->a2 == E2->a2);
    CHECK(E->a3 == E2->a3);
    CHECK(E->a4 == E2->a4);
    CHECK(E->a6 == E2->a6);
  }
}

}  // TEST_SUITE
