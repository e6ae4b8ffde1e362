#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abelcert/finite_field.hpp"
#include "abelcert/integer.hpp"

namespace abelcert {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6,
// coefficients as element indices of a fixed Fq.
struct CurveModel {
  uint64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

// Integer model over Q, for reduction at many primes.
struct CurveQ {
  Integer a1, a2, a3, a4, a6;
};

CurveModel reduce_curve(const CurveQ& E, const Fq& F);

struct Point {
  bool at_infinity = true;
  uint64_t x = 0, y = 0;
};

inline bool operator==(const Point& a, const Point& b) {
  if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
  return a.x == b.x && a.y == b.y;
}

// Abelian group E(F_q) = Z/m x Z/n with m | n, m*n = order, m | q-1.
struct GroupStructure {
  Integer order;
  Integer m;
  Integer n;
};

uint64_t curve_discriminant(const Fq& F, const CurveModel& E);
bool curve_is_smooth(const Fq& F, const CurveModel& E);

// #E(F_q) including the point at infinity, by exhaustive x-enumeration
// (quadratic-character counting in odd characteristic, Artin-Schreier trace
// in characteristic 2). Fields larger than `bound` raise BudgetError.
Integer count_points(const Fq& F, const CurveModel& E, uint64_t bound = 1'000'000);

std::vector<Point> enumerate_points(const Fq& F, const CurveModel& E, uint64_t bound = 1'000'000);

Point curve_negate(const Fq& F, const CurveModel& E, const Point& P);
Point curve_add(const Fq& F, const CurveModel& E, const Point& P, const Point& Q);
Point curve_scalar_mul(const Fq& F, const CurveModel& E, const Integer& k, const Point& P);

GroupStructure group_structure(const Fq& F, const CurveModel& E, uint64_t bound = 1'000'000);

// ell may be a prime power; tests divisibility of the group exponent.
bool has_point_of_order(const Fq& F, const CurveModel& E, const Integer& ell,
                        uint64_t bound = 1'000'000);

// Trace-zero criterion over a prime field, p >= 5.
bool is_supersingular(const Fq& F, const CurveModel& E);

// Waterhouse admissibility (the subset used here): with t = q+1-N,
// t^2 <= 4q and ( gcd(t,p) = 1, or t = 0 with p != 1 mod 4 ).
bool admissible_order(uint64_t q, const Integer& N);

struct FindEllResult {
  uint64_t q = 0;
  Integer N;
  Integer ell;
  std::string case_label;  // "I".."V"
};

// For a prime power q, produce a curve order N and a prime ell with
// ell | N, gcd(ell, q(q-1)) = 1, and N admissible. Five cases:
//   I.   q in {2, 4, 16}:           N = ell = q+1
//   II.  q = 2^a, a = 3 or a > 4:   N = q+2, smallest prime ell >= 5 dividing N
//   III. q = 3:                     N = ell = 5
//   IV.  q = 3^a, a > 1:            N = q+1, smallest prime ell >= 5 dividing N
//   V.   q = p^a, p >= 5:           N = q-2, smallest prime divisor of N
// All postconditions are re-verified; a failure is an internal error.
FindEllResult find_ell(uint64_t q);

// First smooth model, in a documented deterministic enumeration order, whose
// point count satisfies the predicate. Characteristic >= 5 scans (a4, a6)
// row-major. Characteristic 3 scans (a2, a4, a6). Characteristic 2 scans the
// ordinary canonical family y^2+xy = x^3+a2 x^2+a6 first, then the
// supersingular family y^2+a3 y = x^3+a4 x+a6, then all long models.
std::optional<CurveModel> search_curve_with_order(
    const Fq& F, const std::function<bool(const Integer&)>& pred);

// Short model y^2 = x^3 - 432*(60)^2 of the Jacobian of the diagonal cubic
// 3X^3 + 4Y^3 + 5Z^3 = 0 (coefficient product 60); j = 0, bad primes {2,3,5}.
CurveQ selmer_jacobian();

std::string curve_to_string(const Fq& F, const CurveModel& E);

}  // namespace abelcert
