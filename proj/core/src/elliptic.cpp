#include "abelcert/elliptic.hpp"

#include <algorithm>
#include <sstream>

#include "abelcert/errors.hpp"

namespace abelcert {

namespace {

void check_bound(const Fq& F, uint64_t bound) {
  if (F.q() > bound) throw BudgetError("elliptic: field exceeds the exhaustive counting bound");
}

struct BCoeffs {
  uint64_t b2, b4, b6, b8;
};

BCoeffs b_invariants(const Fq& F, const CurveModel& E) {
  const uint64_t two = F.from_integer(2);
  const uint64_t four = F.from_integer(4);
  BCoeffs b;
  b.b2 = F.add(F.mul(E.a1, E.a1), F.mul(four, E.a2));
  b.b4 = F.add(F.mul(two, E.a4), F.mul(E.a1, E.a3));
  b.b6 = F.add(F.mul(E.a3, E.a3), F.mul(four, E.a6));
  b.b8 = F.add(F.add(F.mul(F.mul(E.a1, E.a1), E.a6), F.mul(F.mul(four, E.a2), E.a6)),
               F.add(F.neg(F.mul(F.mul(E.a1, E.a3), E.a4)),
                     F.sub(F.mul(E.a2, F.mul(E.a3, E.a3)), F.mul(E.a4, E.a4))));
  return b;
}

// x^3 + a2 x^2 + a4 x + a6
uint64_t cubic_rhs(const Fq& F, const CurveModel& E, uint64_t x) {
  return F.add(F.mul(F.add(F.mul(F.add(x, E.a2), x), E.a4), x), E.a6);
}

}  // namespace

CurveModel reduce_curve(const CurveQ& E, const Fq& F) {
  return CurveModel{F.from_integer(E.a1), F.from_integer(E.a2), F.from_integer(E.a3),
                    F.from_integer(E.a4), F.from_integer(E.a6)};
}

uint64_t curve_discriminant(const Fq& F, const CurveModel& E) {
  const auto b = b_invariants(F, E);
  const uint64_t t1 = F.mul(F.mul(b.b2, b.b2), b.b8);
  const uint64_t t2 = F.mul(F.from_integer(8), F.mul(F.mul(b.b4, b.b4), b.b4));
  const uint64_t t3 = F.mul(F.from_integer(27), F.mul(b.b6, b.b6));
  const uint64_t t4 = F.mul(F.from_integer(9), F.mul(b.b2, F.mul(b.b4, b.b6)));
  return F.add(F.sub(F.neg(t1), F.add(t2, t3)), t4);
}

bool curve_is_smooth(const Fq& F, const CurveModel& E) { return curve_discriminant(F, E) != 0; }

Integer count_points(const Fq& F, const CurveModel& E, uint64_t bound) {
  check_bound(F, bound);
  Integer n = 1;  // the point at infinity
  if (F.p() != 2) {
    const uint64_t four = F.from_integer(4);
    for (uint64_t x = 0; x < F.q(); ++x) {
      const uint64_t bx = F.add(F.mul(E.a1, x), E.a3);
      const uint64_t disc = F.add(F.mul(bx, bx), F.mul(four, cubic_rhs(F, E, x)));
      n += F.num_sqrt(disc);
    }
    return n;
  }
  for (uint64_t x = 0; x < F.q(); ++x) {
    const uint64_t bx = F.add(F.mul(E.a1, x), E.a3);
    const uint64_t c = cubic_rhs(F, E, x);
    if (bx == 0) {
      n += 1;  // squaring is a bijection in characteristic 2
    } else {
      const uint64_t w = F.div(c, F.mul(bx, bx));
      if (F.trace_f2(w) == 0) n += 2;
    }
  }
  return n;
}

std::vector<Point> enumerate_points(const Fq& F, const CurveModel& E, uint64_t bound) {
  check_bound(F, bound);
  std::vector<Point> pts;
  pts.push_back(Point{});  // infinity
  if (F.p() != 2) {
    const uint64_t four = F.from_integer(4);
    const uint64_t inv2 = F.inv(F.from_integer(2));
    for (uint64_t x = 0; x < F.q(); ++x) {
      const uint64_t bx = F.add(F.mul(E.a1, x), E.a3);
      const uint64_t disc = F.add(F.mul(bx, bx), F.mul(four, cubic_rhs(F, E, x)));
      const auto [n, s] = F.sqrt(disc);
      if (n == 0) continue;
      const uint64_t y1 = F.mul(F.sub(s, bx), inv2);
      pts.push_back(Point{false, x, y1});
      if (n == 2) pts.push_back(Point{false, x, F.mul(F.sub(F.neg(s), bx), inv2)});
    }
    return pts;
  }
  for (uint64_t x = 0; x < F.q(); ++x) {
    const uint64_t bx = F.add(F.mul(E.a1, x), E.a3);
    const uint64_t c = cubic_rhs(F, E, x);
    if (bx == 0) {
      pts.push_back(Point{false, x, F.sqrt(c).second});
    } else {
      const uint64_t w = F.div(c, F.mul(bx, bx));
      if (F.trace_f2(w) == 0) {
        const uint64_t z = F.artin_preimage(w);
        pts.push_back(Point{false, x, F.mul(bx, z)});
        pts.push_back(Point{false, x, F.add(F.mul(bx, z), bx)});
      }
    }
  }
  return pts;
}

Point curve_negate(const Fq& F, const CurveModel& E, const Point& P) {
  if (P.at_infinity) return P;
  return Point{false, P.x, F.sub(F.neg(P.y), F.add(F.mul(E.a1, P.x), E.a3))};
}

Point curve_add(const Fq& F, const CurveModel& E, const Point& P, const Point& Q) {
  if (P.at_infinity) return Q;
  if (Q.at_infinity) return P;
  uint64_t lambda, nu;
  if (P.x != Q.x) {
    const uint64_t d = F.inv(F.sub(Q.x, P.x));
    lambda = F.mul(F.sub(Q.y, P.y), d);
    nu = F.mul(F.sub(F.mul(P.y, Q.x), F.mul(Q.y, P.x)), d);
  } else {
    if (P.y != Q.y) return Point{};  // Q = -P
    const uint64_t den =
        F.add(F.mul(F.from_integer(2), P.y), F.add(F.mul(E.a1, P.x), E.a3));
    if (den == 0) return Point{};  // 2-torsion
    const uint64_t dinv = F.inv(den);
    const uint64_t x2 = F.mul(P.x, P.x);
    lambda = F.mul(F.sub(F.add(F.mul(F.from_integer(3), x2),
                               F.add(F.mul(F.mul(F.from_integer(2), E.a2), P.x), E.a4)),
                         F.mul(E.a1, P.y)),
                   dinv);
    nu = F.mul(F.sub(F.add(F.neg(F.mul(x2, P.x)),
                           F.add(F.mul(E.a4, P.x), F.mul(F.from_integer(2), E.a6))),
                     F.mul(E.a3, P.y)),
               dinv);
  }
  const uint64_t x3 =
      F.sub(F.sub(F.add(F.mul(lambda, lambda), F.mul(E.a1, lambda)), E.a2), F.add(P.x, Q.x));
  const uint64_t y3 = F.sub(F.sub(F.neg(F.mul(F.add(lambda, E.a1), x3)), nu), E.a3);
  return Point{false, x3, y3};
}

Point curve_scalar_mul(const Fq& F, const CurveModel& E, const Integer& k, const Point& P) {
  if (k < 0) return curve_scalar_mul(F, E, -k, curve_negate(F, E, P));
  Point result{};  // infinity
  Point base = P;
  Integer n = k;
  while (n > 0) {
    if ((n & 1) != 0) result = curve_add(F, E, result, base);
    base = curve_add(F, E, base, base);
    n >>= 1;
  }
  return result;
}

GroupStructure group_structure(const Fq& F, const CurveModel& E, uint64_t bound) {
  if (!curve_is_smooth(F, E)) throw InvalidInput("group_structure: singular model");
  const std::vector<Point> pts = enumerate_points(F, E, bound);
  const Integer N(pts.size());
  const Factorization fac = factorize(N);
  Integer exponent = 1;
  for (const Point& P : pts) {
    if (P.at_infinity) continue;
    Integer ord = N;
    for (const auto& [r, e] : fac.exponents) {
      while (ord % r == 0) {
        const Point test = curve_scalar_mul(F, E, ord / r, P);
        if (!test.at_infinity) break;
        ord /= r;
      }
    }
    exponent = lcm(exponent, ord);
    if (exponent == N) break;
  }
  if (N % exponent != 0) throw InternalCheckError("group_structure: exponent does not divide order");
  const Integer m = N / exponent;
  if (exponent % m != 0) throw InternalCheckError("group_structure: invariant factors violate m | n");
  if (Integer(F.q() - 1) % m != 0) {
    throw InternalCheckError("group_structure: Weil pairing constraint m | q-1 violated");
  }
  return GroupStructure{N, m, exponent};
}

bool has_point_of_order(const Fq& F, const CurveModel& E, const Integer& ell, uint64_t bound) {
  if (ell < 2) throw InvalidInput("has_point_of_order: order must be at least 2");
  const GroupStructure g = group_structure(F, E, bound);
  return g.n % ell == 0;
}

bool is_supersingular(const Fq& F, const CurveModel& E) {
  if (F.deg() != 1 || F.p() < 5) {
    throw InvalidInput("is_supersingular: requires a prime field with p >= 5");
  }
  return count_points(F, E) == Integer(F.q() + 1);
}

bool admissible_order(uint64_t q, const Integer& N) {
  if (N < 1) throw InvalidInput("admissible_order: order must be positive");
  const Factorization fq = factorize(Integer(q));
  if (!fq.is_prime_power()) throw InvalidInput("admissible_order: q must be a prime power");
  const Integer p = fq.exponents.begin()->first;
  const Integer t = Integer(q) + 1 - N;
  if (t * t > 4 * Integer(q)) return false;
  if (gcd(t, p) == 1) return true;
  return t == 0 && p % 4 != 1;
}

FindEllResult find_ell(uint64_t q) {
  const Factorization fq = factorize(Integer(q));
  if (!fq.is_prime_power()) throw InvalidInput("find_ell: q must be a prime power");
  const uint64_t p = static_cast<uint64_t>(fq.exponents.begin()->first);
  const unsigned a = fq.exponents.begin()->second;

  FindEllResult r;
  r.q = q;
  auto smallest_prime_divisor_at_least = [](const Integer& N, const Integer& lo) {
    const Factorization f = factorize(N);
    for (const auto& [prime, e] : f.exponents) {
      if (prime >= lo) return prime;
    }
    throw InternalCheckError("find_ell: no qualifying prime divisor");
  };

  if (q == 2 || q == 4 || q == 16) {
    r.N = Integer(q) + 1;
    r.ell = r.N;
    r.case_label = "I";
  } else if (p == 2 && (a == 3 || a > 4)) {
    r.N = Integer(q) + 2;
    r.ell = smallest_prime_divisor_at_least(r.N, 5);
    r.case_label = "II";
  } else if (q == 3) {
    r.N = 5;
    r.ell = 5;
    r.case_label = "III";
  } else if (p == 3 && a > 1) {
    r.N = Integer(q) + 1;
    r.ell = smallest_prime_divisor_at_least(r.N, 5);
    r.case_label = "IV";
  } else if (p >= 5) {
    r.N = Integer(q) - 2;
    r.ell = smallest_prime_divisor_at_least(r.N, 2);
    r.case_label = "V";
  } else {
    throw InternalCheckError("find_ell: prime power escaped the case analysis");
  }

  // Postcondition traps (the selection above is supposed to make these hold).
  if (!is_prime(r.ell)) throw InternalCheckError("find_ell: ell is not prime");
  if (gcd(r.ell, Integer(q) * (Integer(q) - 1)) != 1) {
    throw InternalCheckError("find_ell: ell shares a factor with q(q-1)");
  }
  if (r.N % r.ell != 0) throw InternalCheckError("find_ell: ell does not divide N");
  if (!admissible_order(q, r.N)) throw InternalCheckError("find_ell: order fails admissibility");
  return r;
}

std::optional<CurveModel> search_curve_with_order(
    const Fq& F, const std::function<bool(const Integer&)>& pred) {
  auto test = [&](const CurveModel& E) -> bool {
    return curve_is_smooth(F, E) && pred(count_points(F, E));
  };
  const uint64_t q = F.q();
  if (F.p() >= 5) {
    for (uint64_t a4 = 0; a4 < q; ++a4) {
      for (uint64_t a6 = 0; a6 < q; ++a6) {
        const CurveModel E{0, 0, 0, a4, a6};
        if (test(E)) return E;
      }
    }
    return std::nullopt;
  }
  if (F.p() == 3) {
    for (uint64_t a2 = 0; a2 < q; ++a2) {
      for (uint64_t a4 = 0; a4 < q; ++a4) {
        for (uint64_t a6 = 0; a6 < q; ++a6) {
          const CurveModel E{0, a2, 0, a4, a6};
          if (test(E)) return E;
        }
      }
    }
    return std::nullopt;
  }
  // Characteristic 2. Every ordinary class has a model y^2+xy = x^3+a2x^2+a6
  // and every supersingular class a model y^2+a3y = x^3+a4x+a6, so the two
  // canonical families are scanned before the full long-form sweep.
  for (uint64_t a2 = 0; a2 < q; ++a2) {
    for (uint64_t a6 = 0; a6 < q; ++a6) {
      const CurveModel E{F.one(), a2, 0, 0, a6};
      if (test(E)) return E;
    }
  }
  for (uint64_t a3 = 0; a3 < q; ++a3) {
    for (uint64_t a4 = 0; a4 < q; ++a4) {
      for (uint64_t a6 = 0; a6 < q; ++a6) {
        const CurveModel E{0, 0, a3, a4, a6};
        if (test(E)) return E;
      }
    }
  }
  for (uint64_t a2 = 0; a2 < q; ++a2) {
    for (uint64_t a3 = 0; a3 < q; ++a3) {
      for (uint64_t a4 = 0; a4 < q; ++a4) {
        for (uint64_t a6 = 0; a6 < q; ++a6) {
          for (uint64_t a1 = 0; a1 < q; ++a1) {
            const CurveModel E{a1, a2, a3, a4, a6};
            if (test(E)) return E;
          }
        }
      }
    }
  }
  return std::nullopt;
}

CurveQ selmer_jacobian() {
  return CurveQ{0, 0, 0, 0, Integer(-432) * 60 * 60};
}

std::string curve_to_string(const Fq& F, const CurveModel& E) {
  std::ostringstream out;
  out << "y^2";
  if (E.a1 != 0) out << " + " << F.elem_to_string(E.a1) << "*x*y";
  if (E.a3 != 0) out << " + " << F.elem_to_string(E.a3) << "*y";
  out << " = x^3";
  if (E.a2 != 0) out << " + " << F.elem_to_string(E.a2) << "*x^2";
  if (E.a4 != 0) out << " + " << F.elem_to_string(E.a4) << "*x";
  if (E.a6 != 0) out << " + " << F.elem_to_string(E.a6);
  out << " over F_" << F.q();
  return out.str();
}

}  // namespace abelcert
