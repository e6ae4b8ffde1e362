#include "abelcert/galois.hpp"

#include <algorithm>
#include <set>

#include "abelcert/errors.hpp"
#include "abelcert/integer.hpp"

namespace abelcert {

namespace {

bool is_square_integer(const Integer& n) {
  if (n < 0) return false;
  const Integer r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

/// All distinct integer roots of a monic integer polynomial (roots of a monic
/// integer polynomial are integers dividing the constant term).
std::vector<Integer> integer_roots_of_monic(const IntPoly& f) {
  std::vector<Integer> roots;
  IntPoly g = f;
  // Strip x | g, remembering the root 0 once.
  if (!g.c.empty() && g.c[0] == 0) {
    roots.push_back(0);
    size_t shift = 0;
    while (shift < g.c.size() && g.c[shift] == 0) ++shift;
    g = IntPoly::from_coeffs(std::vector<Integer>(g.c.begin() + shift, g.c.end()));
  }
  if (g.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const Factorization fac = factorize(abs(g.c[0]));
  std::vector<Integer> divisors = {1};
  for (const auto& [prime, e] : fac.exponents) {
    const size_t n = divisors.size();
    Integer pk = 1;
    for (unsigned j = 1; j <= e; ++j) {
      pk *= prime;
      for (size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  for (const Integer& d : divisors) {
    const Integer neg = -d;
    if (g.eval(d) == 0) roots.push_back(d);
    if (g.eval(neg) == 0) roots.push_back(neg);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

void require_monic_irreducible(const IntPoly& f, unsigned degree, const char* who) {
  if (f.degree() != static_cast<int>(degree)) {
    throw InvalidInput(std::string(who) + ": expected degree " + std::to_string(degree));
  }
  if (!f.is_monic()) throw InvalidInput(std::string(who) + ": polynomial must be monic");
  if (!is_irreducible_low_degree(f)) {
    throw InvalidInput(std::string(who) + ": polynomial is reducible over Q");
  }
}

CycleType sorted_type(CycleType t) {
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

std::string to_string(QuarticGroup g) {
  switch (g) {
    case QuarticGroup::S4: return "S4";
    case QuarticGroup::A4: return "A4";
    case QuarticGroup::D4: return "D4";
    case QuarticGroup::C4: return "C4";
    case QuarticGroup::V4: return "V4";
  }
  throw InternalCheckError("to_string(QuarticGroup): unreachable");
}

std::string to_string(GaloisVerdictKind k) {
  switch (k) {
    case GaloisVerdictKind::CertifiedSymmetric: return "CertifiedSymmetric";
    case GaloisVerdictKind::ClassifiedQuartic: return "ClassifiedQuartic";
    case GaloisVerdictKind::Inconclusive: return "Inconclusive";
  }
  throw InternalCheckError("to_string(GaloisVerdictKind): unreachable");
}

bool quartic_group_allows_type(QuarticGroup g, const CycleType& type) {
  const CycleType t = sorted_type(type);
  const CycleType id = {1, 1, 1, 1}, dbl = {2, 2}, four = {4}, tr = {1, 1, 2},
                  three = {1, 3};
  switch (g) {
    case QuarticGroup::V4: return t == id || t == dbl;
    case QuarticGroup::C4: return t == id || t == dbl || t == four;
    case QuarticGroup::D4: return t == id || t == dbl || t == four || t == tr;
    case QuarticGroup::A4: return t == id || t == dbl || t == three;
    case QuarticGroup::S4:
      return t == id || t == dbl || t == four || t == tr || t == three;
  }
  throw InternalCheckError("quartic_group_allows_type: unreachable");
}

QuarticGroup quartic_galois_group(const IntPoly& f) {
  require_monic_irreducible(f, 4, "quartic_galois_group");
  const Integer a = f.c[3], b = f.c[2], c = f.c[1], d = f.c[0];

  // Resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4 b d + c^2).
  const IntPoly resolvent =
      IntPoly::from_coeffs({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1});
  const std::vector<Integer> roots = integer_roots_of_monic(resolvent);
  const Integer disc = discriminant(f);

  QuarticGroup verdict;
  if (roots.empty()) {
    verdict = is_square_integer(disc) ? QuarticGroup::A4 : QuarticGroup::S4;
  } else if (roots.size() == 3) {
    verdict = QuarticGroup::V4;
  } else if (roots.size() == 1) {
    // C4 vs D4: both of beta^2 - 4d and a^2 - 4(b - beta) must be squares in
    // Q(sqrt(disc)) (zero counts; a nonzero u qualifies iff u or u*disc is a
    // rational square).
    const Integer beta = roots[0];
    auto square_in_quadratic = [&](const Integer& u) {
      return u == 0 || is_square_integer(u) || is_square_integer(u * disc);
    };
    const Integer u1 = beta * beta - 4 * d;
    const Integer u2 = a * a - 4 * (b - beta);
    verdict = square_in_quadratic(u1) && square_in_quadratic(u2) ? QuarticGroup::C4
                                                                 : QuarticGroup::D4;
  } else {
    throw InternalCheckError("quartic_galois_group: monic cubic with two rational roots");
  }

  // Cross-validation against factorization patterns at the first 100 good
  // primes: every observed type must occur in the claimed group, and an S4
  // claim must actually witness a 4-cycle and a transposition pattern.
  bool saw_four = false, saw_transposition = false;
  unsigned observed = 0;
  for (uint64_t p = 2; observed < 100; p = next_prime_u64(p)) {
    if (disc % Integer(p) == 0) continue;
    const auto type = cycle_type(f, p);
    if (!type) {
      throw InternalCheckError("quartic_galois_group: unexpected degree drop at a good prime");
    }
    ++observed;
    const CycleType t = sorted_type(*type);
    if (!quartic_group_allows_type(verdict, t)) {
      throw InternalCheckError("quartic_galois_group: cycle type at p = " + std::to_string(p) +
                               " contradicts the verdict " + to_string(verdict));
    }
    if (t == CycleType{4}) saw_four = true;
    if (t == CycleType{1, 1, 2}) saw_transposition = true;
  }
  if (verdict == QuarticGroup::S4 && !(saw_four && saw_transposition)) {
    throw InternalCheckError(
        "quartic_galois_group: S4 verdict lacks a 4-cycle or transposition witness");
  }
  return verdict;
}

bool is_abelian_extension(const IntPoly& f) {
  const int d = f.degree();
  if (d < 1) throw InvalidInput("is_abelian_extension: polynomial must be nonconstant");
  if (d > 4) {
    throw UnsupportedError("is_abelian_extension: degree > 4 is out of scope");
  }
  if (!f.is_monic()) throw InvalidInput("is_abelian_extension: polynomial must be monic");
  if (!is_irreducible_low_degree(f)) {
    throw InvalidInput("is_abelian_extension: polynomial is reducible over Q");
  }
  switch (d) {
    case 1:
    case 2:
      return true;  // quadratic extensions are Galois with group Z/2
    case 3:
      // Galois (hence cyclic) iff the discriminant is a rational square.
      return is_square_integer(discriminant(f));
    default: {
      const QuarticGroup g = quartic_galois_group(f);
      return g == QuarticGroup::C4 || g == QuarticGroup::V4;
    }
  }
}

GaloisVerdict sn_certificate(const IntPoly& f, uint64_t prime_scan_bound) {
  if (f.degree() < 2) throw InvalidInput("sn_certificate: degree must be at least 2");
  if (!f.is_monic()) throw InvalidInput("sn_certificate: polynomial must be monic");
  const unsigned d = static_cast<unsigned>(f.degree());
  const Integer disc = discriminant(f);
  if (disc == 0) throw InvalidInput("sn_certificate: polynomial must be squarefree");

  GaloisVerdict v;
  v.f = f;
  v.scan_bound = prime_scan_bound;
  std::set<CycleType> seen;

  for (uint64_t p = 2; p <= prime_scan_bound; p = next_prime_u64(p)) {
    if (disc % Integer(p) == 0) continue;
    const auto type_opt = cycle_type(f, p);
    if (!type_opt) continue;
    const CycleType t = sorted_type(*type_opt);
    if (seen.insert(t).second) v.evidence.emplace_back(p, t);

    if (t == CycleType{d}) v.has_full_cycle = true;

    unsigned big_parts = 0, big_value = 0;
    for (unsigned part : t) {
      if (part > 1) {
        ++big_parts;
        big_value = part;
      }
    }
    if (big_parts == 1 && is_prime_u64(big_value) && 2 * big_value > d) {
      v.has_big_prime_cycle = true;
    }

    unsigned twos = 0;
    bool others_odd = true;
    for (unsigned part : t) {
      if (part == 2) {
        ++twos;
      } else if (part % 2 == 0) {
        others_odd = false;
      }
    }
    if (twos == 1 && others_odd) v.has_transposition_type = true;

    if (v.has_full_cycle && v.has_big_prime_cycle && v.has_transposition_type) break;
  }

  if (v.has_full_cycle && v.has_big_prime_cycle && v.has_transposition_type) {
    v.kind = GaloisVerdictKind::CertifiedSymmetric;
    v.group_name = "S" + std::to_string(d);
  } else {
    v.kind = GaloisVerdictKind::Inconclusive;
  }
  return v;
}

}  // namespace abelcert
