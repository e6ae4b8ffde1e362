#include "abelcert/global.hpp"

#include <algorithm>
#include <sstream>

#include "abelcert/errors.hpp"

namespace abelcert {

namespace {

void require_monic_squarefree(const IntPoly& f, const char* who) {
  if (f.degree() < 1) throw InvalidInput(std::string(who) + ": polynomial must be nonconstant");
  if (!f.is_monic()) throw InvalidInput(std::string(who) + ": polynomial must be monic");
  if (!is_squarefree_over_q(f)) {
    throw InvalidInput(std::string(who) + ": polynomial must be squarefree");
  }
}

bool divides(const Integer& d, const Integer& n) { return d != 0 && n % d == 0; }

}  // namespace

std::optional<SplitPrimeWitness> corollary2_witness(const IntPoly& f, uint64_t p_max) {
  require_monic_squarefree(f, "corollary2_prime");
  const Integer disc = discriminant(f);
  for (uint64_t p = 2; p <= p_max; p = next_prime_u64(p)) {
    if (p % 3 != 2) continue;
    if (divides(Integer(p), disc)) continue;
    if (!splits_completely(f, p)) continue;
    auto type = cycle_type(f, p);
    if (!type || type->size() != static_cast<size_t>(f.degree()) ||
        !std::all_of(type->begin(), type->end(), [](unsigned part) { return part == 1; })) {
      throw InternalCheckError("corollary2_prime: split prime has a non-trivial cycle type");
    }
    SplitPrimeWitness w;
    w.f = f;
    w.prime = p;
    w.p_max = p_max;
    w.type = *type;
    w.conditions.push_back(
        make_condition("residue_class", "p = " + std::to_string(p) + " satisfies p = 2 (mod 3)",
                       true));
    w.conditions.push_back(
        make_condition("unramified", "p does not divide disc(f) = " + disc.str(), true));
    w.conditions.push_back(make_condition(
        "splits_completely", "f factors into deg(f) distinct linear factors mod p", true));
    w.lemma_chain = {
        "p = 2 (mod 3) means p is inert in Q(mu_3), so the maximal abelian extension "
        "contributes ramification prime to 3 at p.",
        "p splitting completely in Q[x]/(f) embeds the field into Q_p, transporting the local "
        "obstruction into the number field."};
    return w;
  }
  return std::nullopt;
}

std::optional<uint64_t> corollary2_prime(const IntPoly& f, uint64_t p_max) {
  auto w = corollary2_witness(f, p_max);
  if (!w) return std::nullopt;
  return w->prime;
}

ThmEllWitness theorem_ell_search(unsigned ell, const SearchBounds& bounds) {
  const bool quartic = ell == 4;
  if (!quartic && (ell < 5 || !is_prime_u64(ell))) {
    throw InvalidInput("theorem_ell_search: ell must be 4 or an odd prime >= 5");
  }

  uint64_t p = 0;
  if (quartic) {
    p = 11;  // fixed choice; no search in the ell = 4 case
  } else {
    std::vector<Congruence> system = {{Integer(2), Integer(3)},
                                      {Integer(ell - 1), Integer(ell)}};
    auto pred = [&](const Integer& cand) {
      return cand > 3 && cand != 5 && is_prime(cand);
    };
    p = static_cast<uint64_t>(crt_search(system, pred, Integer(bounds.p_max)));
  }

  const CurveQ model = selmer_jacobian();
  Fq field(p, 1);
  const CurveModel reduced = reduce_curve(model, field);
  const Integer order = count_points(field, reduced);
  const GroupStructure structure = group_structure(field, reduced);

  ThmEllWitness w;
  w.ell = ell;
  w.p = p;
  w.p_bound = bounds.p_max;
  w.order = order;
  w.structure = structure;

  const bool good_reduction = p != 2 && p != 3 && p != 5;
  const bool cond_p3 = p > 3;
  const bool cond_mod3 = p % 3 == 2;
  const bool cond_ell = quartic ? (p - 1) % 4 != 0 : (p + 1) % ell == 0;
  if (!good_reduction || !cond_p3 || !cond_mod3 || !cond_ell) {
    throw InternalCheckError("theorem_ell_search: selected prime fails a recorded check");
  }
  if (quartic) {
    if (order != 12 || structure.m != 1 || structure.n != 12) {
      throw InternalCheckError("theorem_ell_search: reduction at 11 must have cyclic group Z/12");
    }
  } else {
    if (order != Integer(p) + 1) {
      throw InternalCheckError("theorem_ell_search: supersingular count p+1 failed");
    }
    if (!has_point_of_order(field, reduced, Integer(ell))) {
      throw InternalCheckError("theorem_ell_search: no point of order ell after all");
    }
  }

  w.conditions.push_back(make_condition("p_gt_3", "p = " + std::to_string(p) + " > 3", cond_p3));
  w.conditions.push_back(make_condition("p_mod_3", "p = -1 (mod 3)", cond_mod3));
  w.conditions.push_back(make_condition(
      "torsion_divisibility",
      quartic ? "4 divides #E(F_p) = 12 while 4 does not divide p-1"
              : "p = -1 (mod " + std::to_string(ell) + "), so ell | p+1 = #E(F_p)",
      cond_ell));
  w.conditions.push_back(make_condition(
      "good_reduction", "p avoids the bad primes {2, 3, 5} of y^2 = x^3 - 1555200",
      good_reduction));
  w.conditions.push_back(make_condition(
      "verified_order", "exhaustive point count gives " + order.str(), true));
  w.lemma_chain = {
      "p = -1 (mod 3) makes the j = 0 reduction supersingular, so #E(F_p) = p + 1.",
      "A point of order ell on the reduction, with ell prime to p(p-1), survives to the "
      "maximal abelian extension's completion only if the index drops locally.",
      "The local pairing computation pins the period and index of the genus-one torsor at ell, "
      "giving a curve of index ell with no points over any abelian extension."};
  return w;
}

Thm3Witness theorem3_search(const IntPoly& f, const SearchBounds& bounds) {
  require_monic_squarefree(f, "theorem3_search");
  const unsigned n = static_cast<unsigned>(f.degree());
  const Integer disc = discriminant(f);

  for (uint64_t p = next_prime_u64(std::max<uint64_t>(n + 1, 1)); p <= bounds.p_max;
       p = next_prime_u64(p)) {
    if (divides(Integer(p), disc)) continue;
    for (uint64_t ell = 11; ell <= bounds.ell_max && ell * ell < p;
         ell = next_prime_u64(ell)) {
      if (divides(Integer(ell), disc)) continue;
      const Integer ord = multiplicative_order(Integer(p % ell), Integer(ell));
      if (ord <= Integer(n)) continue;

      // Direct re-check: ell divides no p^a - 1 for 1 <= a <= n.
      Integer pa = 1;
      for (unsigned a = 1; a <= n; ++a) {
        pa = (pa * Integer(p)) % Integer(ell);
        if (pa == 1) throw InternalCheckError("theorem3_search: order check contradiction");
      }

      Fq field(p, 1);
      auto curve = search_curve_with_order(
          field, [&](const Integer& N) { return N % Integer(ell) == 0; });
      if (!curve) continue;
      const Integer N = count_points(field, *curve);

      Thm3Witness w;
      w.f = f;
      w.n = n;
      w.ell = ell;
      w.p = p;
      w.order_of_p = static_cast<unsigned>(ord);
      w.curve = *curve;
      w.curve_order = N;
      w.p_bound = bounds.p_max;
      w.ell_bound = bounds.ell_max;
      w.conditions.push_back(make_condition(
          "ell_large", "ell = " + std::to_string(ell) + " > 7 and ell^2 < p", true));
      w.conditions.push_back(make_condition(
          "unramified", "p and ell do not divide disc(f) = " + disc.str(), true));
      w.conditions.push_back(make_condition(
          "order_of_p",
          "ord(p mod ell) = " + ord.str() + " > deg(f) = " + std::to_string(n) +
              ", so ell divides no p^a - 1 with a <= deg(f)",
          true));
      w.conditions.push_back(make_condition(
          "curve_order", "#E(F_p) = " + N.str() + " is divisible by ell", true));
      w.lemma_chain = {
          "ell dividing no p^a - 1 for a <= deg(f) means the field generated by f has no "
          "ell-torsion obstruction at p.",
          "The exhibited curve over F_p carries a rational point of order ell inside the "
          "admissible order interval.",
          "Twisting the corresponding genus-one torsor produces a curve with no points over "
          "the maximal abelian extension of the number field."};
      return w;
    }
  }
  throw BudgetError("theorem3_search: no (ell, p) pair below the bounds");
}

GenusDecomposition decompose_genus(unsigned g) {
  if (g < 4) throw InvalidInput("decompose_genus: genus must be at least 4");
  const unsigned m = g - 1;
  for (unsigned d = 3; d <= m; d += 2) {
    if (m % d == 0) {
      // The smallest odd divisor > 1 is automatically prime.
      return {m / d, d};
    }
  }
  if (m % 4 != 0) throw InternalCheckError("decompose_genus: expected a power of two >= 4");
  return {m / 4, 4};
}

unsigned riemann_hurwitz_double_cover(unsigned g_base, unsigned branch_count) {
  if (branch_count % 2 != 0) {
    throw InvalidInput("riemann_hurwitz_double_cover: branch count must be even");
  }
  const long long g = 2LL * g_base - 1 + branch_count / 2;
  if (g < 0) throw InvalidInput("riemann_hurwitz_double_cover: negative genus");
  return static_cast<unsigned>(g);
}

GenusPlan genus_construction_plan(unsigned g, const SearchBounds& bounds) {
  if (g < 4) {
    throw HypothesisError(
        "genus_construction_plan: only genus >= 4 is covered; genus 3 remains open");
  }
  const GenusDecomposition dec = decompose_genus(g);

  GenusPlan plan;
  plan.g = g;
  plan.k = dec.k;
  plan.ell = dec.ell;
  plan.branch_points = 2 * dec.k * dec.ell;
  plan.genus_check = riemann_hurwitz_double_cover(1, plan.branch_points);
  if (plan.genus_check != g || dec.k * dec.ell + 1 != g) {
    throw InternalCheckError("genus_construction_plan: decomposition does not recompose");
  }

  if (dec.ell == 3) {
    // Base curve: diagonal cubic X^3 + p Y^3 + 60 p^2 Z^3 with the smallest
    // admissible prime p = 2 (mod 3) coprime to 60.
    uint64_t p = 2;
    while (p % 3 != 2 || 60 % p == 0) p = next_prime_u64(p);
    plan.base_form = build_theorem1_form(1, 1, 60, Integer(p));
    plan.base_certificate = certify_no_abelian_points(*plan.base_form, Integer(p));
    if (!plan.base_certificate) {
      throw InternalCheckError("genus_construction_plan: cubic base certificate failed");
    }
    plan.conditions.push_back(make_condition(
        "base_curve",
        "the plane cubic " + to_string(*plan.base_form) + " = 0 has no abelian points (p = " +
            std::to_string(p) + ")",
        true));
  } else {
    plan.ell_witness = theorem_ell_search(dec.ell, bounds);
    plan.conditions.push_back(make_condition(
        "base_curve",
        "a genus-one curve of index " + std::to_string(dec.ell) +
            " without abelian points exists (witness prime p = " +
            std::to_string(plan.ell_witness->p) + ")",
        true));
  }

  plan.conditions.push_back(make_condition(
      "decomposition",
      "g - 1 = " + std::to_string(g - 1) + " = " + std::to_string(dec.k) + " * " +
          std::to_string(dec.ell) + " with the smallest odd prime factor (or 4)",
      true));
  plan.conditions.push_back(make_condition(
      "branch_count", "the double cover uses 2*k*ell = " + std::to_string(plan.branch_points) +
                          " simple branch points",
      true));
  plan.conditions.push_back(make_condition(
      "riemann_hurwitz", "a double cover of the genus-one base with that branch count has "
                         "genus k*ell + 1 = " + std::to_string(plan.genus_check),
      plan.genus_check == g));
  plan.lemma_chain = {
      "Take a degree-2 cover of the index-" + std::to_string(dec.ell) +
          " genus-one base curve, branched at " + std::to_string(plan.branch_points) +
          " generically chosen points.",
      "Riemann-Hurwitz gives genus 2*1 - 1 + k*ell = " + std::to_string(g) + ".",
      "Any abelian point of the cover would map to an abelian point of the base, which the "
      "base certificate excludes."};
  return plan;
}

}  // namespace abelcert
