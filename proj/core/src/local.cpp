#include "abelcert/local.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "abelcert/errors.hpp"
#include "internal_u64.hpp"

namespace abelcert {

using internal::addmod_u64;
using internal::mulmod_u64;
using internal::powmod_u64;

namespace {

Integer pow_integer(const Integer& base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

uint64_t pow_u64_checked(uint64_t base, unsigned e, uint64_t limit) {
  Integer v = pow_integer(Integer(base), e);
  if (v > Integer(limit)) throw BudgetError("local: modulus p^m exceeds the supported range");
  return static_cast<uint64_t>(v);
}

std::string profile_to_string(const ValuationProfile& prof) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < prof.entries.size(); ++i) {
    if (i) out << ", ";
    out << prof.entries[i].first;
  }
  out << ")";
  return out.str();
}

}  // namespace

std::optional<NoAbelianPointsCertificate> certify_no_abelian_points(const DiagonalForm& form,
                                                                    const Integer& p) {
  if (!is_prime(p)) throw InvalidInput("certify_no_abelian_points: p must be prime");
  const unsigned d = form.degree;
  const unsigned k = form.num_vars();
  const ValuationProfile prof = valuation_profile(form, p);

  std::vector<unsigned> sorted_vals;
  sorted_vals.reserve(k);
  for (const auto& [a, u] : prof.entries) sorted_vals.push_back(a);
  std::sort(sorted_vals.begin(), sorted_vals.end());
  bool is_full_staircase = (k == d);
  if (is_full_staircase) {
    for (unsigned i = 0; i < d; ++i) {
      if (sorted_vals[i] != i) {
        is_full_staircase = false;
        break;
      }
    }
  }
  const bool gcd_ok = abelian_ramification_obstruction(d, p);
  if (!is_full_staircase || !gcd_ok) return std::nullopt;
  if (!staircase_check(prof, d, 1)) {
    throw InternalCheckError("certify_no_abelian_points: staircase recheck failed");
  }

  NoAbelianPointsCertificate cert;
  cert.form = form;
  cert.prime = p;
  cert.profile = prof;
  cert.conditions.push_back(make_condition(
      "staircase_profile",
      "coefficient valuations at p sort to (0, 1, ..., " + std::to_string(d - 1) + ")", true));
  cert.conditions.push_back(
      make_condition("unit_cofactors", "every coefficient is p^a * u with p not dividing u", true));
  cert.conditions.push_back(make_condition(
      "ramification_coprimality", "gcd(" + std::to_string(d) + ", p(p-1)) = 1 at p = " + p.str(),
      true));
  cert.conditions.push_back(make_condition(
      "residue_distinctness",
      "the residues e*a_i mod " + std::to_string(d) +
          " are pairwise distinct for e = 1, hence for every e coprime to " + std::to_string(d),
      true));
  cert.lemma_chain = {
      "A point over the maximal abelian extension of Q lies in a cyclotomic field Q(mu_N) "
      "(Kronecker-Weber).",
      "The completion of Q(mu_N) at a prime above p ramifies with index e = phi(p^i) = "
      "p^(i-1)(p-1) for some i >= 0.",
      "gcd(d, p(p-1)) = 1 forces gcd(e, d) = 1 for every such e.",
      "With profile " + profile_to_string(prof) +
          " the term valuations e*a_i are pairwise distinct mod d, so a nonzero solution would "
          "make a sum with a unique minimal-valuation term vanish.",
      "Hence the form has no nonzero point over any abelian extension of Q (nor of Q_p)."};
  return cert;
}

std::vector<NoAbelianPointsCertificate> scan_primes_for_certificate(const DiagonalForm& form,
                                                                    uint64_t p_max,
                                                                    unsigned workers) {
  if (p_max < 2) throw InvalidInput("scan: p_max must be at least 2");
  if (workers == 0) workers = 1;
  const uint64_t span = p_max - 1;
  if (workers > 1 && span < workers) workers = 1;

  std::vector<std::vector<NoAbelianPointsCertificate>> found(workers);
  auto scan_range = [&](uint64_t lo, uint64_t hi, unsigned slot) {
    uint64_t p = lo >= 2 ? lo : 2;
    if (!is_prime_u64(p)) p = next_prime_u64(p);
    for (; p <= hi; p = next_prime_u64(p)) {
      if (auto cert = certify_no_abelian_points(form, Integer(p))) {
        found[slot].push_back(std::move(*cert));
      }
    }
  };

  if (workers == 1) {
    scan_range(2, p_max, 0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const uint64_t lo = 2 + span * w / workers;
      const uint64_t hi = w + 1 == workers ? p_max : 1 + span * (w + 1) / workers;
      pool.emplace_back(scan_range, lo, hi, w);
    }
    for (auto& t : pool) t.join();
  }

  std::vector<NoAbelianPointsCertificate> merged;
  for (auto& chunk : found) {
    for (auto& cert : chunk) merged.push_back(std::move(cert));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.prime < b.prime; });
  return merged;
}

std::optional<HenselWitness> local_solve_diagonal(const DiagonalForm& form, const Integer& p,
                                                  unsigned m, uint64_t budget) {
  if (!is_prime(p)) throw InvalidInput("local_solve_diagonal: p must be prime");
  if (m < 1) throw InvalidInput("local_solve_diagonal: precision must be at least 1");
  const unsigned k = form.num_vars();
  const unsigned d = form.degree;
  const Integer modulus = pow_integer(p, m);
  if (pow_integer(modulus, k) > Integer(budget)) {
    throw BudgetError("local_solve_diagonal: p^(m*k) exceeds the search budget");
  }
  const uint64_t M = static_cast<uint64_t>(modulus);

  std::vector<Integer> powd(M), powd1(M);
  for (uint64_t v = 0; v < M; ++v) {
    powd[v] = pow_integer(Integer(v), d);
    powd1[v] = pow_integer(Integer(v), d - 1);
  }

  std::vector<uint64_t> t(k, 0);
  auto make_witness = [&](const std::vector<uint64_t>& tuple, const Integer& value,
                          unsigned coordinate, unsigned w) {
    HenselWitness wit;
    wit.form = form;
    wit.prime = p;
    wit.precision = m;
    wit.budget = budget;
    for (uint64_t v : tuple) wit.tuple.emplace_back(v);
    wit.coordinate = coordinate;
    wit.grad_valuation = w;
    wit.value_is_zero = value == 0;
    wit.value_valuation = value == 0 ? 0 : valuation(value, p);
    wit.conditions.push_back(
        make_condition("primitive", "some coordinate is a p-adic unit", true));
    wit.conditions.push_back(make_condition(
        "controlling_partial",
        "v_p(dF/dx_" + std::to_string(coordinate) + "(t)) = " + std::to_string(w), true));
    wit.conditions.push_back(make_condition(
        "hensel_inequality",
        wit.value_is_zero
            ? "F(t) = 0 exactly"
            : "v_p(F(t)) = " + std::to_string(wit.value_valuation) +
                  " >= 2w+1 = " + std::to_string(2 * w + 1),
        true));
    wit.lemma_chain = {
        "Newton iteration on coordinate x_" + std::to_string(coordinate) +
            " starting at t converges in Z_p (strengthened Hensel lemma).",
        "The limit is a primitive zero of the form, hence a Q_p-point of the projective "
        "hypersurface."};
    return wit;
  };

  // Row-major odometer: the last coordinate varies fastest.
  while (true) {
    bool primitive = false;
    for (unsigned i = 0; i < k; ++i) {
      if (Integer(t[i]) % p != 0) {
        primitive = true;
        break;
      }
    }
    if (primitive) {
      Integer value = 0;
      for (unsigned i = 0; i < k; ++i) value += form.coeffs[i] * powd[t[i]];
      bool have_w = false;
      unsigned w = 0, coord = 0;
      for (unsigned i = 0; i < k; ++i) {
        if (t[i] == 0) continue;
        const Integer partial = Integer(d) * form.coeffs[i] * powd1[t[i]];
        const unsigned wv = valuation(partial, p);
        if (!have_w || wv < w) {
          have_w = true;
          w = wv;
          coord = i;
        }
      }
      if (have_w) {
        const bool liftable = value == 0 || valuation(value, p) >= 2 * w + 1;
        if (liftable) return make_witness(t, value, coord, w);
      }
    }
    unsigned i = k;
    while (i > 0) {
      --i;
      if (++t[i] < M) break;
      t[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

std::optional<HenselWitness> local_solve_escalating(const DiagonalForm& form, const Integer& p,
                                                    unsigned max_precision, uint64_t budget) {
  for (unsigned m : {1u, 3u, 5u}) {
    if (m > max_precision) break;
    if (auto wit = local_solve_diagonal(form, p, m, budget)) {
      wit->max_precision = max_precision;
      return wit;
    }
  }
  return std::nullopt;
}

namespace {

bool brute_force_exhaustive(const DiagonalForm& form, const Integer& p, unsigned m,
                            uint64_t budget) {
  const unsigned k = form.num_vars();
  const unsigned d = form.degree;
  const uint64_t pu = static_cast<uint64_t>(p);
  const uint64_t M = pow_u64_checked(pu, m, uint64_t(1) << 26);
  if (pow_integer(Integer(M), k - 1) > Integer(budget)) {
    throw BudgetError("brute_force_primitive: exhaustive cost exceeds budget");
  }

  std::vector<uint64_t> powd(M);
  for (uint64_t v = 0; v < M; ++v) {
    uint64_t r = 1;
    for (unsigned i = 0; i < d; ++i) r = mulmod_u64(r, v, M);
    powd[v] = r;
  }
  std::vector<uint64_t> cred(k);
  for (unsigned i = 0; i < k; ++i) {
    Integer c = form.coeffs[i] % Integer(M);
    if (c < 0) c += Integer(M);
    cred[i] = static_cast<uint64_t>(c);
  }

  // Lookup tables for the last coordinate.
  std::vector<uint8_t> exist_any(M, 0), exist_unit(M, 0);
  for (uint64_t z = 0; z < M; ++z) {
    const uint64_t v = mulmod_u64(cred[k - 1], powd[z], M);
    exist_any[v] = 1;
    if (z % pu != 0) exist_unit[v] = 1;
  }

  std::vector<uint64_t> x(k - 1, 0);
  while (true) {
    uint64_t sum = 0;
    bool unit = false;
    for (unsigned i = 0; i + 1 < k; ++i) {
      sum = (sum + mulmod_u64(cred[i], powd[x[i]], M)) % M;
      if (x[i] % pu != 0) unit = true;
    }
    const uint64_t need = (M - sum) % M;
    if (unit ? exist_any[need] : exist_unit[need]) return true;
    unsigned i = k - 1;
    bool done = false;
    while (i > 0) {
      --i;
      if (++x[i] < M) break;
      x[i] = 0;
      if (i == 0) done = true;
    }
    if (done) return false;
  }
}

// Level-wise lifting: the frontier at level L holds the primitive tuples mod
// p^L with F = 0 (mod p^L).  A child t + p^L*delta satisfies
//   F(t + p^L delta) = F(t) + p^L * grad F(t) . delta   (mod p^(L+1))
// because every higher Taylor term carries p^(2L).  With F(t) = p^L * v the
// survivors are exactly the solutions of v + sum g_i delta_i = 0 (mod p) for
// the gradient residues g_i, i.e. a hyperplane of p^(k-1) children, all p^k
// of them (g = 0, v = 0), or none (g = 0, v != 0).  Existence of a primitive
// tuple mod p^m is therefore decided without enumerating children blindly.
bool brute_force_cascade(const DiagonalForm& form, const Integer& p, unsigned m,
                         uint64_t budget) {
  const unsigned k = form.num_vars();
  const unsigned d = form.degree;
  const uint64_t pu = static_cast<uint64_t>(p);
  const uint64_t frontier_cap = std::max<uint64_t>(budget / 20, 1'000'000);

  // Strip the common coefficient valuation s: F = p^s * F', and a primitive
  // tuple solves F = 0 (mod p^m) iff it solves F' = 0 (mod p^(m-s)).
  unsigned strip = m;
  for (const Integer& c : form.coeffs) {
    strip = std::min(strip, valuation(c, p));
    if (strip == 0) break;
  }
  if (strip >= m) return true;  // every primitive tuple is a solution mod p^m
  std::vector<Integer> coeffs = form.coeffs;
  if (strip > 0) {
    const Integer ps = pow_integer(p, strip);
    for (Integer& c : coeffs) c /= ps;
    m -= strip;
  }

  const uint64_t M = pow_u64_checked(pu, m, uint64_t(1) << 62);
  std::vector<uint64_t> cred(k);  // coefficients mod p^m
  for (unsigned i = 0; i < k; ++i) {
    Integer c = coeffs[i] % Integer(M);
    if (c < 0) c += Integer(M);
    cred[i] = static_cast<uint64_t>(c);
  }

  // Optional early certificate on small frontiers: exact zero or Newton-lemma
  // liftability v(F) >= 2w+1 imply solutions mod p^m for every m.
  auto certainly_solvable = [&](const uint64_t* t) {
    Integer value = 0;
    for (unsigned i = 0; i < k; ++i) value += coeffs[i] * pow_integer(Integer(t[i]), d);
    if (value == 0) return true;
    const unsigned vF = valuation(value, p);
    bool have_w = false;
    unsigned w = 0;
    for (unsigned i = 0; i < k; ++i) {
      if (t[i] == 0) continue;
      const Integer partial = Integer(d) * coeffs[i] * pow_integer(Integer(t[i]), d - 1);
      const unsigned wv = valuation(partial, p);
      if (!have_w || wv < w) {
        have_w = true;
        w = wv;
      }
    }
    return have_w && vF >= 2 * w + 1;
  };
  constexpr size_t kStatusFrontierLimit = 4096;

  if (pow_integer(p, k) > Integer(100'000'000)) {
    throw BudgetError("brute_force_primitive: level-1 enumeration exceeds budget");
  }

  // Level 1: primitive tuples mod p with F = 0 (mod p).
  std::vector<uint64_t> flat;  // frontier, stride k
  {
    std::vector<uint64_t> t(k, 0);
    while (true) {
      bool nonzero = false;
      uint64_t value = 0;
      for (unsigned i = 0; i < k; ++i) {
        if (t[i] != 0) nonzero = true;
        value = (value + mulmod_u64(cred[i] % pu, powmod_u64(t[i], d, pu), pu)) % pu;
      }
      if (nonzero && value == 0) {
        for (unsigned i = 0; i < k; ++i) flat.push_back(t[i]);
      }
      unsigned i = k;
      bool done = false;
      while (i > 0) {
        --i;
        if (++t[i] < pu) break;
        t[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }

  uint64_t level_mod = pu;
  std::vector<uint64_t> grad(k), delta(k), child(k);
  for (unsigned level = 1; level < m; ++level) {
    if (flat.empty()) return false;
    const bool run_status = flat.size() / k <= kStatusFrontierLimit;
    const uint64_t next_mod = level_mod * pu;
    std::vector<uint64_t> next;

    auto push_child = [&](const uint64_t* t) {
      if (next.size() / k >= frontier_cap) {
        throw BudgetError("brute_force_primitive: cascade frontier exceeds budget");
      }
      for (unsigned i = 0; i < k; ++i) next.push_back(t[i]);
    };

    for (size_t base = 0; base < flat.size(); base += k) {
      const uint64_t* t = &flat[base];
      if (run_status && certainly_solvable(t)) return true;

      // F(t) mod p^(level+1) and the gradient mod p.
      uint64_t value = 0;
      for (unsigned i = 0; i < k; ++i) {
        value = addmod_u64(value,
                           mulmod_u64(cred[i] % next_mod, powmod_u64(t[i], d, next_mod), next_mod),
                           next_mod);
        grad[i] = mulmod_u64(mulmod_u64(d % pu, cred[i] % pu, pu), powmod_u64(t[i], d - 1, pu), pu);
      }
      if (value % level_mod != 0) {
        throw InternalCheckError("brute_force_primitive: cascade invariant violated");
      }
      const uint64_t v = (value / level_mod) % pu;

      unsigned pivot = k;
      for (unsigned i = 0; i < k; ++i) {
        if (grad[i] != 0) {
          pivot = i;
          break;
        }
      }

      if (pivot == k) {
        if (v != 0) continue;  // no child lifts
        // Every child lifts: enumerate all p^k offsets.
        std::fill(delta.begin(), delta.end(), 0);
        while (true) {
          for (unsigned i = 0; i < k; ++i) child[i] = t[i] + level_mod * delta[i];
          push_child(child.data());
          unsigned i = k;
          bool done = false;
          while (i > 0) {
            --i;
            if (++delta[i] < pu) break;
            delta[i] = 0;
            if (i == 0) done = true;
          }
          if (done) break;
        }
        continue;
      }

      // Hyperplane case: solve for the pivot offset, p^(k-1) children.
      const uint64_t inv = internal::invmod_u64(grad[pivot], pu);
      std::fill(delta.begin(), delta.end(), 0);
      while (true) {
        uint64_t rhs = v;
        for (unsigned i = 0; i < k; ++i) {
          if (i != pivot) rhs = addmod_u64(rhs, mulmod_u64(grad[i], delta[i], pu), pu);
        }
        delta[pivot] = mulmod_u64((pu - rhs) % pu, inv, pu);
        for (unsigned i = 0; i < k; ++i) child[i] = t[i] + level_mod * delta[i];
        push_child(child.data());
        unsigned i = k;
        bool done = false;
        while (i > 0) {
          --i;
          if (i == pivot) continue;  // the pivot offset is determined
          if (++delta[i] < pu) break;
          delta[i] = 0;
          if (i == 0 || (pivot == 0 && i == 1)) done = true;
        }
        if (done || k == 1) break;
      }
    }
    flat = std::move(next);
    level_mod = next_mod;
  }
  return !flat.empty();
}

}  // namespace

bool brute_force_primitive(const DiagonalForm& form, const Integer& p, unsigned m, BruteMode mode,
                           uint64_t budget) {
  if (!is_prime(p)) throw InvalidInput("brute_force_primitive: p must be prime");
  if (m < 1) throw InvalidInput("brute_force_primitive: precision must be at least 1");
  if (p > Integer(uint64_t(1) << 31)) {
    throw BudgetError("brute_force_primitive: prime too large");
  }
  if (mode == BruteMode::Auto) {
    const Integer cost = pow_integer(pow_integer(p, m), form.num_vars() - 1);
    mode = (cost <= Integer(budget) && pow_integer(p, m) <= Integer(uint64_t(1) << 26))
               ? BruteMode::Exhaustive
               : BruteMode::Cascade;
  }
  return mode == BruteMode::Exhaustive ? brute_force_exhaustive(form, p, m, budget)
                                       : brute_force_cascade(form, p, m, budget);
}

}  // namespace abelcert
