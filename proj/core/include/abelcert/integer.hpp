#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abelcert/errors.hpp"

namespace abelcert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::powm;

// Primality.
//
// n < 2^64: deterministic Miller-Rabin with the fixed witness set
// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which decides primality
// exactly for all 64-bit inputs.
// n >= 2^64: the same fixed witnesses plus 52 further bases drawn from a
// splitmix64 stream seeded from n, for 64 strong-probable-prime rounds in
// total; the error probability is below 4^-64 = 2^-128 and the answer is a
// pure function of n.
bool is_prime(const Integer& n);
bool is_prime_u64(uint64_t n);

// Smallest prime strictly greater than n.
uint64_t next_prime_u64(uint64_t n);

struct Factorization {
  std::map<Integer, unsigned> exponents;  // prime -> exponent, keys ascending

  Integer value() const;  // product of p^e over all entries
  bool is_prime_power() const { return exponents.size() == 1; }
};

// Complete factorization of n >= 1 by trial division followed by
// Pollard-Brent rho. Every reported base is certified by is_prime.
// The rho stage is budgeted; exhausting the budget raises BudgetError.
Factorization factorize(const Integer& n, uint64_t rho_budget = 50'000'000);

// Exact p-adic valuation of n. n must be nonzero, p prime.
unsigned valuation(const Integer& n, const Integer& p);

Integer euler_phi(const Integer& n);

// phi(p^i) for i = v_p(N): the ramification degree acquired over p inside
// the N-th cyclotomic field. Equals 1 when p does not divide N.
Integer cyclotomic_ramification(const Integer& p, const Integer& N);

// gcd(d, p(p-1)) == 1: every cyclotomic completion above p then has
// ramification degree prime to d. Requires d >= 2 and p prime.
bool abelian_ramification_obstruction(const Integer& d, const Integer& p);

// Order of a in (Z/m)^*. Requires m >= 2 and gcd(a, m) = 1.
Integer multiplicative_order(const Integer& a, const Integer& m);

struct Congruence {
  Integer residue;
  Integer modulus;  // >= 1; moduli of a system pairwise coprime
};

// Least nonnegative solution of a pairwise-coprime system, paired with the
// product modulus.
std::pair<Integer, Integer> crt_combine(const std::vector<Congruence>& system);

// Smallest positive integer satisfying the system and the predicate, found
// by scanning the arithmetic progression upward. Passing `limit` without a
// hit raises BudgetError.
Integer crt_search(const std::vector<Congruence>& system,
                   const std::function<bool(const Integer&)>& predicate,
                   const Integer& limit = Integer(1) << 32);

// All (s, t) with 0 <= s <= s_max, 0 <= t <= t_max and |2^s - 3^t| = 1,
// in lexicographic order. Zero exponents participate.
std::vector<std::pair<unsigned, unsigned>> catalan_solutions(unsigned s_max,
                                                             unsigned t_max);

}  // namespace abelcert
