#include "abelcert/integer.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace abelcert {

namespace {

constexpr std::array<uint64_t, 12> kFixedWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};
constexpr unsigned kExtraWitnessRounds = 52;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Strong probable prime test to base a; n odd, n > 2.
bool sprp_u64(uint64_t n, uint64_t a) {
  a %= n;
  if (a == 0) return true;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool sprp_big(const Integer& n, const Integer& a_in) {
  Integer a = a_in % n;
  if (a == 0) return true;
  Integer d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Integer x = powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic witness seed: folds the limbs of n into 64 bits.
uint64_t fold_to_u64(const Integer& n) {
  uint64_t h = 0x243f6a8885a308d3ULL;
  Integer v = n;
  while (v != 0) {
    h ^= static_cast<uint64_t>(v & 0xffffffffffffffffULL);
    h = h * 0x100000001b3ULL + 0x9e3779b9ULL;
    v >>= 64;
  }
  return h;
}

// Pollard-Brent rho for 64-bit composites. Returns a nontrivial factor or 0
// when the per-call budget runs out.
uint64_t pollard_brent_u64(uint64_t n, uint64_t c, uint64_t& budget) {
  auto step = [&](uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
  uint64_t x = 2, y = 2, d = 1, q = 1, ys = y;
  const uint64_t m = 128;
  uint64_t r = 1;
  while (d == 1) {
    x = y;
    for (uint64_t i = 0; i < r; ++i) y = step(y);
    uint64_t k = 0;
    while (k < r && d == 1) {
      ys = y;
      uint64_t lim = std::min(m, r - k);
      for (uint64_t i = 0; i < lim; ++i) {
        y = step(y);
        uint64_t diff = x > y ? x - y : y - x;
        q = mulmod_u64(q, diff == 0 ? 1 : diff, n);
      }
      if (budget < lim) return 0;
      budget -= lim;
      d = std::gcd(q, n);
      k += lim;
    }
    r <<= 1;
    if (budget == 0) return 0;
  }
  if (d == n) {
    // Backtrack one step at a time.
    do {
      ys = step(ys);
      uint64_t diff = x > ys ? x - ys : ys - x;
      d = std::gcd(diff == 0 ? n : diff, n);
    } while (d == 1);
  }
  return d == n ? 0 : d;
}

Integer pollard_brent_big(const Integer& n, unsigned c, uint64_t& budget) {
  auto step = [&](const Integer& x) { return (x * x + c) % n; };
  Integer x = 2, y = 2, d = 1, q = 1, ys = y;
  const uint64_t m = 64;
  uint64_t r = 1;
  while (d == 1) {
    x = y;
    for (uint64_t i = 0; i < r; ++i) y = step(y);
    uint64_t k = 0;
    while (k < r && d == 1) {
      ys = y;
      uint64_t lim = std::min(m, r - k);
      for (uint64_t i = 0; i < lim; ++i) {
        y = step(y);
        Integer diff = abs(x - y);
        if (diff != 0) q = (q * diff) % n;
      }
      if (budget < lim) return 0;
      budget -= lim;
      d = gcd(q, n);
      k += lim;
    }
    r <<= 1;
    if (budget == 0) return 0;
  }
  if (d == n) {
    do {
      ys = step(ys);
      d = gcd(abs(x - ys) == 0 ? n : abs(x - ys), n);
    } while (d == 1);
  }
  return d == n ? Integer(0) : d;
}

void factor_rec(Integer n, std::map<Integer, unsigned>& out, uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer f = 0;
  if (n <= std::numeric_limits<uint64_t>::max()) {
    uint64_t nn = static_cast<uint64_t>(n);
    for (uint64_t c = 1; f == 0; ++c) {
      if (budget == 0) throw BudgetError("factorization budget exhausted at " + n.str());
      f = pollard_brent_u64(nn, c, budget);
    }
  } else {
    for (unsigned c = 1; f == 0; ++c) {
      if (budget == 0) throw BudgetError("factorization budget exhausted at " + n.str());
      f = pollard_brent_big(n, c, budget);
    }
  }
  factor_rec(f, out, budget);
  factor_rec(n / f, out, budget);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kFixedWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (uint64_t a : kFixedWitnesses) {
    if (!sprp_u64(n, a)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<uint64_t>::max()) {
    return is_prime_u64(static_cast<uint64_t>(n));
  }
  for (uint64_t p : kFixedWitnesses) {
    if (n % p == 0) return false;
  }
  for (uint64_t a : kFixedWitnesses) {
    if (!sprp_big(n, a)) return false;
  }
  uint64_t state = fold_to_u64(n);
  for (unsigned i = 0; i < kExtraWitnessRounds; ++i) {
    Integer a = 2 + Integer(splitmix64(state)) % (n - 3);
    if (!sprp_big(n, a)) return false;
  }
  return true;
}

uint64_t next_prime_u64(uint64_t n) {
  if (n < 2) return 2;
  uint64_t k = n + 1;
  if (k % 2 == 0) {
    if (k == 2) return 2;
    ++k;
  }
  while (!is_prime_u64(k)) k += 2;
  return k;
}

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& [p, e] : exponents) {
    for (unsigned i = 0; i < e; ++i) v *= p;
  }
  return v;
}

Factorization factorize(const Integer& n, uint64_t rho_budget) {
  if (n < 1) throw InvalidInput("factorize requires n >= 1, got " + n.str());
  Factorization out;
  Integer m = n;
  for (uint64_t p = 2; p < 100'000 && m > 1; p = (p == 2 ? 3 : p + 2)) {
    if (Integer(p) * p > m) break;
    while (m % p == 0) {
      ++out.exponents[Integer(p)];
      m /= p;
    }
  }
  if (m > 1) {
    uint64_t budget = rho_budget;
    factor_rec(m, out.exponents, budget);
  }
  return out;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InvalidInput("valuation of zero is undefined");
  if (p < 2 || !is_prime(p)) {
    throw InvalidInput("valuation base must be prime, got " + p.str());
  }
  unsigned v = 0;
  Integer m = abs(n);
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

Integer euler_phi(const Integer& n) {
  if (n < 1) throw InvalidInput("euler_phi requires n >= 1");
  Integer out = 1;
  for (const auto& [p, e] : factorize(n).exponents) {
    Integer pe = 1;
    for (unsigned i = 0; i + 1 < e; ++i) pe *= p;
    out *= pe * (p - 1);
  }
  return out;
}

Integer cyclotomic_ramification(const Integer& p, const Integer& N) {
  if (!is_prime(p)) throw InvalidInput("cyclotomic_ramification: p must be prime");
  if (N < 1) throw InvalidInput("cyclotomic_ramification: N must be >= 1");
  if (N % p != 0) return 1;
  unsigned i = valuation(N, p);
  Integer out = p - 1;
  for (unsigned j = 0; j + 1 < i; ++j) out *= p;
  return out;
}

bool abelian_ramification_obstruction(const Integer& d, const Integer& p) {
  if (d < 2) throw InvalidInput("abelian_ramification_obstruction requires d >= 2");
  if (!is_prime(p)) throw InvalidInput("abelian_ramification_obstruction: p must be prime");
  return gcd(d, p * (p - 1)) == 1;
}

Integer multiplicative_order(const Integer& a, const Integer& m) {
  if (m < 2) throw InvalidInput("multiplicative_order requires modulus >= 2");
  Integer b = ((a % m) + m) % m;
  if (gcd(b, m) != 1) {
    throw InvalidInput("multiplicative_order: " + a.str() + " is not a unit mod " + m.str());
  }
  Integer o = euler_phi(m);
  for (const auto& [q, e] : factorize(o).exponents) {
    while (o % q == 0 && powm(b, o / q, m) == 1) o /= q;
  }
  return o;
}

std::pair<Integer, Integer> crt_combine(const std::vector<Congruence>& system) {
  if (system.empty()) throw InvalidInput("crt_combine: empty system");
  Integer r = 0, M = 1;
  for (const auto& c : system) {
    if (c.modulus < 1) throw InvalidInput("crt_combine: modulus must be >= 1");
    if (gcd(M, c.modulus) != 1) {
      throw InvalidInput("crt_combine: moduli are not pairwise coprime");
    }
    // Solve r + M*k == c.residue (mod c.modulus).
    Integer target = ((c.residue - r) % c.modulus + c.modulus) % c.modulus;
    Integer Minv = 0;
    if (c.modulus != 1) Minv = powm(M % c.modulus, euler_phi(c.modulus) - 1, c.modulus);
    Integer k = 0;
    if (c.modulus != 1) k = (target * Minv) % c.modulus;
    r += M * k;
    M *= c.modulus;
  }
  return {r % M, M};
}

Integer crt_search(const std::vector<Congruence>& system,
                   const std::function<bool(const Integer&)>& predicate,
                   const Integer& limit) {
  auto [r, M] = crt_combine(system);
  Integer x = r == 0 ? M : r;
  while (x <= limit) {
    if (predicate(x)) return x;
    x += M;
  }
  throw BudgetError("crt_search exceeded limit " + limit.str());
}

std::vector<std::pair<unsigned, unsigned>> catalan_solutions(unsigned s_max,
                                                             unsigned t_max) {
  std::vector<std::pair<unsigned, unsigned>> out;
  Integer pow2 = 1;
  for (unsigned s = 0; s <= s_max; ++s, pow2 *= 2) {
    Integer pow3 = 1;
    for (unsigned t = 0; t <= t_max; ++t, pow3 *= 3) {
      if (abs(pow2 - pow3) == 1) out.emplace_back(s, t);
    }
  }
  return out;
}

}  // namespace abelcert
