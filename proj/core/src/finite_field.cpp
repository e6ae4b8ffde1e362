#include "abelcert/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "abelcert/errors.hpp"
#include "internal_u64.hpp"

namespace abelcert {

using internal::addmod_u64;
using internal::invmod_u64;
using internal::legendre_u64;
using internal::mulmod_u64;
using internal::powmod_u64;
using internal::submod_u64;
using internal::tonelli_u64;

namespace {

void fp_normalize(PolyFp& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

void check_same_field(const PolyFp& a, const PolyFp& b) {
  if (a.p != b.p) throw InvalidInput("PolyFp: mismatched characteristics");
}

PolyFp fp_x(uint64_t p) { return fp_from_coeffs(p, {0, 1}); }

// Quotient and remainder by a nonzero divisor.
std::pair<PolyFp, PolyFp> fp_divmod(const PolyFp& a, const PolyFp& m) {
  check_same_field(a, m);
  if (m.is_zero()) throw InvalidInput("PolyFp: division by zero polynomial");
  const uint64_t p = a.p;
  PolyFp q{p, {}};
  PolyFp r = a;
  const int dm = m.degree();
  if (r.degree() < dm) return {q, r};
  q.c.assign(static_cast<size_t>(r.degree() - dm) + 1, 0);
  const uint64_t lead_inv = invmod_u64(m.c.back(), p);
  while (!r.is_zero() && r.degree() >= dm) {
    const int shift = r.degree() - dm;
    const uint64_t factor = mulmod_u64(r.c.back(), lead_inv, p);
    q.c[static_cast<size_t>(shift)] = factor;
    for (int i = 0; i <= dm; ++i) {
      const size_t idx = static_cast<size_t>(i + shift);
      r.c[idx] = submod_u64(r.c[idx], mulmod_u64(factor, m.c[static_cast<size_t>(i)], p), p);
    }
    fp_normalize(r);
  }
  fp_normalize(q);
  return {q, r};
}

}  // namespace

PolyFp fp_from_coeffs(uint64_t p, std::vector<uint64_t> c) {
  if (p < 2) throw InvalidInput("PolyFp: characteristic must be at least 2");
  PolyFp f{p, std::move(c)};
  for (auto& x : f.c) x %= p;
  fp_normalize(f);
  return f;
}

PolyFp reduce_mod_p(const IntPoly& f, uint64_t p) {
  if (p < 2) throw InvalidInput("reduce_mod_p: modulus must be at least 2");
  PolyFp r{p, {}};
  r.c.reserve(f.c.size());
  for (const Integer& v : f.c) {
    Integer m = v % Integer(p);
    if (m < 0) m += Integer(p);
    r.c.push_back(static_cast<uint64_t>(m));
  }
  fp_normalize(r);
  return r;
}

IntPoly lift_to_z(const PolyFp& f) {
  std::vector<Integer> c;
  c.reserve(f.c.size());
  for (uint64_t v : f.c) c.emplace_back(v);
  return IntPoly::from_coeffs(std::move(c));
}

PolyFp fp_add(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  PolyFp r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint64_t s = 0;
    if (i < a.c.size()) s = a.c[i];
    if (i < b.c.size()) s = addmod_u64(s, b.c[i], a.p);
    r.c[i] = s;
  }
  fp_normalize(r);
  return r;
}

PolyFp fp_sub(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  PolyFp r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint64_t x = i < a.c.size() ? a.c[i] : 0;
    uint64_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = submod_u64(x, y, a.p);
  }
  fp_normalize(r);
  return r;
}

PolyFp fp_mul(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return PolyFp{a.p, {}};
  PolyFp r{a.p, {}};
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = addmod_u64(r.c[i + j], mulmod_u64(a.c[i], b.c[j], a.p), a.p);
    }
  }
  fp_normalize(r);
  return r;
}

PolyFp fp_mod(const PolyFp& a, const PolyFp& m) { return fp_divmod(a, m).second; }

PolyFp fp_divexact_by_gcd(const PolyFp& a, const PolyFp& b) {
  auto [q, r] = fp_divmod(a, b);
  if (!r.is_zero()) throw InternalCheckError("PolyFp: expected exact division");
  return q;
}

PolyFp fp_make_monic(const PolyFp& a) {
  if (a.is_zero()) return a;
  if (a.c.back() == 1) return a;
  const uint64_t inv = invmod_u64(a.c.back(), a.p);
  PolyFp r = a;
  for (auto& x : r.c) x = mulmod_u64(x, inv, a.p);
  return r;
}

PolyFp fp_gcd(PolyFp a, PolyFp b) {
  check_same_field(a, b);
  while (!b.is_zero()) {
    PolyFp r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_make_monic(a);
}

PolyFp fp_derivative(const PolyFp& a) {
  PolyFp r{a.p, {}};
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) {
    r.c[i - 1] = mulmod_u64(a.c[i], i % a.p, a.p);
  }
  fp_normalize(r);
  return r;
}

PolyFp fp_powmod(const PolyFp& base, const Integer& e, const PolyFp& m) {
  check_same_field(base, m);
  if (e < 0) throw InvalidInput("fp_powmod: negative exponent");
  if (m.degree() < 1) throw InvalidInput("fp_powmod: modulus must have positive degree");
  PolyFp result = fp_from_coeffs(m.p, {1});
  PolyFp b = fp_mod(base, m);
  Integer k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = fp_mod(fp_mul(result, b), m);
    b = fp_mod(fp_mul(b, b), m);
    k >>= 1;
  }
  return result;
}

uint64_t fp_eval(const PolyFp& f, uint64_t x) {
  x %= f.p;
  uint64_t acc = 0;
  for (size_t i = f.c.size(); i-- > 0;) {
    acc = addmod_u64(mulmod_u64(acc, x, f.p), f.c[i], f.p);
  }
  return acc;
}

std::string to_string(const PolyFp& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = f.c.size(); i-- > 0;) {
    if (f.c[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || f.c[i] != 1) out << f.c[i];
    if (i > 0) {
      if (f.c[i] != 1) out << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

bool fp_is_irreducible(const PolyFp& f) {
  const int n = f.degree();
  if (n < 1) return false;
  const PolyFp fm = fp_make_monic(f);
  if (n == 1) return true;
  const uint64_t p = f.p;
  const PolyFp x = fp_x(p);

  // Frobenius iterate: h -> h^p mod fm, applied `times` times starting at x.
  auto frobenius_power = [&](unsigned times) {
    PolyFp h = fp_mod(x, fm);
    for (unsigned i = 0; i < times; ++i) h = fp_powmod(h, Integer(p), fm);
    return h;
  };

  if (!(fp_sub(frobenius_power(static_cast<unsigned>(n)), fp_mod(x, fm)).is_zero())) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool r_prime = true;
    for (int d = 2; d * d <= r; ++d) {
      if (r % d == 0) {
        r_prime = false;
        break;
      }
    }
    if (!r_prime) continue;
    const PolyFp g = fp_sub(frobenius_power(static_cast<unsigned>(n / r)), fp_mod(x, fm));
    if (fp_gcd(g, fm).degree() != 0) return false;
  }
  return true;
}

unsigned count_distinct_roots(const IntPoly& f, uint64_t p) {
  PolyFp fb = reduce_mod_p(f, p);
  if (fb.is_zero()) throw InvalidInput("count_distinct_roots: polynomial vanishes mod p");
  if (fb.degree() == 0) return 0;
  fb = fp_make_monic(fb);
  const PolyFp x = fp_x(p);
  const PolyFp xp = fp_powmod(x, Integer(p), fb);
  const PolyFp g = fp_gcd(fp_sub(xp, fp_mod(x, fb)), fb);
  return static_cast<unsigned>(g.degree());
}

bool splits_completely(const IntPoly& f, uint64_t p) {
  const PolyFp fb = reduce_mod_p(f, p);
  if (fb.is_zero()) throw InvalidInput("splits_completely: polynomial vanishes mod p");
  if (fb.degree() != f.degree()) return false;
  return count_distinct_roots(f, p) == static_cast<unsigned>(f.degree());
}

std::optional<CycleType> cycle_type(const IntPoly& f, uint64_t p) {
  PolyFp fb = reduce_mod_p(f, p);
  if (fb.is_zero()) throw InvalidInput("cycle_type: polynomial vanishes mod p");
  if (fb.degree() != f.degree()) return std::nullopt;
  fb = fp_make_monic(fb);
  if (fp_gcd(fb, fp_derivative(fb)).degree() != 0) return std::nullopt;

  CycleType type;
  PolyFp rem = fb;
  const PolyFp x = fp_x(p);
  PolyFp h = fp_mod(x, rem);
  for (unsigned d = 1; rem.degree() > 0 && 2 * d <= static_cast<unsigned>(rem.degree()); ++d) {
    h = fp_powmod(h, Integer(p), rem);
    const PolyFp g = fp_gcd(fp_sub(h, fp_mod(x, rem)), rem);
    if (g.degree() > 0) {
      if (g.degree() % static_cast<int>(d) != 0) {
        throw InternalCheckError("cycle_type: degree bookkeeping failed");
      }
      for (int i = 0; i < g.degree() / static_cast<int>(d); ++i) type.push_back(d);
      rem = fp_divexact_by_gcd(rem, g);
      if (rem.degree() > 0) h = fp_mod(h, rem);
    }
  }
  if (rem.degree() > 0) type.push_back(static_cast<unsigned>(rem.degree()));
  std::sort(type.begin(), type.end());
  unsigned total = 0;
  for (unsigned d : type) total += d;
  if (total != static_cast<unsigned>(f.degree())) {
    throw InternalCheckError("cycle_type: factor degrees do not sum to the degree");
  }
  return type;
}

PolyFp find_irreducible(uint64_t p, unsigned a) {
  if (a == 0) throw InvalidInput("find_irreducible: degree must be positive");
  if (a == 1) return fp_x(p);
  // Enumerate lower coefficients by ascending index; leading coefficient is 1.
  Integer bound = 1;
  for (unsigned i = 0; i < a; ++i) bound *= Integer(p);
  for (Integer m = 0; m < bound; ++m) {
    std::vector<uint64_t> c(a + 1, 0);
    Integer v = m;
    for (unsigned i = 0; i < a; ++i) {
      c[i] = static_cast<uint64_t>(v % Integer(p));
      v /= Integer(p);
    }
    c[a] = 1;
    PolyFp cand = fp_from_coeffs(p, std::move(c));
    if (fp_is_irreducible(cand)) return cand;
  }
  throw InternalCheckError("find_irreducible: no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// Fq

Fq::Fq(uint64_t p, unsigned a) : Fq(p, a, a == 1 ? fp_x(p) : find_irreducible(p, a)) {}

Fq::Fq(uint64_t p, unsigned a, PolyFp modulus) : p_(p), a_(a), mod_(std::move(modulus)) {
  if (a == 0) throw InvalidInput("Fq: extension degree must be positive");
  if (!is_prime_u64(p)) throw InvalidInput("Fq: characteristic must be prime");
  if (mod_.p != p || mod_.degree() != static_cast<int>(a) || mod_.c.back() != 1) {
    throw InvalidInput("Fq: modulus must be monic of the extension degree");
  }
  if (a >= 2 && !fp_is_irreducible(mod_)) throw InvalidInput("Fq: modulus must be irreducible");
  if (a == 1) {
    if (p >= (uint64_t(1) << 62)) throw UnsupportedError("Fq: prime field too large");
    q_ = p;
    find_prime_generator();
    return;
  }
  Integer qi = 1;
  for (unsigned i = 0; i < a; ++i) qi *= Integer(p);
  if (qi > Integer(uint64_t(1) << 20)) {
    throw UnsupportedError("Fq: extension field size exceeds the table limit 2^20");
  }
  q_ = static_cast<uint64_t>(qi);
  build_tables();
}

std::vector<uint64_t> Fq::coords(uint64_t x) const {
  std::vector<uint64_t> v(a_, 0);
  for (unsigned i = 0; i < a_; ++i) {
    v[i] = x % p_;
    x /= p_;
  }
  return v;
}

uint64_t Fq::from_coords(const std::vector<uint64_t>& v) const {
  if (v.size() > a_) throw InvalidInput("Fq: too many coordinates");
  uint64_t x = 0;
  for (size_t i = v.size(); i-- > 0;) {
    if (v[i] >= p_) throw InvalidInput("Fq: coordinate out of range");
    x = x * p_ + v[i];
  }
  return x;
}

uint64_t Fq::mul_raw(uint64_t x, uint64_t y) const {
  const PolyFp fx = fp_from_coeffs(p_, coords(x));
  const PolyFp fy = fp_from_coeffs(p_, coords(y));
  const PolyFp prod = fp_mod(fp_mul(fx, fy), mod_);
  std::vector<uint64_t> c = prod.c;
  c.resize(a_, 0);
  return from_coords(c);
}

void Fq::find_prime_generator() {
  // Smallest primitive root mod p, found by checking proper-divisor powers.
  // No log/exp tables here: prime fields allow p far beyond the table limit.
  if (p_ == 2) {
    gen_ = 1;
    return;
  }
  const Factorization fac = factorize(Integer(p_ - 1));
  for (uint64_t cand = 2; cand < p_; ++cand) {
    bool ok = true;
    for (const auto& [prime, exp] : fac.exponents) {
      const uint64_t e = (p_ - 1) / static_cast<uint64_t>(prime);
      if (powmod_u64(cand, e, p_) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = cand;
      return;
    }
  }
  throw InternalCheckError("Fq: no multiplicative generator found");
}

void Fq::build_tables() {
  // Find a multiplicative generator by checking proper-divisor powers.
  const Factorization fac = factorize(Integer(q_ - 1));
  auto pow_raw = [&](uint64_t base, uint64_t e) {
    uint64_t r = 1, b = base;
    while (e > 0) {
      if (e & 1) r = mul_raw(r, b);
      b = mul_raw(b, b);
      e >>= 1;
    }
    return r;
  };
  gen_ = 0;
  for (uint64_t cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (const auto& [prime, exp] : fac.exponents) {
      const uint64_t e = (q_ - 1) / static_cast<uint64_t>(prime);
      if (pow_raw(cand, e) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = cand;
      break;
    }
  }
  if (gen_ == 0) throw InternalCheckError("Fq: no multiplicative generator found");

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  uint64_t cur = 1;
  for (uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<uint32_t>(cur);
    exp_[i + (q_ - 1)] = static_cast<uint32_t>(cur);
    log_[cur] = static_cast<uint32_t>(i);
    cur = mul_raw(cur, gen_);
  }
  if (cur != 1) throw InternalCheckError("Fq: generator order mismatch");

  if (p_ == 2) {
    trace_.assign(q_, 0);
    for (uint64_t u = 0; u < q_; ++u) {
      uint64_t acc = 0, t = u;
      for (unsigned i = 0; i < a_; ++i) {
        acc ^= t;  // accumulate in the additive group (characteristic 2)
        t = mul(t, t);
      }
      // Trace lands in F_2 = {0, 1}.
      if (acc > 1) throw InternalCheckError("Fq: trace left the prime field");
      trace_[u] = static_cast<uint8_t>(acc);
    }
    artin_.assign(q_, UINT32_MAX);
    for (uint64_t z = 0; z < q_; ++z) {
      const uint64_t w = add(mul(z, z), z);
      if (artin_[w] == UINT32_MAX) artin_[w] = static_cast<uint32_t>(z);
    }
  }
}

uint64_t Fq::add(uint64_t x, uint64_t y) const {
  if (a_ == 1) return addmod_u64(x, y, p_);
  if (p_ == 2) return x ^ y;
  uint64_t r = 0, mult = 1;
  for (unsigned i = 0; i < a_; ++i) {
    r += mult * addmod_u64(x % p_, y % p_, p_);
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return r;
}

uint64_t Fq::neg(uint64_t x) const {
  if (a_ == 1) return x == 0 ? 0 : p_ - x;
  if (p_ == 2) return x;
  uint64_t r = 0, mult = 1;
  for (unsigned i = 0; i < a_; ++i) {
    const uint64_t d = x % p_;
    r += mult * (d == 0 ? 0 : p_ - d);
    x /= p_;
    mult *= p_;
  }
  return r;
}

uint64_t Fq::sub(uint64_t x, uint64_t y) const { return add(x, neg(y)); }

uint64_t Fq::mul(uint64_t x, uint64_t y) const {
  if (a_ == 1) return mulmod_u64(x, y, p_);
  if (x == 0 || y == 0) return 0;
  return exp_[log_[x] + log_[y]];
}

uint64_t Fq::inv(uint64_t x) const {
  if (x == 0) throw InvalidInput("Fq: inverse of zero");
  if (a_ == 1) return invmod_u64(x, p_);
  return exp_[(q_ - 1) - log_[x]];
}

uint64_t Fq::pow(uint64_t x, const Integer& e) const {
  if (x == 0) {
    if (e > 0) return 0;
    if (e == 0) return one();
    throw InvalidInput("Fq: negative power of zero");
  }
  const Integer order(q_ - 1);
  Integer em = e % order;
  if (em < 0) em += order;
  const uint64_t k = static_cast<uint64_t>(em);
  if (a_ == 1) return powmod_u64(x, k, p_);
  const uint64_t idx = log_[x];
  return exp_[(static_cast<unsigned __int128>(idx) * k) % (q_ - 1)];
}

uint64_t Fq::from_integer(const Integer& v) const {
  Integer m = v % Integer(p_);
  if (m < 0) m += Integer(p_);
  return static_cast<uint64_t>(m);
}

unsigned Fq::num_sqrt(uint64_t u) const {
  if (u >= q_) throw InvalidInput("Fq: element out of range");
  if (a_ == 1 && p_ == 2) return 1;
  if (a_ == 1 && p_ > (uint64_t(1) << 20)) {
    if (u == 0) return 1;
    return legendre_u64(u, p_) == 1 ? 2 : 0;
  }
  if (sqrt_count_.empty()) {
    sqrt_count_.assign(q_, 0);
    sqrt_val_.assign(q_, 0);
    for (uint64_t y = 0; y < q_; ++y) {
      const uint64_t s = mul(y, y);
      if (sqrt_count_[s] == 0) sqrt_val_[s] = y;
      ++sqrt_count_[s];
    }
  }
  return sqrt_count_[u];
}

std::pair<unsigned, uint64_t> Fq::sqrt(uint64_t u) const {
  const unsigned n = num_sqrt(u);
  if (n == 0) return {0, 0};
  if (a_ == 1 && p_ == 2) return {1, u};
  if (a_ == 1 && p_ > (uint64_t(1) << 20)) {
    if (u == 0) return {1, 0};
    const uint64_t r = tonelli_u64(u, p_);
    return {2, std::min(r, p_ - r)};
  }
  return {n, sqrt_val_[u]};
}

uint64_t Fq::trace_f2(uint64_t u) const {
  if (p_ != 2) throw InvalidInput("Fq: absolute trace to F_2 needs characteristic 2");
  if (a_ == 1) return u & 1;
  return trace_[u];
}

uint64_t Fq::artin_preimage(uint64_t w) const {
  if (p_ != 2) throw InvalidInput("Fq: Artin-Schreier preimage needs characteristic 2");
  if (a_ == 1) {
    if (w != 0) throw InvalidInput("Fq: element has nonzero trace, no preimage");
    return 0;
  }
  if (w >= q_ || artin_[w] == UINT32_MAX) {
    throw InvalidInput("Fq: element has nonzero trace, no preimage");
  }
  return artin_[w];
}

std::string Fq::elem_to_string(uint64_t x) const {
  if (a_ == 1) return std::to_string(x);
  std::ostringstream out;
  out << "(";
  const auto v = coords(x);
  for (unsigned i = 0; i < a_; ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

}  // namespace abelcert
