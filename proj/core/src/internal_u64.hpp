#pragma once

#include <cstdint>

#include "abelcert/errors.hpp"

namespace abelcert::internal {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t addmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  a %= m;
  b %= m;
  uint64_t s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline uint64_t submod_u64(uint64_t a, uint64_t b, uint64_t m) {
  a %= m;
  b %= m;
  return a >= b ? a - b : a + (m - b);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m for gcd(a, m) = 1, by extended Euclid.
inline uint64_t invmod_u64(uint64_t a, uint64_t m) {
  a %= m;
  if (a == 0) throw InvalidInput("invmod: zero has no inverse");
  int64_t t = 0, new_t = 1;
  uint64_t r = m, new_r = a;
  while (new_r != 0) {
    uint64_t qv = r / new_r;
    int64_t tmp_t = t - static_cast<int64_t>(qv) * new_t;
    t = new_t;
    new_t = tmp_t;
    uint64_t tmp_r = r - qv * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw InvalidInput("invmod: arguments are not coprime");
  return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(m)) : static_cast<uint64_t>(t);
}

// Legendre symbol for odd prime p: 0, 1, or p - 1 (for -1).
inline uint64_t legendre_u64(uint64_t a, uint64_t p) {
  return powmod_u64(a % p, (p - 1) / 2, p);
}

// Square root mod odd prime p by Tonelli-Shanks; requires a to be a QR.
inline uint64_t tonelli_u64(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
  uint64_t s = 0, q = p - 1;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  uint64_t z = 2;
  while (legendre_u64(z, p) != p - 1) ++z;
  uint64_t m = s;
  uint64_t c = powmod_u64(z, q, p);
  uint64_t t = powmod_u64(a, q, p);
  uint64_t r = powmod_u64(a, (q + 1) / 2, p);
  while (t != 1) {
    uint64_t i = 0;
    uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod_u64(t2, t2, p);
      ++i;
      if (i == m) throw InternalCheckError("tonelli: input is not a quadratic residue");
    }
    uint64_t b = c;
    for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
    m = i;
    c = mulmod_u64(b, b, p);
    t = mulmod_u64(t, c, p);
    r = mulmod_u64(r, b, p);
  }
  return r;
}

}  // namespace abelcert::internal
