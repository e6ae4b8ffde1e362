#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcert/integer.hpp"
#include "abelcert/poly.hpp"

namespace abelcert {

// Polynomial over F_p, coefficients constant-first in [0, p), normalized.
struct PolyFp {
  uint64_t p = 0;
  std::vector<uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

PolyFp fp_from_coeffs(uint64_t p, std::vector<uint64_t> c);
PolyFp reduce_mod_p(const IntPoly& f, uint64_t p);
IntPoly lift_to_z(const PolyFp& f);
PolyFp fp_add(const PolyFp& a, const PolyFp& b);
PolyFp fp_sub(const PolyFp& a, const PolyFp& b);
PolyFp fp_mul(const PolyFp& a, const PolyFp& b);
PolyFp fp_mod(const PolyFp& a, const PolyFp& m);   // m nonzero
PolyFp fp_divexact_by_gcd(const PolyFp& a, const PolyFp& b);  // a / b, remainder must vanish
PolyFp fp_gcd(PolyFp a, PolyFp b);                 // monic gcd
PolyFp fp_make_monic(const PolyFp& a);
PolyFp fp_derivative(const PolyFp& a);
PolyFp fp_powmod(const PolyFp& base, const Integer& e, const PolyFp& m);
uint64_t fp_eval(const PolyFp& f, uint64_t x);
std::string to_string(const PolyFp& f);            // polynomial in x

// Rabin irreducibility test over F_p.
bool fp_is_irreducible(const PolyFp& f);

// Number of distinct roots of f mod p, via gcd(f, x^p - x).
unsigned count_distinct_roots(const IntPoly& f, uint64_t p);

// True iff f mod p factors into deg(f) distinct linear factors.
bool splits_completely(const IntPoly& f, uint64_t p);

// Multiset of degrees of the irreducible factors of f mod p, ascending
// (the Frobenius cycle type). Empty result when f mod p is not squarefree.
using CycleType = std::vector<unsigned>;
std::optional<CycleType> cycle_type(const IntPoly& f, uint64_t p);

// The finite field F_{p^a}. Elements are canonical indices
// sum c_i p^i < q for the coefficient vector (c_0, ..., c_{a-1}) in the
// power basis of the modulus. Prime fields (a = 1) use direct modular
// arithmetic and admit large p; proper extensions build exp/log tables and
// require q <= 2^20.
class Fq {
 public:
  // Canonical modulus: the irreducible monic polynomial of degree a whose
  // index encoding is smallest.
  Fq(uint64_t p, unsigned a);
  Fq(uint64_t p, unsigned a, PolyFp modulus);

  uint64_t p() const { return p_; }
  unsigned deg() const { return a_; }
  uint64_t q() const { return q_; }
  const PolyFp& modulus() const { return mod_; }

  uint64_t zero() const { return 0; }
  uint64_t one() const { return q_ == 1 ? 0 : 1; }

  uint64_t add(uint64_t x, uint64_t y) const;
  uint64_t sub(uint64_t x, uint64_t y) const;
  uint64_t neg(uint64_t x) const;
  uint64_t mul(uint64_t x, uint64_t y) const;
  uint64_t inv(uint64_t x) const;  // x != 0
  uint64_t div(uint64_t x, uint64_t y) const { return mul(x, inv(y)); }
  uint64_t pow(uint64_t x, const Integer& e) const;  // negative e inverts

  uint64_t from_integer(const Integer& v) const;
  std::vector<uint64_t> coords(uint64_t x) const;
  uint64_t from_coords(const std::vector<uint64_t>& v) const;

  // Square-root bookkeeping. num_sqrt counts solutions of y^2 = u;
  // sqrt additionally returns the smallest solution index when one exists.
  unsigned num_sqrt(uint64_t u) const;
  std::pair<unsigned, uint64_t> sqrt(uint64_t u) const;

  // Characteristic-2 helpers.
  uint64_t trace_f2(uint64_t u) const;         // absolute trace to F_2
  uint64_t artin_preimage(uint64_t w) const;   // z with z^2 + z = w; trace(w) must be 0

  uint64_t generator() const { return gen_; }
  std::string elem_to_string(uint64_t x) const;

 private:
  void build_tables();
  void find_prime_generator();
  uint64_t mul_raw(uint64_t x, uint64_t y) const;  // table-free polynomial product

  uint64_t p_ = 0;
  unsigned a_ = 1;
  uint64_t q_ = 0;
  PolyFp mod_;
  uint64_t gen_ = 0;
  std::vector<uint32_t> exp_, log_;
  std::vector<uint8_t> trace_;
  std::vector<uint32_t> artin_;
  mutable std::vector<uint8_t> sqrt_count_;
  mutable std::vector<uint64_t> sqrt_val_;
};

// Lexicographically first irreducible monic polynomial of degree a over F_p
// under the ascending index encoding.
PolyFp find_irreducible(uint64_t p, unsigned a);

}  // namespace abelcert
