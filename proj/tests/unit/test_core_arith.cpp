#include <vector>

#include "abelcert/integer.hpp"
#include "doctest.h"

using namespace abelcert;

TEST_SUITE("core_arith") {

TEST_CASE("primality: small, composite with large factors, Mersenne") {
  CHECK(is_prime(Integer(2)));
  CHECK(is_prime(Integer(3)));
  CHECK_FALSE(is_prime(Integer(1)));
  CHECK_FALSE(is_prime(Integer(0)));
  CHECK(is_prime_u64(104729));  // 10000th prime
  // 1555201 = 97 * 16033: adjacent to the Selmer coefficient product power.
  CHECK_FALSE(is_prime(Integer(1555201)));
  CHECK(is_prime((Integer(1) << 61) - 1));
  CHECK_FALSE(is_prime((Integer(1) << 67) - 1));  // 193707721 * 761838257287
  CHECK(next_prime_u64(89) == 97);
  CHECK(next_prime_u64(2) == 3);
}

TEST_CASE("factorize: 432*60^2 and prime-power detection") {
  const Factorization f = factorize(Integer(1555200));
  REQUIRE(f.exponents.size() == 3);
  CHECK(f.exponents.at(Integer(2)) == 8);
  CHECK(f.exponents.at(Integer(3)) == 5);
  CHECK(f.exponents.at(Integer(5)) == 2);
  CHECK(f.value() == 1555200);
  CHECK_FALSE(f.is_prime_power());
  CHECK(factorize(Integer(243)).is_prime_power());
  CHECK(factorize(Integer(2) * 3 * 5 * 7 * 11 * 13).exponents.size() == 6);
}

TEST_CASE("valuation and euler_phi") {
  CHECK(valuation(Integer(1555200), Integer(2)) == 8);
  CHECK(valuation(Integer(1555200), Integer(3)) == 5);
  CHECK(valuation(Integer(7260), Integer(11)) == 2);
  CHECK(valuation(Integer(-24), Integer(2)) == 3);
  CHECK(euler_phi(Integer(1)) == 1);
  CHECK(euler_phi(Integer(100)) == 40);
  CHECK(euler_phi(Integer(97)) == 96);
}

TEST_CASE("cyclotomic ramification degree phi(p^{v_p(N)})") {
  CHECK(cyclotomic_ramification(Integer(3), Integer(18)) == 6);   // phi(9)
  CHECK(cyclotomic_ramification(Integer(2), Integer(18)) == 1);   // phi(2)
  CHECK(cyclotomic_ramification(Integer(5), Integer(18)) == 1);   // unramified
  CHECK(cyclotomic_ramification(Integer(5), Integer(250)) == 100);  // phi(125)
}

TEST_CASE("abelian ramification obstruction gcd(d, p(p-1)) = 1") {
  // Degree 3 at p = 2 mod 3: p(p-1) is prime to 3.
  for (uint64_t p : {2, 5, 11, 17, 23}) {
    CHECK(abelian_ramification_obstruction(Integer(3), Integer(p)));
  }
  CHECK_FALSE(abelian_ramification_obstruction(Integer(3), Integer(7)));   // 3 | 6
  CHECK_FALSE(abelian_ramification_obstruction(Integer(3), Integer(3)));   // 3 | 3
  CHECK(abelian_ramification_obstruction(Integer(5), Integer(2)));
  CHECK(abelian_ramification_obstruction(Integer(5), Integer(13)));
  CHECK_FALSE(abelian_ramification_obstruction(Integer(5), Integer(11)));  // 5 | 10
  CHECK_FALSE(abelian_ramification_obstruction(Integer(4), Integer(7)));   // 2 | 6
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(Integer(127), Integer(11)) == 10);
  CHECK(multiplicative_order(Integer(2), Integer(7)) == 3);
  CHECK(multiplicative_order(Integer(3), Integer(7)) == 6);
  CHECK(multiplicative_order(Integer(1), Integer(5)) == 1);
  CHECK_THROWS_AS(multiplicative_order(Integer(6), Integer(9)), InvalidInput);
}

TEST_CASE("crt_combine least nonnegative solution") {
  const auto [x, mod] = crt_combine({{Integer(2), Integer(3)}, {Integer(3), Integer(5)}});
  CHECK(x == 8);
  CHECK(mod == 15);
  const auto [y, mod2] = crt_combine(
      {{Integer(1), Integer(2)}, {Integer(2), Integer(3)}, {Integer(4), Integer(5)}});
  CHECK(y == 29);
  CHECK(mod2 == 30);
  // Modulus-1 congruences are absorbed.
  const auto [z, mod3] = crt_combine({{Integer(0), Integer(1)}, {Integer(4), Integer(7)}});
  CHECK(z == 4);
  CHECK(mod3 == 7);
}

TEST_CASE("crt_search walks the progression to the first admissible value") {
  // Smallest prime = 2 mod 3 and = 1 mod 4.
  const Integer p = crt_search({{Integer(2), Integer(3)}, {Integer(1), Integer(4)}},
                               [](const Integer& n) { return is_prime(n); });
  CHECK(p == 5);
  // An unsatisfiable predicate under a small limit raises a budget error.
  CHECK_THROWS_AS(crt_search({{Integer(0), Integer(2)}}, [](const Integer&) { return false; },
                             Integer(1000)),
                  BudgetError);
}

TEST_CASE("exponent pairs with |2^s - 3^t| = 1") {
  const auto sols = catalan_solutions(60, 40);
  const std::vector<std::pair<unsigned, unsigned>> expected{{1, 0}, {1, 1}, {2, 1}, {3, 2}};
  CHECK(sols == expected);
  // The box matters only through containment: nothing new appears later.
  CHECK(catalan_solutions(10, 10) == expected);
  CHECK(catalan_solutions(0, 0).empty());  // |1 - 1| = 0: (0,0) is not a solution
}

}  // TEST_SUITE
