#include "doctest.h"

#include <random>

#include "ccg/prime_field.hpp"
#include "ccg/rational.hpp"
#include "ccg/valuation.hpp"

#include "oracles.hpp"

using namespace ccg;

TEST_CASE("vp on integers and rationals") {
  CHECK(vp(Rational(12), 2) == Valuation::finite(2));
  CHECK(vp(Rational(3, 4), 2) == Valuation::finite(-2));
  CHECK(vp(Rational(0), 5).is_infinite());
  CHECK(vp(Rational(-18), 3) == Valuation::finite(2));
  CHECK_THROWS_AS(vp(Rational(1), 4), std::invalid_argument);
}

TEST_CASE("valuation laws on random rationals") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (int trial = 0; trial < 200; ++trial) {
      Rational x = testing::random_rational(rng);
      Rational y = testing::random_rational(rng);
      if (x == 0 || y == 0) continue;
      CHECK(vp(x * y, p) == Valuation::finite(vp(x, p).value() + vp(y, p).value()));
      if (x + y != 0) {
        CHECK(min(vp(x, p), vp(y, p)) <= vp(x + y, p));
        if (!(vp(x, p) == vp(y, p))) CHECK(vp(x + y, p) == min(vp(x, p), vp(y, p)));
      }
    }
  }
}

TEST_CASE("reduce_mod_p basics") {
  CHECK(reduce_mod_p(Rational(7), 5).value == 2);
  CHECK(reduce_mod_p(Rational(1, 3), 2).value == 1);  // 3^{-1} = 1 mod 2: 3*1 = 3 = 1
  CHECK_THROWS_AS(reduce_mod_p(Rational(1, 2), 2), std::domain_error);
  CHECK(reduce_mod_p(Rational(-1), 7).value == 6);
}

TEST_CASE("reduce_mod_p is a ring homomorphism on p-adic integers") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2ull, 3ull, 7ull}) {
    PrimeField f(p);
    int done = 0;
    while (done < 150) {
      Rational x = testing::random_rational(rng);
      Rational y = testing::random_rational(rng);
      if (vp(x, p) < Valuation::finite(0) || vp(y, p) < Valuation::finite(0)) continue;
      ++done;
      CHECK(reduce_mod_p(x + y, p).value == f.add(reduce_mod_p(x, p).value, reduce_mod_p(y, p).value));
      CHECK(reduce_mod_p(x * y, p).value == f.mul(reduce_mod_p(x, p).value, reduce_mod_p(y, p).value));
    }
    CHECK(reduce_mod_p(Rational(0), p).value == 0);
    CHECK(reduce_mod_p(Rational(1), p).value == 1);
  }
}

TEST_CASE("field_inverse") {
  CHECK(field_inverse({5, 2}).value == 3);
  CHECK(field_inverse({13, 1}).value == 1);
  CHECK(field_inverse({7, 6}).value == 6);  // 36 = 1 mod 7
  CHECK_THROWS_AS(field_inverse({5, 0}), std::domain_error);
  PrimeField f(101);
  for (std::uint64_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("rational arithmetic is exact for 256-bit operands") {
  std::mt19937_64 rng(23);
  auto big = [&]() {
    BigInt v = 1;
    for (int i = 0; i < 4; ++i) v = (v << 64) + rng();
    return v;
  };
  for (int trial = 0; trial < 50; ++trial) {
    BigInt a = big(), b = big() + 1, c = big(), d = big() + 1;
    Rational x(a, b), y(c, d);
    CHECK(x + y == Rational(a * d + c * b, b * d));
    CHECK(x * y == Rational(a * c, b * d));
    CHECK((x + y) - y == x);
  }
}

TEST_CASE("rational string round-trip") {
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_to_string(Rational(-8, 2)) == "-4");
  CHECK(rational_from_string("6/8") == Rational(3, 4));
  CHECK(rational_from_string("-17") == Rational(-17));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("zebra"), std::invalid_argument);
}

TEST_CASE("canonical form invariants of Rational") {
  Rational r = make_rational(BigInt(6), BigInt(-8));
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 4);
  CHECK(rational_from_string("6/-8") == r);
  CHECK(rational_to_string(Rational(0)) == "0");
}

TEST_CASE("primality is deterministic and matches the definition") {
  for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime_u64(n) == testing::naive_is_prime(n));
  CHECK(is_prime_u64((1ull << 61) - 1));       // Mersenne prime
  CHECK_FALSE(is_prime_u64((1ull << 62) - 1));
  CHECK_THROWS_AS(PrimeField(10), std::invalid_argument);
}
