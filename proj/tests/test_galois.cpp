#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ternions/galois.hpp"

using namespace ternions;

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(5));
  CHECK(is_prime(7));
  CHECK(is_prime(19));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(15));
  CHECK_FALSE(is_prime(7917));
}

TEST_CASE("composite moduli are rejected") {
  CHECK_THROWS_AS(Field(4), NonPrimeModulus);
  CHECK_THROWS_AS(Field(1), NonPrimeModulus);
  CHECK_THROWS_AS(Field(0), NonPrimeModulus);
  CHECK_THROWS_AS(Field(9), NonPrimeModulus);
}

TEST_CASE("small-field arithmetic") {
  const Field f2(2);
  CHECK(f2.add(1, 1) == 0);

  const Field f3(3);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.inv(2) == 2);

  const Field f5(5);
  CHECK(f5.inv(3) == 2);
}

TEST_CASE("inverse of zero is refused") {
  const Field f(5);
  CHECK_THROWS_AS(f.inv(0), ZeroInverse);
}

TEST_CASE("field axioms hold exhaustively") {
  for (unsigned q : {2u, 3u, 5u, 7u}) {
    const Field f(q);
    CAPTURE(q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(f.inv(a)) == a);
      }
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.add(a, b) < q);
        CHECK(f.mul(a, b) < q);
        for (unsigned c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}
