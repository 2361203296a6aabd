#include "doctest.h"
#include "oracles.hpp"
#include "polar/errors.hpp"
#include "polar/field.hpp"
#include "polar/random.hpp"

using namespace polar;

TEST_CASE("inverse of small elements") {
  PrimeField k;
  CHECK(k.inv(k.one()) == k.one());
  CHECK(k.inv(k.from_uint(2)).v == 5000000010ULL);
  CHECK_THROWS_AS(k.inv(k.zero()), DivisionByZero);
}

TEST_CASE("inverse agrees with extended Euclid") {
  PrimeField k;
  SplitMix64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    Fq a = random_nonzero(rng, k);
    Fq b = k.inv(a);
    CHECK(b.v == oracle::ext_euclid_inverse(a.v, k.modulus()));
    CHECK(k.mul(a, b) == k.one());
  }
}

TEST_CASE("field axioms hold exhaustively over F_7") {
  PrimeField k(7);
  for (std::uint64_t a = 0; a < 7; ++a)
    for (std::uint64_t b = 0; b < 7; ++b) {
      Fq x{a}, y{b};
      CHECK(k.add(x, y) == k.add(y, x));
      CHECK(k.mul(x, y) == k.mul(y, x));
      CHECK(k.sub(k.add(x, y), y) == x);
      if (b != 0) CHECK(k.mul(k.div(x, y), y) == x);
      for (std::uint64_t c = 0; c < 7; ++c) {
        Fq z{c};
        CHECK(k.mul(x, k.add(y, z)) == k.add(k.mul(x, y), k.mul(x, z)));
        CHECK(k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z)));
        CHECK(k.add(k.add(x, y), z) == k.add(x, k.add(y, z)));
      }
    }
}

TEST_CASE("moduli are validated") {
  CHECK(is_prime_u64(10000000019ULL));
  CHECK_FALSE(is_prime_u64(10000000017ULL));
  CHECK_THROWS_AS(PrimeField(15), PreconditionError);
  CHECK_THROWS_AS(PrimeField(2), PreconditionError);
  CHECK_NOTHROW(PrimeField(7));
}

TEST_CASE("signed conversions") {
  PrimeField k;
  CHECK(k.from_int(-3).v == k.modulus() - 3);
  CHECK(k.to_signed(k.from_int(-3)) == -3);
  CHECK(k.to_signed(k.from_int(INT64_MIN)) == k.to_signed(k.neg(k.from_uint(9223372036854775808ULL))));
  CHECK(k.pow(k.from_uint(3), k.modulus() - 1) == k.one());
}
