#include "fgl/rational.hpp"

#include <stdexcept>

#include "doctest.h"
#include "fgl/rng.hpp"

using fgl::BigUint;
using fgl::Rational;

TEST_CASE("parse") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("1").str() == "1/1");
  CHECK(Rational::parse("0").str() == "0/1");
  CHECK(Rational::parse("007/014").str() == "1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("-1/4"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1/2"), std::invalid_argument);
}

TEST_CASE("reduction and equality") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(0, 7).den().is_one());
  CHECK(Rational(5, 5).is_one());
  CHECK_THROWS_AS(Rational(BigUint(1), BigUint(0)), std::invalid_argument);
}

TEST_CASE("arithmetic identities") {
  fgl::SplitMix64 rng(404);
  for (int i = 0; i < 3000; ++i) {
    Rational a(rng.next() % 50, 1 + rng.next() % 30);
    Rational b(rng.next() % 50, 1 + rng.next() % 30);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a * b == b * a);
    CHECK((a + b) == (b + a));
    CHECK((a <= b) == !(a > b));
  }
}

TEST_CASE("complement stays exact") {
  Rational one(1);
  CHECK(one - Rational(1, 3) == Rational(2, 3));
  CHECK(one - Rational(0) == one);
  CHECK(one - one == Rational(0));
  CHECK_THROWS_AS(Rational(1, 3) - Rational(1, 2), std::invalid_argument);
}

TEST_CASE("sum of uniform entries is exactly one") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    Rational sum;
    for (std::uint64_t i = 0; i < n; ++i) sum += Rational(1, n);
    CHECK(sum == Rational(1));
  }
}

TEST_CASE("to_double") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(2, 3).to_double() == doctest::Approx(2.0 / 3.0));
}
