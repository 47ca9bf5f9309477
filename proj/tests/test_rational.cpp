#include <doctest.h>

#include <random>

#include "k3fm/rational.hpp"

using k3fm::BigInt;
using k3fm::Rational;

namespace {
std::mt19937_64 rng(0x5eed0002);
Rational random_rat() {
  std::uniform_int_distribution<long long> num(-5000, 5000);
  std::uniform_int_distribution<long long> den(1, 200);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}
}  // namespace

TEST_CASE("rational normalization") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(3), BigInt(-6)) == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational(BigInt(0), BigInt(-7)).den() == BigInt(1));
  CHECK(Rational(BigInt(-4), BigInt(2)).is_integer());
  CHECK(Rational(BigInt(-4), BigInt(2)).as_integer() == BigInt(-2));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(2)).as_integer(), std::domain_error);
}

TEST_CASE("rational field axioms on randoms") {
  for (int iter = 0; iter < 1500; ++iter) {
    Rational a = random_rat(), b = random_rat(), c = random_rat();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational ordering and floor") {
  CHECK(Rational(BigInt(1), BigInt(2)) < Rational(BigInt(2), BigInt(3)));
  CHECK(Rational(BigInt(-1), BigInt(2)) > Rational(BigInt(-2), BigInt(3)));
  CHECK(Rational(BigInt(7), BigInt(2)).floor() == BigInt(3));
  CHECK(Rational(BigInt(-7), BigInt(2)).floor() == BigInt(-4));
  CHECK(Rational(BigInt(-6), BigInt(2)).floor() == BigInt(-3));
  for (int iter = 0; iter < 500; ++iter) {
    Rational a = random_rat();
    BigInt f = a.floor();
    CHECK(Rational(f) <= a);
    CHECK(a < Rational(f + 1));
  }
}
