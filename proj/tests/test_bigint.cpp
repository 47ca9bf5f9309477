#include <doctest.h>

#include <random>
#include <string>

#include "k3fm/bigint.hpp"

using k3fm::BigInt;

namespace {

std::mt19937_64 rng(0x5eed0001);

BigInt random_wide(int max_limbs) {
  std::uniform_int_distribution<int> limbs(1, max_limbs);
  std::uniform_int_distribution<uint32_t> limb;
  std::string hex;
  int n = limbs(rng);
  BigInt acc;
  for (int i = 0; i < n; ++i) acc = (acc << 32) + BigInt(static_cast<unsigned long long>(limb(rng)));
  if (rng() & 1) acc = -acc;
  return acc;
}

long long random_ll() {
  std::uniform_int_distribution<long long> d(-2000000000007LL, 2000000000007LL);
  return d(rng);
}

}  // namespace

TEST_CASE("bigint round-trips decimal strings") {
  for (const char* s : {"0", "1", "-1", "42", "-360287970189639680",
                        "123456789012345678901234567890123456789",
                        "-999999999999999999999999999999999999999999"}) {
    CHECK(BigInt(std::string_view(s)).to_string() == s);
  }
  CHECK(BigInt("007").to_string() == "7");
  CHECK(BigInt("+5").to_string() == "5");
  CHECK(BigInt("-0").to_string() == "0");
  CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt("12x"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt("-"), std::invalid_argument);
}

TEST_CASE("bigint agrees with native arithmetic on bounded values") {
  for (int iter = 0; iter < 4000; ++iter) {
    long long a = random_ll(), b = random_ll();
    __int128 wa = a, wb = b;
    CHECK(BigInt(a) + BigInt(b) == BigInt(static_cast<long long>(wa + wb)));
    CHECK(BigInt(a) - BigInt(b) == BigInt(static_cast<long long>(wa - wb)));
    __int128 prod = wa * wb;
    BigInt expected = (BigInt(a) == BigInt(0) || b == 0)
                          ? BigInt(0)
                          : BigInt(static_cast<long long>(prod / 1000000000)) * BigInt(1000000000) +
                                BigInt(static_cast<long long>(prod % 1000000000));
    CHECK(BigInt(a) * BigInt(b) == expected);
    if (b != 0) {
      CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
      CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
    }
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
    CHECK((BigInt(a) == BigInt(b)) == (a == b));
  }
}

TEST_CASE("bigint divmod identity on wide values") {
  for (int iter = 0; iter < 2000; ++iter) {
    BigInt a = random_wide(6);
    BigInt b = random_wide(3);
    if (b.is_zero()) b = BigInt(1);
    auto [q, r] = BigInt::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
  CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("bigint division exercises the add-back and normalization paths") {
  BigInt base32 = BigInt(1) << 32;
  // divisor with a maximal leading limb and a dividend crafted to force
  // quotient-digit correction
  BigInt v = (base32 - 1) * base32 + (base32 - 1);
  BigInt u = v * v + (v - 1);
  auto [q, r] = BigInt::divmod(u, v);
  CHECK(q == v);
  CHECK(r == v - 1);
  // power-of-base boundaries
  for (int k : {32, 63, 64, 65, 127, 128}) {
    BigInt p = BigInt(1) << static_cast<size_t>(k);
    CHECK(p / p == BigInt(1));
    CHECK((p + 1) / p == BigInt(1));
    CHECK((p - 1) / p == BigInt(0));
    CHECK((p * p) / p == p);
  }
}

TEST_CASE("bigint floordiv semantics") {
  CHECK(BigInt::floordiv(7, 2) == BigInt(3));
  CHECK(BigInt::floordiv(-7, 2) == BigInt(-4));
  CHECK(BigInt::floordiv(7, -2) == BigInt(-4));
  CHECK(BigInt::floordiv(-7, -2) == BigInt(3));
  CHECK(BigInt::floordiv(-8, 2) == BigInt(-4));
  for (int iter = 0; iter < 500; ++iter) {
    BigInt a = random_wide(3), b = random_wide(2);
    if (b.is_zero()) continue;
    // the floor remainder a - qb lies in [0, b) for b > 0 and (b, 0] for b < 0
    BigInt rem = a - BigInt::floordiv(a, b) * b;
    CHECK(rem.abs() < b.abs());
    if (!rem.is_zero()) CHECK(rem.sign() == b.sign());
  }
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(0, 0) == BigInt(0));
  CHECK(BigInt::gcd(0, 5) == BigInt(5));
  CHECK(BigInt::gcd(-4, 6) == BigInt(2));
  CHECK(BigInt::gcd(BigInt("123456789123456789"), BigInt("987654321987654321")) ==
        BigInt("9000000009"));
  for (int iter = 0; iter < 300; ++iter) {
    BigInt a = random_wide(3), b = random_wide(3), c = random_wide(2).abs() + 1;
    BigInt g = BigInt::gcd(a * c, b * c);
    CHECK((g % c).is_zero());
    if (!a.is_zero()) CHECK(((a * c) % g).is_zero());
  }
}

TEST_CASE("bigint isqrt brackets the square root") {
  CHECK(BigInt::isqrt(0) == BigInt(0));
  CHECK(BigInt::isqrt(1) == BigInt(1));
  CHECK(BigInt::isqrt(3) == BigInt(1));
  CHECK(BigInt::isqrt(4) == BigInt(2));
  CHECK(BigInt::isqrt(99) == BigInt(9));
  CHECK_THROWS_AS(BigInt::isqrt(-1), std::domain_error);
  for (int iter = 0; iter < 400; ++iter) {
    BigInt n = random_wide(4).abs();
    BigInt s = BigInt::isqrt(n);
    CHECK(s * s <= n);
    CHECK((s + 1) * (s + 1) > n);
  }
  for (int iter = 0; iter < 100; ++iter) {  // exact squares and off-by-one values
    BigInt m = random_wide(2).abs();
    CHECK(BigInt::isqrt(m * m) == m);
    if (!m.is_zero()) CHECK(BigInt::isqrt(m * m - 1) == m - 1);
    CHECK(BigInt::isqrt(m * m + 1) == m);
  }
}

TEST_CASE("bigint shifts and parity") {
  CHECK((BigInt(1) << 100).to_string() == "1267650600228229401496703205376");
  CHECK(((BigInt(1) << 100) >> 100) == BigInt(1));
  CHECK(BigInt(0).is_even());
  CHECK(BigInt(-2).is_even());
  CHECK(!BigInt(7).is_even());
  for (int iter = 0; iter < 200; ++iter) {
    BigInt a = random_wide(3).abs();
    size_t k = rng() % 90;
    CHECK(((a << k) >> k) == a);
    CHECK((a << k) == a * (BigInt(1) << k));
  }
}

TEST_CASE("bigint long long bridging") {
  CHECK(BigInt(-9223372036854775807LL - 1).to_string() == "-9223372036854775808");
  CHECK(BigInt("-9223372036854775808").to_longlong() == -9223372036854775807LL - 1);
  CHECK(BigInt("9223372036854775807").fits_longlong());
  CHECK(!BigInt("9223372036854775808").fits_longlong());
  CHECK(BigInt("-9223372036854775809").fits_longlong() == false);
}
