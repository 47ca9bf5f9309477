#include <doctest.h>

#include <random>

#include "k3fm/lattice.hpp"

using namespace k3fm;

namespace {

LatticePtr generic_lattice() {
  return PicardLattice::create({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(-12)}}, {"H", "l"});
}

std::mt19937_64 rng(0x5eed0003);

}  // namespace

TEST_CASE("lattice validation accepts the generic reflexive gram") {
  auto lat = generic_lattice();
  CHECK(lat->rank() == 2);
  CHECK(lat->signature().positive == 1);
  CHECK(lat->signature().negative == 1);
  CHECK(lat->signature().zero == 0);
}

TEST_CASE("lattice validation rejects bad grams") {
  // two non-negative eigenvalue signs
  CHECK_THROWS_AS(PicardLattice::create({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(2)}}),
                  LatticeError);
  // negative definite
  CHECK_THROWS_AS(PicardLattice::create({{BigInt(-2), BigInt(0)}, {BigInt(0), BigInt(-2)}}),
                  LatticeError);
  // degenerate
  CHECK_THROWS_AS(PicardLattice::create({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(0)}}),
                  LatticeError);
  // odd diagonal
  CHECK_THROWS_AS(PicardLattice::create({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(-3)}}),
                  LatticeError);
  // asymmetric
  CHECK_THROWS_AS(PicardLattice::create({{BigInt(2), BigInt(1)}, {BigInt(0), BigInt(-2)}}),
                  LatticeError);
  // hyperbolic plane passes: even, signature (1,1)
  CHECK_NOTHROW(PicardLattice::create({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}));
}

TEST_CASE("signature diagonalization counts Sylvester inertia exactly") {
  auto sig = [](std::vector<std::vector<long long>> m) {
    std::vector<std::vector<Rational>> work(m.size(), std::vector<Rational>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j) work[i][j] = Rational(BigInt(m[i][j]));
    return quadratic_form_signature(std::move(work));
  };
  auto s1 = sig({{0, 1}, {1, 0}});
  CHECK(s1.positive == 1);
  CHECK(s1.negative == 1);
  auto s2 = sig({{0, 0}, {0, 0}});
  CHECK(s2.zero == 2);
  auto s3 = sig({{2, 3}, {3, 4}});  // det = -1 < 0
  CHECK(s3.positive == 1);
  CHECK(s3.negative == 1);
  auto s4 = sig({{1, 2, 0}, {2, 4, 0}, {0, 0, -5}});  // rank 2, one zero
  CHECK(s4.zero == 1);
  CHECK(s4.positive == 1);
  CHECK(s4.negative == 1);
  // random congruence A -> P^T A P preserves inertia (Sylvester's law)
  for (int iter = 0; iter < 100; ++iter) {
    std::uniform_int_distribution<long long> entry(-4, 4);
    std::vector<std::vector<long long>> a(3, std::vector<long long>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) a[i][j] = a[j][i] = entry(rng);
    std::vector<std::vector<long long>> p(3, std::vector<long long>(3));
    do {
      for (auto& row : p)
        for (auto& v : row) v = entry(rng);
    } while (p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1]) -
                 p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0]) +
                 p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0]) ==
             0);
    std::vector<std::vector<long long>> b(3, std::vector<long long>(3, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) b[i][j] += p[k][i] * a[k][l] * p[l][j];
    auto sa = sig(a), sb = sig(b);
    CHECK(sa.positive == sb.positive);
    CHECK(sa.negative == sb.negative);
    CHECK(sa.zero == sb.zero);
  }
}

TEST_CASE("intersection numbers on the generic lattice") {
  auto lat = generic_lattice();
  DivisorClass h(lat, {BigInt(1), BigInt(0)});
  DivisorClass l(lat, {BigInt(0), BigInt(1)});
  DivisorClass mixed(lat, {BigInt(1), BigInt(1)});
  CHECK(intersect(h, h) == BigInt(2));
  CHECK(intersect(h, l) == BigInt(0));
  CHECK(intersect(mixed, mixed) == BigInt(-10));
  CHECK(self_intersection(l) == BigInt(-12));
}

TEST_CASE("lattice identity is by handle, not by structure") {
  auto a = generic_lattice();
  auto b = generic_lattice();  // structurally equal, distinct handle
  DivisorClass da(a, {BigInt(1), BigInt(0)});
  DivisorClass db(b, {BigInt(1), BigInt(0)});
  CHECK_THROWS_AS(intersect(da, db), LatticeMismatchError);
  CHECK_THROWS_AS(da + db, LatticeMismatchError);
  CHECK_THROWS_AS((void)(da == db), LatticeMismatchError);
}

TEST_CASE("divisor arithmetic") {
  auto lat = generic_lattice();
  DivisorClass h(lat, {BigInt(1), BigInt(0)});
  DivisorClass l(lat, {BigInt(0), BigInt(1)});
  CHECK((h + l).coords() == std::vector<BigInt>{BigInt(1), BigInt(1)});
  CHECK((BigInt(3) * h - l).coords() == std::vector<BigInt>{BigInt(3), BigInt(-1)});
  CHECK((-h).coords() == std::vector<BigInt>{BigInt(-1), BigInt(0)});
  CHECK(DivisorClass::zero(lat).is_zero());
  CHECK_THROWS_AS(DivisorClass(lat, {BigInt(1)}), LatticeError);
}
