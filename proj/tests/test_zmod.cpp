#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "lenscalc/zmod.hpp"

using namespace lenscalc;

namespace {

bool small_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("zmod") {

TEST_CASE("mod_reduce normalizes into [0, n)") {
  CHECK(mod_reduce(7, 5) == 2);
  CHECK(mod_reduce(5, 5) == 0);
  CHECK(mod_reduce(-1, 5) == 4);
  CHECK(mod_reduce(-10, 5) == 0);
  CHECK(mod_reduce(-13, 5) == 2);
  CHECK(mod_reduce(123, 1) == 0);
  CHECK_THROWS_AS(mod_reduce(3, 0), InvalidArgument);
  CHECK_THROWS_AS(mod_reduce(3, -2), InvalidArgument);
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(2, 10, 1000) == 24);
  CHECK(mod_pow(3, 0, 7) == 1);
  CHECK(mod_pow(0, 0, 5) == 1);
  CHECK(mod_pow(5, 3, 7) == 6);
  CHECK(mod_pow(-1, 3, 7) == 6);
  CHECK(mod_pow(10, 8, 1) == 0);
  CHECK_THROWS_AS(mod_pow(2, -1, 7), InvalidArgument);

  std::mt19937 rng(1101);
  for (int trial = 0; trial < 200; ++trial) {
    i64 n = std::uniform_int_distribution<i64>(1, 50)(rng);
    i64 b = std::uniform_int_distribution<i64>(-100, 100)(rng);
    i64 e = std::uniform_int_distribution<i64>(0, 12)(rng);
    i64 expected = mod_reduce(1, n);
    for (i64 i = 0; i < e; ++i) expected = mod_mul(expected, b, n);
    CHECK(mod_pow(b, e, n) == expected);
  }
}

TEST_CASE("Residue reduces on construction") {
  Residue r(-3, 7);
  CHECK(r.value() == 4);
  CHECK(r.modulus() == 7);
  CHECK(Residue(4, 7) == Residue(-3, 7));
  CHECK(Residue(1, 5) != Residue(1, 7));
  CHECK(Residue(6, 5) != Residue(6, 7));
  CHECK_THROWS_AS(Residue(1, 0), InvalidArgument);
}

TEST_CASE("mod_inv matches exhaustive search") {
  CHECK(mod_inv(3, 7).value() == 5);
  CHECK(mod_inv(2, 5).value() == 3);
  CHECK(mod_inv(1, 2).value() == 1);
  CHECK(mod_inv(0, 1).value() == 0);
  CHECK(mod_inv(-2, 5).value() == 2);  // -2 = 3, 3 * 2 = 6 = 1

  for (i64 n = 1; n <= 60; ++n) {
    for (i64 a = 0; a < n; ++a) {
      if (std::gcd(a, n) != 1) {
        CHECK_THROWS_AS(mod_inv(a, n), NotAUnit);
        continue;
      }
      i64 expected = -1;
      for (i64 x = 0; x < n; ++x) {
        if (mod_mul(a, x, n) == mod_reduce(1, n)) {
          expected = x;
          break;
        }
      }
      CHECK(mod_inv(a, n).value() == expected);
    }
  }
}

TEST_CASE("inversion is an involution") {
  for (i64 n = 2; n <= 150; ++n) {
    for (i64 a : units(n)) {
      i64 inv = mod_inv(a, n).value();
      CHECK(mod_mul(a, inv, n) == 1);
      CHECK(mod_inv(inv, n).value() == a);
    }
  }
}

TEST_CASE("units are the coprime residues in order") {
  CHECK(units(1) == std::vector<i64>{0});
  CHECK(units(2) == std::vector<i64>{1});
  CHECK(units(6) == std::vector<i64>{1, 5});
  CHECK(units(10) == std::vector<i64>{1, 3, 7, 9});
  for (i64 n = 2; n <= 80; ++n) {
    std::vector<i64> us = units(n);
    for (size_t i = 1; i < us.size(); ++i) CHECK(us[i - 1] < us[i]);
    for (i64 a : us) CHECK(is_unit(a, n));
  }
}

TEST_CASE("unit_squares frozen values") {
  CHECK(unit_squares(1) == std::vector<i64>{0});
  CHECK(unit_squares(2) == std::vector<i64>{1});
  CHECK(unit_squares(5) == std::vector<i64>{1, 4});
  CHECK(unit_squares(7) == std::vector<i64>{1, 2, 4});
  CHECK(unit_squares(8) == std::vector<i64>{1});
  CHECK(unit_squares(9) == std::vector<i64>{1, 4, 7});
  CHECK(unit_squares(12) == std::vector<i64>{1});
}

TEST_CASE("unit squares form a subgroup of the units") {
  for (i64 n = 2; n <= 60; ++n) {
    std::vector<i64> sq = unit_squares(n);
    std::set<i64> sqset(sq.begin(), sq.end());
    CHECK(sqset.count(1) == 1);
    for (i64 a : sq) {
      CHECK(is_unit(a, n));
      for (i64 b : sq) CHECK(sqset.count(mod_mul(a, b, n)) == 1);
      CHECK(sqset.count(mod_inv(a, n).value()) == 1);
    }
  }
}

TEST_CASE("odd prime p has (p - 1) / 2 unit squares") {
  for (i64 p = 3; p <= 199; ++p) {
    if (!small_prime(p)) continue;
    CHECK(unit_squares(p).size() == static_cast<size_t>((p - 1) / 2));
  }
}

TEST_CASE("is_unit_square agrees with set membership") {
  for (i64 n = 2; n <= 40; ++n) {
    std::vector<i64> sq = unit_squares(n);
    std::set<i64> sqset(sq.begin(), sq.end());
    for (i64 a = -5; a < n + 5; ++a) {
      CHECK(is_unit_square(a, n) == (sqset.count(mod_reduce(a, n)) == 1));
    }
  }
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(1));
  CHECK(is_perfect_square(4));
  CHECK(is_perfect_square(9));
  CHECK_FALSE(is_perfect_square(2));
  CHECK_FALSE(is_perfect_square(5));
  CHECK(is_perfect_square(111111LL * 111111LL));
  CHECK_FALSE(is_perfect_square(111111LL * 111111LL + 1));
  CHECK_FALSE(is_perfect_square(111111LL * 111111LL - 1));
  CHECK_THROWS_AS(is_perfect_square(-4), InvalidArgument);

  for (i64 m = 0; m <= 2000; ++m) {
    bool expected = false;
    for (i64 t = 0; t * t <= m; ++t) {
      if (t * t == m) expected = true;
    }
    CHECK(is_perfect_square(m) == expected);
  }
}

}  // TEST_SUITE
