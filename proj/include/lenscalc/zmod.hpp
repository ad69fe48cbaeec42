#pragma once

#include <cstdint>
#include <vector>

#include "lenscalc/errors.hpp"

namespace lenscalc {

using i64 = std::int64_t;

// Reduce a into [0, n). Works for negative a; n >= 1.
i64 mod_reduce(i64 a, i64 n);

// gcd(a mod n, n) == 1. Every residue is a unit mod 1.
bool is_unit(i64 a, i64 n);

// Product reduced into [0, n). Safe for n <= 2^31 - 1.
i64 mod_mul(i64 a, i64 b, i64 n);

// base^exp mod n, exp >= 0.
i64 mod_pow(i64 base, i64 exp, i64 n);

// A residue class a mod n, stored reduced into [0, n).
class Residue {
 public:
  Residue(i64 value, i64 modulus);

  i64 value() const { return value_; }
  i64 modulus() const { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  i64 value_;
  i64 modulus_;
};

// Multiplicative inverse of a mod n; throws NotAUnit if gcd(a, n) != 1.
Residue mod_inv(i64 a, i64 n);

// Units of Z/n in ascending order. units(1) = {0}.
std::vector<i64> units(i64 n);

// {x^2 mod n : gcd(x, n) = 1}, ascending.
std::vector<i64> unit_squares(i64 n);

// a mod n lies in unit_squares(n).
bool is_unit_square(i64 a, i64 n);

// m = t^2 for some integer t >= 0. Requires m >= 0.
bool is_perfect_square(i64 m);

}  // namespace lenscalc
