#include "lenscalc/zmod.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lenscalc {

namespace {

void require_modulus(i64 n) {
  if (n < 1) {
    throw InvalidArgument("modulus must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

i64 mod_reduce(i64 a, i64 n) {
  require_modulus(n);
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

bool is_unit(i64 a, i64 n) {
  require_modulus(n);
  return std::gcd(mod_reduce(a, n), n) == 1;
}

i64 mod_mul(i64 a, i64 b, i64 n) {
  return mod_reduce(mod_reduce(a, n) * mod_reduce(b, n), n);
}

i64 mod_pow(i64 base, i64 exp, i64 n) {
  require_modulus(n);
  if (exp < 0) {
    throw InvalidArgument("mod_pow exponent must be >= 0");
  }
  i64 result = mod_reduce(1, n);
  i64 b = mod_reduce(base, n);
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, b, n);
    b = mod_mul(b, b, n);
    exp >>= 1;
  }
  return result;
}

Residue::Residue(i64 value, i64 modulus) : modulus_(modulus) {
  value_ = mod_reduce(value, modulus);
}

Residue mod_inv(i64 a, i64 n) {
  require_modulus(n);
  i64 a0 = mod_reduce(a, n);
  if (std::gcd(a0, n) != 1) {
    throw NotAUnit(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  }
  if (n == 1) return Residue(0, 1);
  // Extended Euclid on (a0, n); old_s tracks the coefficient of a0.
  i64 old_r = a0, r = n;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return Residue(old_s, n);
}

std::vector<i64> units(i64 n) {
  require_modulus(n);
  if (n == 1) return {0};
  std::vector<i64> out;
  for (i64 x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) out.push_back(x);
  }
  return out;
}

std::vector<i64> unit_squares(i64 n) {
  std::vector<i64> squares;
  for (i64 x : units(n)) {
    squares.push_back(mod_mul(x, x, n));
  }
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  return squares;
}

bool is_unit_square(i64 a, i64 n) {
  i64 a0 = mod_reduce(a, n);
  if (!is_unit(a0, n)) return false;
  for (i64 x = 1; x <= n; ++x) {
    if (std::gcd(x, n) == 1 && mod_mul(x, x, n) == a0) return true;
  }
  return false;
}

bool is_perfect_square(i64 m) {
  if (m < 0) {
    throw InvalidArgument("is_perfect_square requires m >= 0");
  }
  i64 t = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(m))));
  for (i64 c = std::max<i64>(0, t - 2); c <= t + 2; ++c) {
    if (c * c == m) return true;
  }
  return false;
}

}  // namespace lenscalc
