#include "lenscalc/lens.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace lenscalc {

LensSpace::LensSpace(i64 n, i64 q) : n_(n) {
  if (n < 2) {
    throw InvalidArgument("lens space requires n >= 2, got n = " + std::to_string(n));
  }
  q_ = mod_reduce(q, n);
  if (std::gcd(q_, n) != 1) {
    throw NotAUnit("q = " + std::to_string(q) + " is not a unit mod " + std::to_string(n));
  }
}

std::string to_string(const LensSpace& l) {
  std::ostringstream os;
  os << "L(" << l.n() << "," << l.q() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LensSpace& l) {
  return os << to_string(l);
}

LensSpace reverse_orientation(const LensSpace& l) {
  return LensSpace(l.n(), l.n() - l.q());
}

LensSpace canonical_form(const LensSpace& l) {
  i64 qinv = mod_inv(l.q(), l.n()).value();
  return LensSpace(l.n(), std::min(l.q(), qinv));
}

bool DegreeSet::contains(i64 d) const {
  return std::binary_search(residues.begin(), residues.end(), mod_reduce(d, modulus));
}

DegreeSet degree_set(const LensSpace& from, const LensSpace& to) {
  if (from.n() != to.n()) {
    throw ModulusMismatch("degree sets need equal orders, got " + std::to_string(from.n()) +
                          " and " + std::to_string(to.n()));
  }
  i64 n = from.n();
  i64 qq = mod_mul(from.q(), to.q(), n);
  std::vector<i64> residues;
  for (i64 s : unit_squares(n)) {
    residues.push_back(mod_mul(qq, s, n));
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  return DegreeSet{n, std::move(residues)};
}

bool contains_degree(const LensSpace& from, const LensSpace& to, i64 d) {
  return degree_set(from, to).contains(d);
}

HomotopyEquivalence homotopy_equivalent_oriented(const LensSpace& a, const LensSpace& b) {
  if (a.n() != b.n()) return {false, 0, 0};
  i64 n = a.n();
  for (i64 x1 = 1; x1 < n; ++x1) {
    if (!is_unit(x1, n)) continue;
    i64 lhs = mod_mul(a.q(), mod_mul(x1, x1, n), n);
    for (i64 x2 = 1; x2 < n; ++x2) {
      if (!is_unit(x2, n)) continue;
      if (lhs == mod_mul(b.q(), mod_mul(x2, x2, n), n)) {
        return {true, x1, x2};
      }
    }
  }
  return {false, 0, 0};
}

}  // namespace lenscalc
