#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lenscalc/zmod.hpp"

namespace lenscalc {

// The lens space L(n, q): n >= 2, q a unit mod n stored reduced into [1, n).
class LensSpace {
 public:
  LensSpace(i64 n, i64 q);

  i64 n() const { return n_; }
  i64 q() const { return q_; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  i64 n_;
  i64 q_;
};

std::string to_string(const LensSpace& l);
std::ostream& operator<<(std::ostream& os, const LensSpace& l);

// L(n, q) with orientation reversed is L(n, n - q).
LensSpace reverse_orientation(const LensSpace& l);

// Representative with q' = min(q, q^-1 mod n); L(n, q) and L(n, q^-1) are
// the same space up to orientation-preserving homeomorphism.
LensSpace canonical_form(const LensSpace& l);

// Residues mod n realized as degrees of maps between two lens spaces with
// the same fundamental-group order n.
struct DegreeSet {
  i64 modulus;
  std::vector<i64> residues;  // ascending, reduced into [0, modulus)

  bool contains(i64 d) const;

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;
};

// D(from, to) = {q q' x^2 mod n : gcd(x, n) = 1}. Degrees of maps are well
// defined mod n only; throws ModulusMismatch if the orders differ.
DegreeSet degree_set(const LensSpace& from, const LensSpace& to);

// d mod n lies in degree_set(from, to).
bool contains_degree(const LensSpace& from, const LensSpace& to, i64 d);

// Witness for an orientation-preserving homotopy equivalence: units x1, x2
// with q * x1^2 = q' * x2^2 mod n, equivalently 1 in D(from, to).
struct HomotopyEquivalence {
  bool equivalent;
  i64 x1;  // 0 when not equivalent
  i64 x2;
};

// Searches x1 ascending, then x2 ascending over units in [1, n). Spaces with
// different n are never equivalent (no throw).
HomotopyEquivalence homotopy_equivalent_oriented(const LensSpace& a, const LensSpace& b);

}  // namespace lenscalc
