#pragma once

#include <string>
#include <vector>

#include "lenscalc/intmat.hpp"
#include "lenscalc/zmod.hpp"

namespace lenscalc {

// Finite presentation with relators as words. Letter +i (1-based) is the
// i-th generator, -i its inverse.
struct FinitePresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;

  int rank() const { return static_cast<int>(generators.size()); }

  // Throws InvalidArgument on empty or duplicate names, or letters out of
  // range.
  void validate() const;

  friend bool operator==(const FinitePresentation&, const FinitePresentation&) = default;
};

// HNN-style double of P = <g_1..g_k | r_1..r_m>: one x-copy and one y-copy
// of each generator (named g1, g2 suffix-wise) plus a stable letter t, with
// relators r_j(x), r_j(y), all commutators [x_i, y_j], and t x_i t^-1 =
// x_i y_i. Output has 2k + 1 generators and 2m + k^2 + k relators.
FinitePresentation sigma_presentation(const FinitePresentation& p);

// Abelianization of a presentation as coordinates on Z^k / relations:
// factors[i] is the order of the i-th coordinate (0 for a free Z factor),
// and generator j maps to column j of transform, read mod the factors.
struct AbelianizationMap {
  std::vector<i64> factors;  // length = rank of the presentation
  IntMatrix transform;       // rank x rank, unimodular

  std::vector<i64> torsion() const;  // factors > 1, in divisibility order
  int free_rank() const;
  std::vector<i64> image_of_generator(int gen_index) const;  // reduced coordinates
  bool generator_maps_to_zero(int gen_index) const;
};

AbelianizationMap abelianization(const FinitePresentation& p);

// The semidirect product Z_p x| Z_d with twist u: the Z_d generator acts on
// Z_p by multiplication by u, so (a1, b1) * (a2, b2) = (a1 + u^b1 a2, b1 + b2).
class MetacyclicGroup {
 public:
  struct Element {
    i64 a;  // in [0, p)
    i64 b;  // in [0, d)

    friend bool operator==(const Element&, const Element&) = default;
  };

  MetacyclicGroup(i64 p, i64 u, i64 d);

  i64 p() const { return p_; }
  i64 u() const { return u_; }
  i64 d() const { return d_; }
  i64 order() const { return p_ * d_; }
  bool is_abelian() const { return u_ == 1 % p_; }

  Element identity() const { return {0, 0}; }
  Element make(i64 a, i64 b) const;
  Element mul(const Element& lhs, const Element& rhs) const;
  Element inverse(const Element& g) const;
  std::vector<Element> elements() const;

 private:
  i64 p_;
  i64 u_;
  i64 d_;
};

// Validates gcd(u, p) = 1 and u^d = 1 mod p (throws IncompatibleTwist).
MetacyclicGroup semidirect_group(i64 p, i64 u, i64 d);

i64 element_order(const MetacyclicGroup& g, const MetacyclicGroup::Element& e);

// H_k of the cyclic group of order n: Z in degree 0, Z/n in odd degrees,
// trivial in positive even degrees.
struct CyclicHomology {
  enum class Kind { Integers, Cyclic, Trivial };

  Kind kind;
  i64 modulus;  // n when Cyclic, 0 otherwise

  friend bool operator==(const CyclicHomology&, const CyclicHomology&) = default;
};

CyclicHomology cyclic_homology(i64 n, i64 k);

// Multiplier induced on H_k(Z/n) by the power map x -> x^u: for odd k this
// is multiplication by u^((k+1)/2) mod n. Throws EvenDegree for even k and
// NotAUnit when gcd(u, n) != 1.
i64 power_map_action_on_h(i64 n, i64 u, i64 k);

// In Z_p x| Z_d with twist u (p prime), the obstruction class in degree 3
// restricted from the cyclic part dies iff u^2 != 1 mod p.
bool i3_trivial_in_semidirect(i64 p, i64 u, i64 d);

}  // namespace lenscalc
