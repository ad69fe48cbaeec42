#pragma once

#include <array>
#include <vector>

#include "lenscalc/cobordism.hpp"
#include "lenscalc/lens.hpp"
#include "lenscalc/zmod.hpp"

namespace lenscalc {

// The Z_n action on CP^2 given by [z_1 : z_2 : z_3] -> [w^a_1 z_1 : w^a_2 z_2
// : w^a_3 z_3] for a primitive n-th root of unity w. Isolated fixed points
// require all pairwise weight differences to be units mod n.
class WeightedCp2Action {
 public:
  WeightedCp2Action(i64 n, std::array<i64, 3> weights);

  i64 n() const { return n_; }
  const std::array<i64, 3>& weights() const { return weights_; }

  friend bool operator==(const WeightedCp2Action&, const WeightedCp2Action&) = default;

 private:
  i64 n_;
  std::array<i64, 3> weights_;
};

// Local model at the fixed point P_i (coordinate i nonzero): rotation
// weights (a_j - a_i, a_k - a_i) with (j, k) following i cyclically, giving
// the lens space L(n, w_2 w_1^-1) as the link.
std::vector<LensSpace> fixed_point_types(const WeightedCp2Action& action);

// Boundary of the orbit-space complement of the fixed points: the links
// with reversed orientation, as a boundary problem over the same n.
BoundaryProblem orbifold_boundary(const WeightedCp2Action& action);

// The orbifold boundary always bounds with isomorphic fundamental groups
// (the complement itself is such a cobordism); returns the solver's witness
// and throws TheoremViolation if the solver disagrees.
CobordismWitness verify_action_consistency(const WeightedCp2Action& action);

}  // namespace lenscalc
