#include "lenscalc/actions.hpp"

#include <string>

namespace lenscalc {

WeightedCp2Action::WeightedCp2Action(i64 n, std::array<i64, 3> weights) : n_(n) {
  if (n < 2) {
    throw InvalidArgument("weighted action requires n >= 2, got n = " + std::to_string(n));
  }
  for (int i = 0; i < 3; ++i) weights_[i] = mod_reduce(weights[i], n);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!is_unit(weights_[i] - weights_[j], n)) {
        throw NonIsolated("weights " + std::to_string(weights[i]) + " and " +
                          std::to_string(weights[j]) + " differ by a non-unit mod " +
                          std::to_string(n) + "; fixed points are not isolated");
      }
    }
  }
}

std::vector<LensSpace> fixed_point_types(const WeightedCp2Action& action) {
  i64 n = action.n();
  const std::array<i64, 3>& a = action.weights();
  std::vector<LensSpace> out;
  out.reserve(3);
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    int k = (i + 2) % 3;
    i64 w1 = mod_reduce(a[j] - a[i], n);
    i64 w2 = mod_reduce(a[k] - a[i], n);
    out.emplace_back(n, mod_mul(w2, mod_inv(w1, n).value(), n));
  }
  return out;
}

BoundaryProblem orbifold_boundary(const WeightedCp2Action& action) {
  std::vector<i64> q;
  q.reserve(3);
  for (const LensSpace& link : fixed_point_types(action)) {
    q.push_back(reverse_orientation(link).q());
  }
  return BoundaryProblem(action.n(), std::move(q));
}

CobordismWitness verify_action_consistency(const WeightedCp2Action& action) {
  std::optional<CobordismWitness> witness = pi1_cobound(orbifold_boundary(action));
  if (!witness) {
    throw TheoremViolation("orbifold boundary of a weighted action reported as non-bounding");
  }
  return *witness;
}

}  // namespace lenscalc
