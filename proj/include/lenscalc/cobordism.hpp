#pragma once

#include <optional>
#include <vector>

#include "lenscalc/lens.hpp"
#include "lenscalc/zmod.hpp"

namespace lenscalc {

// Disjoint union of lens spaces L(n, q_1), ..., L(n, q_m) considered as a
// candidate boundary; all q_i are units mod n, stored reduced into [1, n).
class BoundaryProblem {
 public:
  BoundaryProblem(i64 n, std::vector<i64> q);

  i64 n() const { return n_; }
  const std::vector<i64>& residues() const { return q_; }
  int terms() const { return static_cast<int>(q_.size()); }

  friend bool operator==(const BoundaryProblem&, const BoundaryProblem&) = default;

 private:
  i64 n_;
  std::vector<i64> q_;
};

// Certificate that the union bounds a 4-manifold whose fundamental group
// restricts to an isomorphism on each boundary component: units k_i with
// sum q_i k_i^2 = 0 mod n, plus the induced degree data. For each i,
// degrees[i] = q_i k_i^2 + x[i] * n and the degrees sum to zero.
struct CobordismWitness {
  std::vector<i64> k;
  std::vector<i64> x;
  std::vector<i64> degrees;

  friend bool operator==(const CobordismWitness&, const CobordismWitness&) = default;
};

// True when the witness data is internally consistent for the problem.
bool witness_satisfies(const BoundaryProblem& problem, const CobordismWitness& witness);

// Dynamic program over partial sums mod n; returns the witness that takes
// the smallest unit k_i at each step, or nullopt when no witness exists.
std::optional<CobordismWitness> pi1_cobound(const BoundaryProblem& problem);

// Degrees induced by a given tuple of units k; throws InvalidWitness when an
// entry is not a unit or the defining congruence fails.
std::vector<i64> degree_witness(const BoundaryProblem& problem, const std::vector<i64>& k);

// L and L' cobound with isomorphic fundamental groups iff
// pi1_cobound(n; q_1, n - q_2) is satisfiable. Different orders: false.
bool pi1_cobordant_pair(const LensSpace& a, const LensSpace& b);

// Caps for the exhaustive cross-check enumerator.
struct EnumerationBudget {
  int max_terms = 5;
  i64 max_modulus = 30;
};

// Enumerates unit tuples in lexicographic order and returns the first
// satisfying witness; throws BudgetExceeded past the configured caps.
std::optional<CobordismWitness> brute_force_cobound(const BoundaryProblem& problem,
                                                    const EnumerationBudget& budget = {});

}  // namespace lenscalc
