#pragma once

#include <vector>

#include "lenscalc/lens.hpp"
#include "lenscalc/zmod.hpp"

namespace lenscalc {

bool is_prime(i64 n);

// Smallest divisor d >= 3 of p - 1, for a prime p >= 5.
i64 d_min_divisor(i64 p);

// Minimal bounding index O_b(L(p, q)) = d_min_divisor(p); independent of q.
// Only defined here for prime orders p >= 5.
i64 ob_lens_prime(const LensSpace& l);

// Lower bound for the bounding Euler characteristic of L(n, q): 2 when n is
// not a perfect square, else 1.
i64 chib_lower_bound(const LensSpace& l);

// One step in an Euler-characteristic bookkeeping chain for building a
// bounding 4-manifold.
struct ChiLedgerStep {
  enum class Kind {
    Closed4,           // start from a closed 4-manifold of the given chi
    RemoveBalls,       // remove the given number of open 4-balls: chi -= count
    FreeQuotient,      // quotient by a free action of the given order: chi /= order
    GlueBoundaryPair,  // glue two boundary components: chi unchanged
    CircleSurgery,     // replace S^1 x D^3 by D^2 x S^2: chi += 2
  };

  Kind kind;
  i64 arg = 0;  // chi for Closed4, count for RemoveBalls, order for FreeQuotient

  static ChiLedgerStep closed4(i64 chi) { return {Kind::Closed4, chi}; }
  static ChiLedgerStep remove_balls(i64 count) { return {Kind::RemoveBalls, count}; }
  static ChiLedgerStep free_quotient(i64 order) { return {Kind::FreeQuotient, order}; }
  static ChiLedgerStep glue_boundary_pair() { return {Kind::GlueBoundaryPair, 0}; }
  static ChiLedgerStep circle_surgery() { return {Kind::CircleSurgery, 0}; }

  friend bool operator==(const ChiLedgerStep&, const ChiLedgerStep&) = default;
};

// Fold a ledger that must start with a Closed4 step; throws NonDivisible
// when a FreeQuotient order does not divide the running characteristic.
i64 euler_ledger(const std::vector<ChiLedgerStep>& steps);

}  // namespace lenscalc
