#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "lenscalc/actions.hpp"
#include "lenscalc/cobordism.hpp"
#include "lenscalc/zmod.hpp"

namespace testsupport {

using lenscalc::i64;

inline i64 pick(std::mt19937& rng, i64 lo, i64 hi) {
  return std::uniform_int_distribution<i64>(lo, hi)(rng);
}

inline i64 pick_unit(std::mt19937& rng, i64 n) {
  std::vector<i64> us = lenscalc::units(n);
  return us[static_cast<size_t>(pick(rng, 0, static_cast<i64>(us.size()) - 1))];
}

inline lenscalc::BoundaryProblem random_problem(std::mt19937& rng, i64 max_n, int max_m) {
  i64 n = pick(rng, 2, max_n);
  int m = static_cast<int>(pick(rng, 1, max_m));
  std::vector<i64> q;
  for (int i = 0; i < m; ++i) q.push_back(pick_unit(rng, n));
  return lenscalc::BoundaryProblem(n, std::move(q));
}

// Isolated fixed points force all pairwise weight differences to be units,
// which rules out even n; rejection-sample weights over a random odd n.
inline lenscalc::WeightedCp2Action random_action(std::mt19937& rng, i64 max_n) {
  i64 n = 2 * pick(rng, 1, (max_n - 1) / 2) + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<i64, 3> w{pick(rng, 0, n - 1), pick(rng, 0, n - 1), pick(rng, 0, n - 1)};
    try {
      return lenscalc::WeightedCp2Action(n, w);
    } catch (const lenscalc::NonIsolated&) {
      continue;
    }
  }
  throw std::logic_error("failed to sample a valid weighted action");
}

// All m-tuples over the units of Z/n, odometer order; visit returns false to
// stop early.
template <typename Visit>
inline void for_each_unit_tuple(i64 n, int m, Visit visit) {
  std::vector<i64> us = lenscalc::units(n);
  std::vector<size_t> idx(static_cast<size_t>(m), 0);
  while (true) {
    std::vector<i64> tuple(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) tuple[static_cast<size_t>(i)] = us[idx[static_cast<size_t>(i)]];
    if (!visit(tuple)) return;
    int pos = m - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] + 1 == us.size()) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++idx[static_cast<size_t>(pos)];
  }
}

}  // namespace testsupport
