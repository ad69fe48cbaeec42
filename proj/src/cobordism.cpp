#include "lenscalc/cobordism.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lenscalc {

BoundaryProblem::BoundaryProblem(i64 n, std::vector<i64> q) : n_(n) {
  if (n < 2) {
    throw InvalidArgument("boundary problem requires n >= 2, got n = " + std::to_string(n));
  }
  if (q.empty()) {
    throw InvalidArgument("boundary problem requires at least one component");
  }
  q_.reserve(q.size());
  for (i64 v : q) {
    i64 r = mod_reduce(v, n);
    if (std::gcd(r, n) != 1) {
      throw NotAUnit("q = " + std::to_string(v) + " is not a unit mod " + std::to_string(n));
    }
    q_.push_back(r);
  }
}

namespace {

// Assemble the degree data for a validated tuple k: with s = sum q_i k_i^2,
// the first component absorbs the full multiple of n (x_1 = -s/n) and the
// rest keep x_i = 0, so the degrees sum to exactly zero.
CobordismWitness make_witness(const BoundaryProblem& problem, std::vector<i64> k) {
  i64 n = problem.n();
  const std::vector<i64>& q = problem.residues();
  if (k.size() != q.size()) {
    throw InvalidWitness("witness has " + std::to_string(k.size()) + " entries, expected " +
                         std::to_string(q.size()));
  }
  __int128 wide_total = 0;
  for (size_t i = 0; i < k.size(); ++i) {
    if (!is_unit(k[i], n)) {
      throw InvalidWitness("k = " + std::to_string(k[i]) + " is not a unit mod " +
                           std::to_string(n));
    }
    k[i] = mod_reduce(k[i], n);
    wide_total += static_cast<__int128>(q[i]) * k[i] * k[i];
  }
  if (wide_total > std::numeric_limits<i64>::max()) {
    throw InvalidArgument("modulus too large for exact degree data");
  }
  i64 total = static_cast<i64>(wide_total);
  if (total % n != 0) {
    throw InvalidWitness("sum q_i k_i^2 = " + std::to_string(total) + " is not divisible by " +
                         std::to_string(n));
  }
  CobordismWitness w;
  w.k = std::move(k);
  w.x.assign(w.k.size(), 0);
  w.x[0] = -(total / n);
  w.degrees.resize(w.k.size());
  for (size_t i = 0; i < w.k.size(); ++i) {
    w.degrees[i] = q[i] * w.k[i] * w.k[i] + w.x[i] * n;
  }
  if (!witness_satisfies(problem, w)) {
    throw std::logic_error("constructed cobordism witness failed self-check");
  }
  return w;
}

}  // namespace

bool witness_satisfies(const BoundaryProblem& problem, const CobordismWitness& witness) {
  i64 n = problem.n();
  const std::vector<i64>& q = problem.residues();
  if (witness.k.size() != q.size() || witness.x.size() != q.size() ||
      witness.degrees.size() != q.size()) {
    return false;
  }
  __int128 sum = 0;
  for (size_t i = 0; i < q.size(); ++i) {
    if (!is_unit(witness.k[i], n)) return false;
    __int128 expected = static_cast<__int128>(q[i]) * witness.k[i] * witness.k[i] +
                        static_cast<__int128>(witness.x[i]) * n;
    if (static_cast<__int128>(witness.degrees[i]) != expected) return false;
    sum += witness.degrees[i];
  }
  return sum == 0;
}

std::optional<CobordismWitness> pi1_cobound(const BoundaryProblem& problem) {
  i64 n = problem.n();
  const std::vector<i64>& q = problem.residues();
  int m = problem.terms();
  std::vector<i64> us = units(n);

  // reach[i][r]: the first i terms can sum to r mod n. back[i][r] records the
  // first writer (smallest k, then smallest predecessor residue).
  struct Back {
    i64 k;
    i64 prev;
  };
  std::vector<std::vector<char>> reach(m + 1, std::vector<char>(n, 0));
  std::vector<std::vector<Back>> back(m + 1, std::vector<Back>(n, {0, 0}));
  reach[0][0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (i64 k : us) {
      i64 c = mod_mul(q[i - 1], mod_mul(k, k, n), n);
      for (i64 prev = 0; prev < n; ++prev) {
        if (!reach[i - 1][prev]) continue;
        i64 target = mod_reduce(prev + c, n);
        if (!reach[i][target]) {
          reach[i][target] = 1;
          back[i][target] = {k, prev};
        }
      }
    }
  }
  if (!reach[m][0]) return std::nullopt;

  std::vector<i64> k(m);
  i64 r = 0;
  for (int i = m; i >= 1; --i) {
    k[i - 1] = back[i][r].k;
    r = back[i][r].prev;
  }
  return make_witness(problem, std::move(k));
}

std::vector<i64> degree_witness(const BoundaryProblem& problem, const std::vector<i64>& k) {
  return make_witness(problem, k).degrees;
}

bool pi1_cobordant_pair(const LensSpace& a, const LensSpace& b) {
  if (a.n() != b.n()) return false;
  i64 n = a.n();
  return pi1_cobound(BoundaryProblem(n, {a.q(), n - b.q()})).has_value();
}

std::optional<CobordismWitness> brute_force_cobound(const BoundaryProblem& problem,
                                                    const EnumerationBudget& budget) {
  i64 n = problem.n();
  int m = problem.terms();
  if (m > budget.max_terms || n > budget.max_modulus) {
    throw BudgetExceeded("brute force limited to " + std::to_string(budget.max_terms) +
                         " terms and modulus " + std::to_string(budget.max_modulus));
  }
  const std::vector<i64>& q = problem.residues();
  std::vector<i64> us = units(n);
  std::vector<size_t> idx(m, 0);
  while (true) {
    i64 sum = 0;
    for (int i = 0; i < m; ++i) {
      i64 k = us[idx[i]];
      sum = mod_reduce(sum + q[i] * k * k, n);
    }
    if (sum == 0) {
      std::vector<i64> k(m);
      for (int i = 0; i < m; ++i) k[i] = us[idx[i]];
      return make_witness(problem, std::move(k));
    }
    int pos = m - 1;
    while (pos >= 0 && idx[pos] + 1 == us.size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
    ++idx[pos];
  }
}

}  // namespace lenscalc
