// Acceptance harness: one line of output per criterion, nonzero exit when any
// criterion fails. Every check here is exact; no tolerance anywhere.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lenscalc/actions.hpp"
#include "lenscalc/bounding_index.hpp"
#include "lenscalc/cobordism.hpp"
#include "lenscalc/groups.hpp"
#include "lenscalc/intmat.hpp"
#include "lenscalc/lens.hpp"
#include "lenscalc/zmod.hpp"
#include "test_support.hpp"

using namespace lenscalc;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream s;
  s << value;
  return s.str();
}

// ---------------------------------------------------------------------------
// 1. The worked chain for the order-5 action with weights (4, 0, 1).

void criterion_golden_chain() {
  WeightedCp2Action action(5, {4, 0, 1});
  std::vector<LensSpace> types = fixed_point_types(action);
  require(types.size() == 3, "expected three fixed points");
  std::vector<LensSpace> canonical;
  for (const LensSpace& t : types) canonical.push_back(canonical_form(t));
  std::vector<LensSpace> expected{LensSpace(5, 2), LensSpace(5, 4), LensSpace(5, 2)};
  require(canonical == expected, "canonical fixed-point types differ from the worked chain");

  BoundaryProblem boundary = orbifold_boundary(action);
  require(boundary.n() == 5, "boundary order is not 5");
  require(boundary.residues() == std::vector<i64>{3, 1, 2},
          "boundary residues are not (3,1,2)");

  // The same boundary up to orientation-preserving homeomorphism: compare the
  // canonical forms against the (3,1,3) presentation as multisets.
  std::vector<LensSpace> got, alt;
  for (i64 q : boundary.residues()) got.push_back(canonical_form(LensSpace(5, q)));
  for (i64 q : {3, 1, 3}) alt.push_back(canonical_form(LensSpace(5, q)));
  auto key = [](const LensSpace& l) { return l.q(); };
  std::sort(got.begin(), got.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
  std::sort(alt.begin(), alt.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
  require(got == alt, "boundary does not match the (3,1,3) presentation canonically");

  std::optional<CobordismWitness> w = pi1_cobound(boundary);
  require(w.has_value(), "boundary problem should be solvable");
  require(witness_satisfies(boundary, *w), "solver witness fails verification");

  require(semidirect_group(5, 2, 4).order() == 20, "semidirect order is not 20");
  require(ob_lens_prime(LensSpace(5, 1)) == 4, "O_b(L(5,1)) is not 4");

  std::vector<ChiLedgerStep> ledger{
      ChiLedgerStep::closed4(3), ChiLedgerStep::remove_balls(3),
      ChiLedgerStep::free_quotient(5), ChiLedgerStep::glue_boundary_pair(),
      ChiLedgerStep::circle_surgery()};
  require(euler_ledger(ledger) == 2, "five-step Euler ledger is not 2");
  require(chib_lower_bound(LensSpace(5, 1)) == 2, "chi_b lower bound is not 2");
}

// ---------------------------------------------------------------------------
// 2. The pair cobordism test agrees with oriented homotopy equivalence on
//    every pair of lens spaces of the same order up to 30.

void criterion_pair_agreement() {
  for (i64 n = 2; n <= 30; ++n) {
    std::vector<i64> us = units(n);
    for (i64 q1 : us) {
      for (i64 q2 : us) {
        LensSpace a(n, q1), b(n, q2);
        bool cob = pi1_cobordant_pair(a, b);
        bool hom = homotopy_equivalent_oriented(a, b).equivalent;
        require(cob == hom, "disagreement at " + to_string(a) + " vs " + to_string(b));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 3. The dynamic-programming solver matches brute-force enumeration, and
//    every witness it emits verifies.

void criterion_solver_vs_brute_force() {
  auto check = [](const BoundaryProblem& problem) {
    std::optional<CobordismWitness> dp = pi1_cobound(problem);
    std::optional<CobordismWitness> bf = brute_force_cobound(problem);
    require(dp.has_value() == bf.has_value(),
            "solver and brute force disagree at n=" + str(problem.n()));
    if (dp) require(witness_satisfies(problem, *dp), "solver witness fails verification");
    if (bf) require(witness_satisfies(problem, *bf), "brute-force witness fails verification");
  };

  for (i64 n = 2; n <= 15; ++n) {
    for (int m = 1; m <= 3; ++m) {
      testsupport::for_each_unit_tuple(n, m, [&](const std::vector<i64>& q) {
        check(BoundaryProblem(n, q));
        return true;
      });
    }
  }

  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 500; ++trial) {
    check(testsupport::random_problem(rng, 25, 4));
  }
}

// ---------------------------------------------------------------------------
// 4. Every valid weighted action on CP^2 has a null-cobounding boundary; the
//    consistency check never trips.

void criterion_actions_always_bound() {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    WeightedCp2Action action = testsupport::random_action(rng, 50);
    CobordismWitness w;
    try {
      w = verify_action_consistency(action);
    } catch (const TheoremViolation&) {
      require(false, "consistency check tripped at n=" + str(action.n()));
    }
    require(witness_satisfies(orbifold_boundary(action), w),
            "action witness fails verification at n=" + str(action.n()));
  }
}

// ---------------------------------------------------------------------------
// 5. Degree sets compose: D(L1,L2) * D(L2,L3) lands in D(L1,L3); qq' is always
//    realized; the diagonal always contains 1.

void criterion_degree_composition() {
  for (i64 n = 2; n <= 20; ++n) {
    std::vector<i64> us = units(n);
    size_t c = us.size();
    std::vector<std::vector<DegreeSet>> sets(c);
    for (size_t i = 0; i < c; ++i) {
      for (size_t j = 0; j < c; ++j) {
        sets[i].push_back(degree_set(LensSpace(n, us[i]), LensSpace(n, us[j])));
      }
    }
    for (size_t i = 0; i < c; ++i) {
      require(sets[i][i].contains(mod_reduce(1, n)), "1 missing from a diagonal degree set");
      for (size_t j = 0; j < c; ++j) {
        require(sets[i][j].contains(mod_mul(us[i], us[j], n)),
                "qq' missing from a degree set at n=" + str(n));
      }
    }
    for (size_t i = 0; i < c; ++i) {
      for (size_t j = 0; j < c; ++j) {
        for (size_t k = 0; k < c; ++k) {
          for (i64 d1 : sets[i][j].residues) {
            for (i64 d2 : sets[j][k].residues) {
              require(sets[i][k].contains(mod_mul(d1, d2, n)),
                      "degree sets fail to compose at n=" + str(n));
            }
          }
        }
      }
    }
  }

  require(homotopy_equivalent_oriented(LensSpace(7, 1), LensSpace(7, 2)).equivalent,
          "L(7,1) and L(7,2) should be equivalent");
  require(!homotopy_equivalent_oriented(LensSpace(5, 1), LensSpace(5, 2)).equivalent,
          "L(5,1) and L(5,2) should not be equivalent");
}

// ---------------------------------------------------------------------------
// 6. The minimal bounding index matches direct divisor enumeration on every
//    prime up to 1000.

void criterion_bounding_index() {
  for (i64 p = 5; p <= 1000; ++p) {
    if (!is_prime(p)) continue;
    i64 expected = 0;
    for (i64 d = 3; d <= p - 1; ++d) {
      if ((p - 1) % d == 0) {
        expected = d;
        break;
      }
    }
    require(expected != 0, "no divisor found for p=" + str(p));
    require(d_min_divisor(p) == expected, "d(p) mismatch at p=" + str(p));
  }
  require(d_min_divisor(5) == 4 && d_min_divisor(7) == 3 && d_min_divisor(11) == 5 &&
              d_min_divisor(13) == 3,
          "pinned d(p) values changed");
}

// ---------------------------------------------------------------------------
// 7. Power-map multipliers square correctly; semidirect products satisfy the
//    group laws with a normal rotation subgroup; I^3 vanishes whenever the
//    twist has the minimal admissible order.

i64 multiplicative_order(i64 u, i64 p) {
  i64 acc = mod_reduce(u, p);
  for (i64 k = 1; k < p; ++k) {
    if (acc == 1) return k;
    acc = mod_mul(acc, u, p);
  }
  return p;  // unreachable for units of Z/p, p prime
}

void criterion_group_structure() {
  for (i64 n = 2; n <= 50; ++n) {
    for (i64 u : units(n)) {
      i64 m1 = power_map_action_on_h(n, u, 1);
      i64 m3 = power_map_action_on_h(n, u, 3);
      require(m3 == mod_mul(m1, m1, n), "degree-3 multiplier is not the square at n=" + str(n));
    }
  }

  struct Triple {
    i64 p, u, d;
  };
  for (Triple t : {Triple{5, 2, 4}, Triple{7, 2, 3}, Triple{11, 3, 5}}) {
    MetacyclicGroup g = semidirect_group(t.p, t.u, t.d);
    std::vector<MetacyclicGroup::Element> els = g.elements();
    for (const auto& a : els) {
      require(g.mul(a, g.inverse(a)) == g.identity(), "inverse law fails");
      require(g.mul(g.identity(), a) == a && g.mul(a, g.identity()) == a, "identity law fails");
      for (const auto& b : els) {
        for (const auto& c : els) {
          require(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), "associativity fails");
        }
      }
      for (i64 r = 0; r < t.p; ++r) {
        MetacyclicGroup::Element conj = g.mul(g.mul(a, g.make(r, 0)), g.inverse(a));
        require(conj.b == 0, "rotation subgroup is not normal");
      }
    }
  }

  for (i64 p = 5; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    i64 d = d_min_divisor(p);
    int found = 0;
    for (i64 u = 2; u < p; ++u) {
      if (multiplicative_order(u, p) != d) continue;
      ++found;
      require(i3_trivial_in_semidirect(p, u, d),
              "I^3 should vanish at p=" + str(p) + ", u=" + str(u));
    }
    require(found >= 1, "no twist of exact order d(p) found at p=" + str(p));
  }
}

// ---------------------------------------------------------------------------
// 8. The doubled HNN presentation abelianizes to Z/n + Z with the second copy
//    killed, and Smith normal form keeps its contract on random matrices.

void criterion_abelianization_and_snf() {
  for (i64 n = 2; n <= 12; ++n) {
    FinitePresentation cyclic{{"a"}, {std::vector<int>(static_cast<size_t>(n), 1)}};
    AbelianizationMap ab = abelianization(sigma_presentation(cyclic));
    require(ab.torsion() == std::vector<i64>{n}, "torsion is not (n) at n=" + str(n));
    require(ab.free_rank() == 1, "free rank is not 1 at n=" + str(n));
    require(ab.generator_maps_to_zero(1), "second copy survives abelianization");
    require(!ab.generator_maps_to_zero(0), "first copy dies in abelianization");
    require(!ab.generator_maps_to_zero(2), "stable letter dies in abelianization");
  }

  std::mt19937 rng(1729);
  for (int trial = 0; trial < 1000; ++trial) {
    int rows = static_cast<int>(testsupport::pick(rng, 0, 4));
    int cols = static_cast<int>(testsupport::pick(rng, 0, 4));
    std::vector<i64> entries;
    for (int i = 0; i < rows * cols; ++i) entries.push_back(testsupport::pick(rng, -9, 9));
    IntMatrix m(rows, cols, entries);
    SmithDecomposition s = smith_normal_form(m);

    i64 dl = determinant(s.left);
    i64 dr = determinant(s.right);
    require(dl == 1 || dl == -1, "left transform is not unimodular");
    require(dr == 1 || dr == -1, "right transform is not unimodular");
    require(multiply(multiply(s.left, m), s.right) == s.diagonal(rows, cols),
            "transforms do not reconstruct the diagonal");

    const std::vector<i64>& f = s.invariant_factors;
    require(static_cast<int>(f.size()) == std::min(rows, cols), "wrong factor count");
    for (size_t i = 0; i < f.size(); ++i) {
      require(f[i] >= 0, "negative invariant factor");
      if (i + 1 < f.size()) {
        if (f[i] == 0) {
          require(f[i + 1] == 0, "zero factor followed by a nonzero one");
        } else {
          require(f[i + 1] % f[i] == 0, "divisibility chain broken");
        }
      }
    }
  }
}

int run_criterion(int index, const std::string& label, const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  try {
    body();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "criterion " << index << ": PASS " << label << " (" << ms << " ms)\n";
    return 0;
  } catch (const std::exception& e) {
    std::cout << "criterion " << index << ": FAIL " << label << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "worked chain for the order-5 action", criterion_golden_chain);
  failures += run_criterion(2, "pair cobordism matches homotopy equivalence",
                            criterion_pair_agreement);
  failures += run_criterion(3, "solver matches brute force", criterion_solver_vs_brute_force);
  failures += run_criterion(4, "every valid action bounds", criterion_actions_always_bound);
  failures += run_criterion(5, "degree sets compose", criterion_degree_composition);
  failures += run_criterion(6, "bounding index vs divisor enumeration", criterion_bounding_index);
  failures += run_criterion(7, "group structure and I^3 vanishing", criterion_group_structure);
  failures += run_criterion(8, "abelianization and Smith normal form",
                            criterion_abelianization_and_snf);
  if (failures == 0) {
    std::cout << "all 8 criteria passed\n";
    return 0;
  }
  std::cout << failures << " of 8 criteria failed\n";
  return 1;
}
