#include "lenscalc/groups.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "lenscalc/bounding_index.hpp"

namespace lenscalc {

void FinitePresentation::validate() const {
  std::set<std::string> seen;
  for (const std::string& g : generators) {
    if (g.empty()) {
      throw InvalidArgument("generator names must be nonempty");
    }
    if (!seen.insert(g).second) {
      throw InvalidArgument("duplicate generator name: " + g);
    }
  }
  int k = rank();
  for (const std::vector<int>& rel : relators) {
    for (int letter : rel) {
      if (letter == 0 || letter > k || letter < -k) {
        throw InvalidArgument("relator letter " + std::to_string(letter) +
                              " out of range for rank " + std::to_string(k));
      }
    }
  }
}

FinitePresentation sigma_presentation(const FinitePresentation& p) {
  p.validate();
  int k = p.rank();
  int m = static_cast<int>(p.relators.size());
  FinitePresentation out;
  out.generators.reserve(2 * k + 1);
  for (const std::string& g : p.generators) out.generators.push_back(g + "1");
  for (const std::string& g : p.generators) out.generators.push_back(g + "2");
  out.generators.push_back("t");
  const int t = 2 * k + 1;

  out.relators.reserve(2 * m + static_cast<size_t>(k) * k + k);
  auto shifted = [&](const std::vector<int>& rel, int shift) {
    std::vector<int> word;
    word.reserve(rel.size());
    for (int letter : rel) {
      word.push_back(letter > 0 ? letter + shift : letter - shift);
    }
    return word;
  };
  for (const std::vector<int>& rel : p.relators) out.relators.push_back(shifted(rel, 0));
  for (const std::vector<int>& rel : p.relators) out.relators.push_back(shifted(rel, k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      out.relators.push_back({i, k + j, -i, -(k + j)});
    }
  }
  for (int i = 1; i <= k; ++i) {
    out.relators.push_back({t, i, -t, -(k + i), -i});
  }
  return out;
}

std::vector<i64> AbelianizationMap::torsion() const {
  std::vector<i64> out;
  for (i64 d : factors) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

int AbelianizationMap::free_rank() const {
  int count = 0;
  for (i64 d : factors) {
    if (d == 0) ++count;
  }
  return count;
}

std::vector<i64> AbelianizationMap::image_of_generator(int gen_index) const {
  if (gen_index < 0 || gen_index >= static_cast<int>(factors.size())) {
    throw InvalidArgument("generator index out of range");
  }
  std::vector<i64> coords(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    i64 c = transform(static_cast<int>(i), gen_index);
    coords[i] = factors[i] > 0 ? mod_reduce(c, factors[i]) : c;
  }
  return coords;
}

bool AbelianizationMap::generator_maps_to_zero(int gen_index) const {
  for (i64 c : image_of_generator(gen_index)) {
    if (c != 0) return false;
  }
  return true;
}

AbelianizationMap abelianization(const FinitePresentation& p) {
  p.validate();
  int k = p.rank();
  int m = static_cast<int>(p.relators.size());

  // Exponent matrix: R(j, i) = total exponent of generator i+1 in relator j.
  IntMatrix r(m, k);
  for (int j = 0; j < m; ++j) {
    for (int letter : p.relators[j]) {
      int i = std::abs(letter) - 1;
      r(j, i) += letter > 0 ? 1 : -1;
    }
  }

  // The quotient is Z^k / column space of R^T; SNF left transform U puts the
  // relation subgroup into diagonal coordinates z = U x.
  SmithDecomposition snf = smith_normal_form(transpose(r));
  AbelianizationMap out{std::vector<i64>(static_cast<size_t>(k), 0), std::move(snf.left)};
  for (size_t i = 0; i < snf.invariant_factors.size(); ++i) {
    out.factors[i] = snf.invariant_factors[i];
  }
  return out;
}

MetacyclicGroup::MetacyclicGroup(i64 p, i64 u, i64 d) : p_(p), d_(d) {
  if (p < 2) {
    throw InvalidArgument("semidirect product requires p >= 2");
  }
  if (d < 1) {
    throw InvalidArgument("semidirect product requires d >= 1");
  }
  u_ = mod_reduce(u, p);
  if (mod_pow(u_, d_, p_) != 1 % p_) {
    throw IncompatibleTwist("u = " + std::to_string(u) + " does not satisfy u^" +
                            std::to_string(d) + " = 1 mod " + std::to_string(p));
  }
}

MetacyclicGroup::Element MetacyclicGroup::make(i64 a, i64 b) const {
  return {mod_reduce(a, p_), mod_reduce(b, d_)};
}

MetacyclicGroup::Element MetacyclicGroup::mul(const Element& lhs, const Element& rhs) const {
  i64 twist = mod_pow(u_, lhs.b, p_);
  return {mod_reduce(lhs.a + mod_mul(twist, rhs.a, p_), p_), mod_reduce(lhs.b + rhs.b, d_)};
}

MetacyclicGroup::Element MetacyclicGroup::inverse(const Element& g) const {
  // (a, b)^-1 = (-u^-b a, -b); u^-b = u^(d - b) since u^d = 1.
  i64 untwist = mod_pow(u_, mod_reduce(-g.b, d_), p_);
  return {mod_reduce(-mod_mul(untwist, g.a, p_), p_), mod_reduce(-g.b, d_)};
}

std::vector<MetacyclicGroup::Element> MetacyclicGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(order()));
  for (i64 a = 0; a < p_; ++a) {
    for (i64 b = 0; b < d_; ++b) out.push_back({a, b});
  }
  return out;
}

MetacyclicGroup semidirect_group(i64 p, i64 u, i64 d) { return MetacyclicGroup(p, u, d); }

i64 element_order(const MetacyclicGroup& g, const MetacyclicGroup::Element& e) {
  MetacyclicGroup::Element acc = g.make(e.a, e.b);
  for (i64 ord = 1; ord <= g.order(); ++ord) {
    if (acc == g.identity()) return ord;
    acc = g.mul(acc, g.make(e.a, e.b));
  }
  throw std::logic_error("element order exceeded group order");
}

CyclicHomology cyclic_homology(i64 n, i64 k) {
  if (n < 2) {
    throw InvalidArgument("cyclic homology requires n >= 2");
  }
  if (k < 0) {
    throw InvalidArgument("homological degree must be >= 0");
  }
  if (k == 0) return {CyclicHomology::Kind::Integers, 0};
  if (k % 2 == 1) return {CyclicHomology::Kind::Cyclic, n};
  return {CyclicHomology::Kind::Trivial, 0};
}

i64 power_map_action_on_h(i64 n, i64 u, i64 k) {
  if (n < 2) {
    throw InvalidArgument("cyclic homology requires n >= 2");
  }
  if (k < 0) {
    throw InvalidArgument("homological degree must be >= 0");
  }
  if (k % 2 == 0) {
    throw EvenDegree("power map multiplier is defined in odd degrees, got k = " +
                     std::to_string(k));
  }
  if (!is_unit(u, n)) {
    throw NotAUnit("u = " + std::to_string(u) + " is not a unit mod " + std::to_string(n));
  }
  return mod_pow(u, (k + 1) / 2, n);
}

bool i3_trivial_in_semidirect(i64 p, i64 u, i64 d) {
  if (!is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  MetacyclicGroup g(p, u, d);  // validates the twist
  return mod_pow(g.u(), 2, p) != 1 % p;
}

}  // namespace lenscalc
