#include "lenscalc/bounding_index.hpp"

#include <string>

namespace lenscalc {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

i64 d_min_divisor(i64 p) {
  if (!is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  if (p < 5) {
    throw PrimeTooSmall("minimal divisor bound needs p >= 5, got " + std::to_string(p));
  }
  for (i64 d = 3; d <= p - 1; ++d) {
    if ((p - 1) % d == 0) return d;
  }
  throw std::logic_error("p - 1 has no divisor >= 3 despite p >= 5");
}

i64 ob_lens_prime(const LensSpace& l) {
  if (!is_prime(l.n()) || l.n() < 5) {
    throw UnsupportedOrder("bounding index formula needs a prime order >= 5, got " +
                           std::to_string(l.n()));
  }
  return d_min_divisor(l.n());
}

i64 chib_lower_bound(const LensSpace& l) {
  return is_perfect_square(l.n()) ? 1 : 2;
}

i64 euler_ledger(const std::vector<ChiLedgerStep>& steps) {
  if (steps.empty() || steps.front().kind != ChiLedgerStep::Kind::Closed4) {
    throw InvalidArgument("ledger must start with a closed4 step");
  }
  i64 chi = 0;
  for (size_t i = 0; i < steps.size(); ++i) {
    const ChiLedgerStep& s = steps[i];
    switch (s.kind) {
      case ChiLedgerStep::Kind::Closed4:
        if (i != 0) {
          throw InvalidArgument("closed4 is only valid as the first step");
        }
        chi = s.arg;
        break;
      case ChiLedgerStep::Kind::RemoveBalls:
        if (s.arg < 1) {
          throw InvalidArgument("remove_balls count must be >= 1");
        }
        chi -= s.arg;
        break;
      case ChiLedgerStep::Kind::FreeQuotient:
        if (s.arg < 1) {
          throw InvalidArgument("free_quotient order must be >= 1");
        }
        if (chi % s.arg != 0) {
          throw NonDivisible("chi = " + std::to_string(chi) + " is not divisible by " +
                             std::to_string(s.arg));
        }
        chi /= s.arg;
        break;
      case ChiLedgerStep::Kind::GlueBoundaryPair:
        break;
      case ChiLedgerStep::Kind::CircleSurgery:
        chi += 2;
        break;
    }
  }
  return chi;
}

}  // namespace lenscalc
