#pragma once

#include <stdexcept>
#include <string>

namespace lenscalc {

// Base for all recoverable errors raised on invalid input. CLI maps these to
// exit code 2. Internal invariant failures use std::logic_error instead and
// map to exit code 3.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Generic precondition violation with no more specific category below.
struct InvalidArgument : Error {
  using Error::Error;
};

// Residue is not invertible modulo n.
struct NotAUnit : Error {
  using Error::Error;
};

// Two residues or spaces with different moduli were combined.
struct ModulusMismatch : Error {
  using Error::Error;
};

// Exhaustive enumeration was asked to exceed its configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A proposed cobordism witness fails the defining congruence.
struct InvalidWitness : Error {
  using Error::Error;
};

// A ledger quotient step does not divide the running Euler characteristic.
struct NonDivisible : Error {
  using Error::Error;
};

// A computation restricted to primes was given a composite order.
struct NotPrime : Error {
  using Error::Error;
};

// The minimal-divisor bound is only defined for primes >= 5.
struct PrimeTooSmall : Error {
  using Error::Error;
};

// Fundamental-group order outside the range a formula covers.
struct UnsupportedOrder : Error {
  using Error::Error;
};

// Twist unit u does not satisfy u^d = 1 mod p.
struct IncompatibleTwist : Error {
  using Error::Error;
};

// Odd-degree formula applied in even degree.
struct EvenDegree : Error {
  using Error::Error;
};

// Weighted action has a non-isolated fixed point set.
struct NonIsolated : Error {
  using Error::Error;
};

// Malformed JSON input or a value outside the wire schema.
struct ParseError : Error {
  using Error::Error;
};

// A result contradicts a proved statement; never recoverable, exit code 3.
struct TheoremViolation : std::logic_error {
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lenscalc
