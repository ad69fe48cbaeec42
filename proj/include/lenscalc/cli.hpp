#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lenscalc/lens.hpp"

namespace lenscalc::cli {

// Malformed command line (unknown subcommand, bad arity, bad literal
// syntax); maps to exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Parse "L(n,q)" with optional sign on q; UsageError on syntax, the usual
// construction errors on invalid values.
LensSpace parse_lens_literal(const std::string& text);

// Entry point. Exit codes: 0 computed (verdicts included), 1 usage error,
// 2 invalid input, 3 internal invariant violation.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lenscalc::cli
