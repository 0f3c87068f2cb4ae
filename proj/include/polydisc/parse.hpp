#pragma once

#include <optional>
#include <string>

#include "polydisc/polynomial.hpp"

namespace polydisc {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Parse the documented polynomial grammar: terms joined by + and -,
/// coefficients "a/b" or "(a/b+c/di)", variables X1..Xn with "^k" exponents,
/// factors separated by "*".  When nvars is absent the arity is the largest
/// variable index that occurs.
Polynomial parse_polynomial(const std::string& text, std::optional<int> nvars = std::nullopt);

/// Canonical printer; parse_polynomial(to_string(f)) == f bit-exactly.
std::string to_string(const Polynomial& f);

std::string to_string(const Monomial& m);

}  // namespace polydisc
