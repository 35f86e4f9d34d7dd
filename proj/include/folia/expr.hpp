#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "folia/bipoly.hpp"

namespace folia {

// Malformed input text. `position` is a 0-based byte offset.
struct SyntaxError : std::runtime_error {
    SyntaxError(size_t pos, std::string what_expected)
        : std::runtime_error("syntax error at position " + std::to_string(pos) +
                             ": expected " + what_expected),
          position(pos),
          expected(std::move(what_expected)) {}
    size_t position;
    std::string expected;
};

// Well-formed text that does not denote a polynomial (division by a
// non-constant, division by zero, or a non-integer exponent).
struct NonPolynomial : std::runtime_error {
    explicit NonPolynomial(const std::string& reason)
        : std::runtime_error("not a polynomial: " + reason) {}
};

// Parse a polynomial expression in x and y with rational coefficients.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' nat)?
//   base   := 'x' | 'y' | rational | '(' expr ')' | '-' base
//
// '/' requires a nonzero constant divisor; '^' requires a literal
// nonnegative integer. Whitespace is insignificant. Implicit
// multiplication ("2x") is rejected.
BivarPoly parse(std::string_view text);

}  // namespace folia
