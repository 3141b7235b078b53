#pragma once

#include <string>
#include <vector>

#include "sally/polynomial.hpp"

namespace sally {

// Expression grammar: identifiers [a-zA-Z][a-zA-Z0-9_]*, integer literals,
// operators + - * ^ and parentheses; ^ binds tightest, then *, then +/-.
// Implicit multiplication is not allowed; whitespace is insignificant.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables,
                            const Field& field, const MonomialOrder& ord);

// Canonical printing: terms in stored (descending) order, exponents with '^',
// explicit '*' between factors. Inverse of the parser on integer-coefficient
// polynomials.
std::string to_string(const Polynomial& f, const std::vector<std::string>& variables);

// Same, after clearing rational denominators and normalizing the sign so the
// output stays inside the integer expression grammar. The generated ideal is
// unchanged up to units.
std::string to_integer_string(const Polynomial& f, const std::vector<std::string>& variables);

}  // namespace sally
