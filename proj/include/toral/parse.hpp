#pragma once

#include <span>
#include <string>
#include <string_view>

#include "toral/laurent.hpp"

namespace toral {

/// Parses a Laurent polynomial written over the given variables.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := coef | var ('^' int)?
///   coef     := rational | rational 'i' | 'i' | '(' rational ('+'|'-') rational 'i' ')'
///   rational := int ('/' posint)?
///
/// Whitespace is insignificant. `i` is reserved for the imaginary unit and
/// cannot name a variable. Errors carry the offending offset.
LaurentPoly parse_laurent(std::string_view text, std::span<const std::string> vars);

// A constant expression in the same grammar, e.g. "3", "-1/2", "(1-2i)", "1/2+3i".
GaussianRational parse_gaussian(std::string_view text);

// Checks a variable list: nonempty identifiers, no duplicates, no "i".
void validate_variable_names(std::span<const std::string> vars);

} // namespace toral
