#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "toral/laurent.hpp"

namespace toral {

/// A toral variety given by generators of its ideal in K[t_1^±1, ..., t_r^±1].
///
/// Text format (UTF-8, '#' starts a comment):
///
///     vars t1 t2
///     gen t1*t2 - t1 - 1
struct ProblemInput {
  std::vector<std::string> variables;
  std::vector<LaurentPoly> generators;

  std::size_t rank() const noexcept { return variables.size(); }
  std::string to_string() const; // canonical text in the same format
};

ProblemInput parse_problem(std::string_view text);
ProblemInput load_problem(const std::filesystem::path &path); // throws InputError if unreadable

} // namespace toral
