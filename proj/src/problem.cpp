#include "toral/problem.hpp"

#include <fstream>
#include <sstream>

#include "toral/error.hpp"
#include "toral/parse.hpp"

namespace toral {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

} // namespace

std::string ProblemInput::to_string() const {
  std::string out = "vars";
  for (const auto &v : variables) out += " " + v;
  out += "\n";
  for (const auto &g : generators) out += "gen " + g.to_string(variables) + "\n";
  return out;
}

ProblemInput parse_problem(std::string_view text) {
  ProblemInput problem;
  bool have_vars = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const std::size_t line_start = start;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t body_col = static_cast<std::size_t>(body.data() - text.data()) - line_start;

    const auto space = body.find_first_of(" \t");
    const std::string_view keyword = body.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : body.substr(space + 1);

    if (keyword == "vars") {
      if (have_vars) throw ParseError("duplicate 'vars' line", body_col, line_no);
      std::istringstream names{std::string(rest)};
      for (std::string v; names >> v;) problem.variables.push_back(v);
      try {
        validate_variable_names(problem.variables);
      } catch (const InputError &e) {
        throw ParseError(e.what(), body_col, line_no);
      }
      have_vars = true;
    } else if (keyword == "gen") {
      if (!have_vars) throw ParseError("'gen' before the 'vars' line", body_col, line_no);
      const std::size_t expr_col = static_cast<std::size_t>(rest.data() - text.data()) - line_start;
      try {
        problem.generators.push_back(parse_laurent(rest, problem.variables));
      } catch (const ParseError &e) {
        throw ParseError(e.detail(), expr_col + e.position(), line_no);
      }
      if (problem.generators.back().is_zero()) throw ParseError("generator is the zero polynomial", expr_col, line_no);
    } else {
      throw ParseError("expected 'vars' or 'gen', found '" + std::string(keyword) + "'", body_col, line_no);
    }
  }
  if (!have_vars) throw ParseError("missing 'vars' line", 0, line_no ? line_no : 1);
  return problem;
}

ProblemInput load_problem(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

} // namespace toral
