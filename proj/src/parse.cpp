#include "toral/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "toral/error.hpp"

namespace toral {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

struct Monomial {
  GaussianRational coef;
  LatticeVector exponent;
};

class LaurentParser {
public:
  LaurentParser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  LaurentPoly parse() {
    LaurentPoly result(vars_.size());
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    add(result, term(), negative);
    while (true) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negative = take() == '-';
      add(result, term(), negative);
    }
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return result;
  }

private:
  static void add(LaurentPoly &p, const Monomial &m, bool negative) {
    p.add_term(m.exponent, negative ? -m.coef : m.coef);
  }

  Monomial term() {
    Monomial m{GaussianRational(1), LatticeVector(vars_.size())};
    factor(m);
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factor(m);
    }
    return m;
  }

  void factor(Monomial &m) {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      mpq_class re = rational(true);
      skip_ws();
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-' inside complex coefficient");
      const bool minus = take() == '-';
      mpq_class im = rational(false);
      skip_ws();
      if (peek() != 'i') fail("expected 'i' after imaginary part");
      ++pos_;
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      m.coef *= GaussianRational(re, minus ? mpq_class(-im) : im);
      return;
    }
    if (is_digit(c)) {
      mpq_class q = rational(false);
      skip_ws();
      if (peek() == 'i' && !is_ident_char(peek(1))) {
        ++pos_;
        m.coef *= GaussianRational(0, q);
      } else {
        m.coef *= GaussianRational(q);
      }
      return;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") {
        m.coef *= GaussianRational::imaginary_unit();
        return;
      }
      std::size_t index = vars_.size();
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) index = k;
      if (index == vars_.size()) fail("unknown variable '" + std::string(name) + "'", start);
      std::int64_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        e = integer(true);
      }
      m.exponent[index] = checked_add(m.exponent[index], e);
      return;
    }
    if (c == '/') fail("'/' is only allowed inside a rational coefficient; write t^-k for division");
    fail(pos_ == text_.size() ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  mpq_class rational(bool allow_sign) {
    skip_ws();
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = take() == '-';
      skip_ws();
    }
    mpz_class num = digits();
    mpz_class den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      den = digits();
      if (sgn(den) == 0) fail("zero denominator", at);
    }
    mpq_class q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  std::int64_t integer(bool allow_sign) {
    skip_ws();
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = take() == '-';
      skip_ws();
    }
    const std::size_t at = pos_;
    mpz_class v = digits();
    if (negative) v = -v;
    if (!v.fits_slong_p()) fail("exponent out of range", at);
    return v.get_si();
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail(const std::string &what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

} // namespace

void validate_variable_names(std::span<const std::string> vars) {
  if (vars.empty()) throw InputError("at least one variable is required");
  std::set<std::string> seen;
  for (const auto &v : vars) {
    if (v.empty() || !is_ident_start(v.front()) ||
        !std::all_of(v.begin(), v.end(), [](char c) { return is_ident_char(c); }))
      throw InputError("invalid variable name '" + v + "'");
    if (v == "i") throw InputError("'i' is the imaginary unit and cannot name a variable");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
}

GaussianRational parse_gaussian(std::string_view text) {
  const LaurentPoly p = LaurentParser(text, {}).parse();
  return p.coefficient(LatticeVector());
}

LaurentPoly parse_laurent(std::string_view text, std::span<const std::string> vars) {
  validate_variable_names(vars);
  return LaurentParser(text, vars).parse();
}

} // namespace toral
