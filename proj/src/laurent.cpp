#include "toral/laurent.hpp"

#include <algorithm>

#include "toral/error.hpp"
#include "toral/zlattice.hpp"

namespace toral {

ScalarTuple::ScalarTuple(std::vector<GaussianRational> values) : values_(std::move(values)) {
  for (const auto &v : values_)
    if (v.is_zero()) throw DimensionError("torus point with a zero coordinate");
}

ScalarTuple ScalarTuple::ones(std::size_t rank) { return ScalarTuple(std::vector<GaussianRational>(rank, 1)); }

GaussianRational character(const LatticeVector &m, const ScalarTuple &point) {
  if (m.size() != point.size()) throw DimensionError("character and point differ in rank");
  GaussianRational acc(1);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) acc *= point[i].pow(m[i]);
  return acc;
}

LaurentPoly LaurentPoly::monomial(const LatticeVector &exponent, GaussianRational coefficient) {
  LaurentPoly p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, GaussianRational c) {
  return monomial(LatticeVector(rank), std::move(c));
}

void LaurentPoly::check_rank(const LatticeVector &m) const {
  if (m.size() != rank_) throw DimensionError("exponent of rank " + std::to_string(m.size()) +
                                              " in a polynomial of rank " + std::to_string(rank_));
}

std::vector<LatticeVector> LaurentPoly::support() const {
  std::vector<LatticeVector> s;
  s.reserve(terms_.size());
  for (const auto &[m, c] : terms_) s.push_back(m);
  return s;
}

GaussianRational LaurentPoly::coefficient(const LatticeVector &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void LaurentPoly::add_term(const LatticeVector &m, const GaussianRational &c) {
  check_rank(m);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::shifted(const LatticeVector &shift) const {
  check_rank(shift);
  LaurentPoly out(rank_);
  for (const auto &[m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m + shift, c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational &c) const {
  LaurentPoly out(rank_);
  if (c.is_zero()) return out;
  for (const auto &[m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, a * c);
  return out;
}

GaussianRational LaurentPoly::evaluate(const ScalarTuple &point) const {
  if (point.size() != rank_) throw DimensionError("evaluation point has the wrong rank");
  GaussianRational acc;
  for (const auto &[m, c] : terms_) acc += c * character(m, point);
  return acc;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  if (o.rank_ != rank_) throw DimensionError("adding polynomials of different rank");
  for (const auto &[m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  if (o.rank_ != rank_) throw DimensionError("subtracting polynomials of different rank");
  for (const auto &[m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.rank_ != b.rank_) throw DimensionError("multiplying polynomials of different rank");
  LaurentPoly out(a.rank_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

std::vector<std::string> default_variable_names(std::size_t rank) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

std::string LaurentPoly::to_string() const {
  auto names = default_variable_names(rank_);
  return to_string(names);
}

std::string LaurentPoly::to_string(std::span<const std::string> vars) const {
  if (vars.size() != rank_) throw DimensionError("variable list does not match the polynomial rank");
  if (terms_.empty()) return "0";

  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[m, c] = *it;
    // A leading minus sign is pulled out of purely real or purely imaginary coefficients.
    bool negative = false;
    GaussianRational body = c;
    if (c.is_real() && sgn(c.re()) < 0) negative = true;
    if (sgn(c.re()) == 0 && sgn(c.im()) < 0) negative = true;
    if (negative) body = -c;

    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string coef;
    if (!body.is_real() && sgn(body.re()) != 0) {
      // "(a+bi)" with an explicit rational before 'i'.
      std::string im = mpq_class(abs(body.im())).get_str() + "i";
      coef = "(" + body.re().get_str() + (sgn(body.im()) > 0 ? "+" : "-") + im + ")";
    } else if (!body.is_real()) {
      coef = body.im() == 1 ? "i" : body.im().get_str() + "i";
    } else if (!body.is_one() || m.is_zero()) {
      coef = body.re().get_str();
    }

    std::string mono;
    for (std::size_t k = 0; k < rank_; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[k];
      if (m[k] != 1) mono += "^" + std::to_string(m[k]);
    }
    if (!coef.empty() && !mono.empty())
      out += coef + "*" + mono;
    else
      out += coef + mono;
  }
  return out;
}

MonomialMap MonomialMap::identity(std::size_t rank) { return {IntMatrix::identity(rank), ScalarTuple::ones(rank)}; }

MonomialMap MonomialMap::scaling(ScalarTuple scalars) {
  const std::size_t r = scalars.size();
  return {IntMatrix::identity(r), std::move(scalars)};
}

LaurentPoly MonomialMap::pullback(const LaurentPoly &p) const { return monomial_substitute(p, exponents, scalars); }

ScalarTuple MonomialMap::image(const ScalarTuple &x) const {
  std::vector<GaussianRational> y;
  y.reserve(x.size());
  for (std::size_t i = 0; i < exponents.rows(); ++i) y.push_back(scalars[i] * character(exponents.row(i), x));
  return ScalarTuple(std::move(y));
}

MonomialMap compose(const MonomialMap &outer, const MonomialMap &inner) {
  // inner: t_i -> mu_i t^{B_i}; applying outer to that gives mu_i chi^{B_i}(lambda) t^{(B A)_i}.
  std::vector<GaussianRational> scalars;
  scalars.reserve(inner.scalars.size());
  for (std::size_t i = 0; i < inner.exponents.rows(); ++i)
    scalars.push_back(inner.scalars[i] * character(inner.exponents.row(i), outer.scalars));
  return {inner.exponents * outer.exponents, ScalarTuple(std::move(scalars))};
}

LaurentPoly monomial_substitute(const LaurentPoly &p, const IntMatrix &A, const ScalarTuple &lam) {
  const std::size_t r = p.rank();
  if (A.rows() != r || A.cols() != r || lam.size() != r)
    throw DimensionError("substitution data does not match the polynomial rank");
  if (!is_unimodular(A)) throw DimensionError("substitution matrix is not unimodular");
  const IntMatrix At = A.transpose();
  LaurentPoly out(r);
  for (const auto &[m, c] : p.terms()) out.add_term(At.apply(m), c * character(m, lam));
  return out;
}

std::optional<MonomialFactor> proportional_monomial_factor(const LaurentPoly &p, const LaurentPoly &q) {
  if (p.is_zero() || q.is_zero()) throw InputError("proportionality test on a zero polynomial");
  if (p.rank() != q.rank()) throw DimensionError("proportionality test on polynomials of different rank");
  if (p.size() != q.size()) return std::nullopt;

  // Both maps are sorted and a shift preserves lexicographic order, so the
  // terms pair up in sequence.
  auto pit = p.terms().begin();
  auto qit = q.terms().begin();
  const LatticeVector shift = pit->first - qit->first;
  const GaussianRational alpha = pit->second / qit->second;
  for (; qit != q.terms().end(); ++pit, ++qit) {
    if (pit->first != qit->first + shift) return std::nullopt;
    if (pit->second != alpha * qit->second) return std::nullopt;
  }
  return MonomialFactor{alpha, shift};
}

std::vector<LatticeVector> support_differences(std::span<const LaurentPoly> polys) {
  if (polys.empty()) throw InputError("support_differences needs at least one polynomial");
  const std::size_t r = polys.front().rank();
  std::vector<LatticeVector> out;
  for (const auto &p : polys) {
    if (p.is_zero()) throw InputError("zero polynomial has no support");
    if (p.rank() != r) throw DimensionError("polynomials of different rank");
    const LatticeVector &m0 = p.terms().begin()->first;
    for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it) out.push_back(it->first - m0);
  }
  return out;
}

} // namespace toral
