#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toral/gaussian.hpp"
#include "toral/int_matrix.hpp"
#include "toral/lattice_vector.hpp"

namespace toral {

/// A point of the torus T_r with Gaussian-rational coordinates.
class ScalarTuple {
public:
  ScalarTuple() = default;
  explicit ScalarTuple(std::vector<GaussianRational> values); // throws DimensionError on a zero entry
  static ScalarTuple ones(std::size_t rank);

  std::size_t size() const noexcept { return values_.size(); }
  const GaussianRational &operator[](std::size_t i) const { return values_[i]; }
  std::span<const GaussianRational> values() const noexcept { return values_; }

  friend bool operator==(const ScalarTuple &, const ScalarTuple &) = default;

private:
  std::vector<GaussianRational> values_;
};

// chi^m(point) = prod point_i^{m_i}.
GaussianRational character(const LatticeVector &m, const ScalarTuple &point);

/// Sparse Laurent polynomial over Q(i) in a fixed number of variables.
///
/// Terms live in a map ordered lexicographically on exponents; zero
/// coefficients are never stored, so `support()` is exactly the key set
/// and equality is structural.
class LaurentPoly {
public:
  using TermMap = std::map<LatticeVector, GaussianRational>;

  explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}
  static LaurentPoly monomial(const LatticeVector &exponent, GaussianRational coefficient = 1);
  static LaurentPoly constant(std::size_t rank, GaussianRational c);

  std::size_t rank() const noexcept { return rank_; }
  const TermMap &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Support in ascending lexicographic order; front() is the minimum.
  std::vector<LatticeVector> support() const;
  // Zero when m is not in the support.
  GaussianRational coefficient(const LatticeVector &m) const;

  // Adds c * chi^m, dropping the term if it cancels.
  void add_term(const LatticeVector &m, const GaussianRational &c);

  // chi^shift * p
  LaurentPoly shifted(const LatticeVector &shift) const;
  LaurentPoly scaled(const GaussianRational &c) const;
  GaussianRational evaluate(const ScalarTuple &point) const;

  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);

  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

  // Canonical text: terms in descending lexicographic order, parseable by
  // parse_laurent with the same variable list. Default names are t1..tr.
  std::string to_string(std::span<const std::string> vars) const;
  std::string to_string() const;

private:
  void check_rank(const LatticeVector &m) const;

  std::size_t rank_;
  TermMap terms_;
};

std::vector<std::string> default_variable_names(std::size_t rank);

/// Ambient torus automorphism given by its pullback t_i -> lambda_i * t^{row_i(exponents)}.
struct MonomialMap {
  IntMatrix exponents; // r x r, det +-1; row i is the exponent vector of the image of t_i
  ScalarTuple scalars;

  static MonomialMap identity(std::size_t rank);
  // Pure torus translation t_i -> scalars_i * t_i.
  static MonomialMap scaling(ScalarTuple scalars);

  LaurentPoly pullback(const LaurentPoly &p) const;
  // The point psi(x) for x in the torus; pullback(p).evaluate(x) == p.evaluate(image(x)).
  ScalarTuple image(const ScalarTuple &x) const;

  friend bool operator==(const MonomialMap &, const MonomialMap &) = default;
};

// Pullback composition: compose(outer, inner).pullback(p) == outer.pullback(inner.pullback(p)).
// As maps of the torus this is inner ∘ outer.
MonomialMap compose(const MonomialMap &outer, const MonomialMap &inner);

// Each term alpha_m chi^m becomes alpha_m chi^m(lam) chi^{m A}, where m A is
// the integer combination of the rows of A with weights m.
LaurentPoly monomial_substitute(const LaurentPoly &p, const IntMatrix &A, const ScalarTuple &lam);

struct MonomialFactor {
  GaussianRational alpha;
  LatticeVector shift;
  friend bool operator==(const MonomialFactor &, const MonomialFactor &) = default;
};

// (alpha, v) with p == alpha * chi^v * q, if it exists.
std::optional<MonomialFactor> proportional_monomial_factor(const LaurentPoly &p, const LaurentPoly &q);

// For every polynomial with support m_0 < m_1 < ... < m_k, the vectors
// m_i - m_0 (i >= 1), concatenated. They generate the same lattice as all
// pairwise support differences.
std::vector<LatticeVector> support_differences(std::span<const LaurentPoly> polys);

} // namespace toral
