#pragma once

#include <optional>
#include <vector>

#include "toral/gaff.hpp"
#include "toral/int_matrix.hpp"
#include "toral/laurent.hpp"

namespace toral {

/// Witness that a monomial automorphism of the ambient torus preserves V(h).
///
/// `linear` is the exponent matrix of the pullback (row i = exponents of
/// psi^*(t_i)); it is the transpose of the linear part of the affine map phi
/// acting on column vectors. The torus part lambda is pinned down on M(Y)
/// through chi^{f_j}(lambda) = constraint_values[j]; an explicit lambda is
/// only stored when it lies in Q(i)^r.
struct AutoCertificate {
  struct Proportionality {
    GaussianRational alpha;
    LatticeVector v; // psi^*(h) == alpha * chi^{-v} * h
    friend bool operator==(const Proportionality &, const Proportionality &) = default;
  };

  IntMatrix linear;
  std::vector<LatticeVector> basis_f;
  std::vector<GaussianRational> constraint_values;
  std::optional<ScalarTuple> explicit_lambda;
  LatticeVector translation_v; // phi(0)
  std::optional<Proportionality> proportionality;

  // phi(m) = linear^T m + translation_v
  AffineLatticeMap affine_map() const;
  std::optional<MonomialMap> monomial_map() const; // present with explicit_lambda

  friend bool operator==(const AutoCertificate &, const AutoCertificate &) = default;
};

// Lexicographically smallest support point m0 and an SNF-adapted basis f_j
// of M(h) with f_j = sum_m coefficients[j][m] (m - m0); coefficients are
// indexed like h.support().
struct AdaptedRelations {
  std::vector<LatticeVector> basis_f;
  std::vector<std::vector<mpz_class>> coefficients;
  mpz_class index; // [Z^r : M(h)]
};
AdaptedRelations adapted_basis(const LaurentPoly &h);

/// Builds the certificate of phi following the constructive lifting: the
/// values chi^{f_j}(lambda) are products of coefficient ratios, and when M(h)
/// has index 1 the torus element lambda itself is recovered in Q(i)^r.
/// Throws InconsistencyError when phi is not in GAff(M, h).
AutoCertificate lift_certificate(const LaurentPoly &h, const AffineLatticeMap &phi);

// Certificate for an explicitly given monomial map (e.g. one written down by
// hand). Throws InconsistencyError if psi^*(h) is not a unit multiple of h.
AutoCertificate certificate_from_monomial_map(const LaurentPoly &h, const MonomialMap &psi);

/// Checks a certificate with exact arithmetic only.
///
/// For all b, c in supp h the ratio alpha_{phi(b)} / alpha_{phi(c)} must equal
/// (alpha_b / alpha_c) * prod_j c_j^{g_j}, where b - c = sum_j g_j f_j. With an
/// explicit lambda the substituted polynomial is additionally compared with
/// the recorded unit multiple of h. Throws InconsistencyError when some b - c
/// is outside the span of basis_f.
bool verify_certificate(const LaurentPoly &h, const AutoCertificate &cert);

} // namespace toral
