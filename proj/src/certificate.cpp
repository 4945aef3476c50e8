#include "toral/certificate.hpp"

#include <algorithm>

#include "toral/error.hpp"
#include "toral/zlattice.hpp"

namespace toral {

AffineLatticeMap AutoCertificate::affine_map() const { return {linear.transpose(), translation_v}; }

std::optional<MonomialMap> AutoCertificate::monomial_map() const {
  if (!explicit_lambda) return std::nullopt;
  return MonomialMap{linear, *explicit_lambda};
}

AdaptedRelations adapted_basis(const LaurentPoly &h) {
  if (h.is_zero()) throw InputError("adapted basis of the zero polynomial");
  const auto support = h.support();
  const std::size_t r = h.rank();
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < support.size(); ++i) diffs.push_back(support[i] - support[0]);

  // U D V = S; the first k rows of U D are d_j times the adapted basis, and
  // they are integer combinations (rows of U) of the differences m - m0.
  const IntMatrix D = IntMatrix::from_rows(diffs, r);
  const auto smith = snf(D);
  const IntMatrix UD = smith.U * D;
  AdaptedRelations out;
  out.index = 1;
  for (std::size_t j = 0; j < smith.invariant_factors.size(); ++j) {
    out.basis_f.push_back(UD.row(j));
    std::vector<mpz_class> coeffs(support.size());
    for (std::size_t i = 1; i < support.size(); ++i) coeffs[i] = smith.U(j, i - 1);
    out.coefficients.push_back(std::move(coeffs));
    out.index *= smith.invariant_factors[j];
  }
  if (smith.invariant_factors.size() < r) out.index = 0;
  return out;
}

namespace {

std::vector<GaussianRational> coefficients_of(const LaurentPoly &h) {
  std::vector<GaussianRational> alpha;
  for (const auto &[m, c] : h.terms()) alpha.push_back(c);
  return alpha;
}

std::optional<std::vector<std::size_t>> permutation_of(const std::vector<LatticeVector> &support,
                                                       const AffineLatticeMap &phi) {
  std::vector<std::size_t> sigma(support.size());
  std::vector<bool> hit(support.size(), false);
  for (std::size_t i = 0; i < support.size(); ++i) {
    const LatticeVector image = phi.apply(support[i]);
    auto it = std::lower_bound(support.begin(), support.end(), image);
    if (it == support.end() || *it != image) return std::nullopt;
    const auto j = static_cast<std::size_t>(it - support.begin());
    if (hit[j]) return std::nullopt;
    hit[j] = true;
    sigma[i] = j;
  }
  return sigma;
}

// Solves chi^{f_j}(lambda) = values[j] when the f_j form a basis of Z^r:
// lambda_i = chi^{e_i}(lambda) = prod_j values[j]^{g_ij} with e_i = sum_j g_ij f_j.
ScalarTuple solve_torus_point(const std::vector<LatticeVector> &basis_f, const std::vector<GaussianRational> &values,
                              std::size_t r) {
  std::vector<GaussianRational> lambda;
  for (std::size_t i = 0; i < r; ++i) {
    auto g = solve_in_sublattice(basis_f, LatticeVector::unit(r, i));
    if (!g) throw InconsistencyError("adapted basis does not span Z^r");
    GaussianRational x(1);
    for (std::size_t j = 0; j < g->size(); ++j)
      if ((*g)[j] != 0) x *= values[j].pow((*g)[j]);
    lambda.push_back(std::move(x));
  }
  return ScalarTuple(std::move(lambda));
}

} // namespace

AutoCertificate lift_certificate(const LaurentPoly &h, const AffineLatticeMap &phi) {
  const std::size_t r = h.rank();
  if (phi.rank() != r) throw DimensionError("affine map and polynomial differ in rank");
  const auto support = h.support();
  const auto adapted = adapted_basis(h);
  if (adapted.basis_f.size() < r) throw ScopeError("support differences are not of full rank");
  auto sigma = permutation_of(support, phi);
  if (!sigma) throw InconsistencyError("affine map does not preserve the support");

  const auto alpha = coefficients_of(h);
  // ratio_m = (alpha_{phi(m)} / alpha_{phi(m0)}) / (alpha_m / alpha_{m0}) is the value chi^{m - m0}(lambda) must take.
  std::vector<GaussianRational> ratio(support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    ratio[i] = (alpha[(*sigma)[i]] / alpha[(*sigma)[0]]) / (alpha[i] / alpha[0]);

  AutoCertificate cert;
  cert.linear = phi.linear().transpose();
  cert.translation_v = phi.translation();
  cert.basis_f = adapted.basis_f;
  for (const auto &coeffs : adapted.coefficients) {
    GaussianRational c(1);
    for (std::size_t i = 1; i < support.size(); ++i)
      if (sgn(coeffs[i]) != 0) c *= ratio[i].pow(to_int64(coeffs[i]));
    cert.constraint_values.push_back(std::move(c));
  }

  if (adapted.index == 1) {
    cert.explicit_lambda = solve_torus_point(cert.basis_f, cert.constraint_values, r);
    const LaurentPoly image = monomial_substitute(h, cert.linear, *cert.explicit_lambda);
    auto factor = proportional_monomial_factor(image, h);
    if (!factor) throw InconsistencyError("affine map is not in GAff(M, h): lifted map does not preserve h");
    cert.proportionality = AutoCertificate::Proportionality{factor->alpha, -factor->shift};
  }

  if (!verify_certificate(h, cert)) throw InconsistencyError("affine map is not in GAff(M, h)");
  return cert;
}

AutoCertificate certificate_from_monomial_map(const LaurentPoly &h, const MonomialMap &psi) {
  const std::size_t r = h.rank();
  if (psi.exponents.rows() != r || psi.scalars.size() != r)
    throw DimensionError("monomial map and polynomial differ in rank");
  auto factor = proportional_monomial_factor(psi.pullback(h), h);
  if (!factor) throw InconsistencyError("monomial map does not send h to a unit multiple of h");

  const auto adapted = adapted_basis(h);
  AutoCertificate cert;
  cert.linear = psi.exponents;
  cert.translation_v = -factor->shift;
  cert.basis_f = adapted.basis_f;
  for (const auto &f : cert.basis_f) cert.constraint_values.push_back(character(f, psi.scalars));
  cert.explicit_lambda = psi.scalars;
  cert.proportionality = AutoCertificate::Proportionality{factor->alpha, cert.translation_v};
  return cert;
}

bool verify_certificate(const LaurentPoly &h, const AutoCertificate &cert) {
  const std::size_t r = h.rank();
  if (h.is_zero()) throw InputError("certificate for the zero polynomial");
  if (cert.linear.rows() != r || cert.linear.cols() != r || cert.translation_v.size() != r)
    throw DimensionError("certificate shape does not match the polynomial rank");
  if (cert.constraint_values.size() != cert.basis_f.size())
    throw DimensionError("certificate has " + std::to_string(cert.constraint_values.size()) + " values for " +
                         std::to_string(cert.basis_f.size()) + " basis vectors");
  for (const auto &f : cert.basis_f)
    if (f.size() != r) throw DimensionError("certificate basis vector of the wrong rank");

  if (!is_unimodular(cert.linear)) return false;
  if (std::any_of(cert.constraint_values.begin(), cert.constraint_values.end(),
                  [](const GaussianRational &c) { return c.is_zero(); }))
    return false;
  if (cert.explicit_lambda.has_value() != cert.proportionality.has_value()) return false;

  const auto support = h.support();
  const auto sigma = permutation_of(support, cert.affine_map());
  if (!sigma) return false;

  const auto alpha = coefficients_of(h);
  for (std::size_t b = 0; b < support.size(); ++b)
    for (std::size_t c = 0; c < support.size(); ++c) {
      if (b == c) continue;
      auto g = solve_in_sublattice(cert.basis_f, support[b] - support[c]);
      if (!g) throw InconsistencyError("support difference " + (support[b] - support[c]).to_string() +
                                       " is outside the certificate lattice");
      GaussianRational rhs = alpha[b] / alpha[c];
      for (std::size_t j = 0; j < g->size(); ++j)
        if ((*g)[j] != 0) rhs *= cert.constraint_values[j].pow((*g)[j]);
      if (alpha[(*sigma)[b]] / alpha[(*sigma)[c]] != rhs) return false;
    }

  if (cert.explicit_lambda) {
    const ScalarTuple &lambda = *cert.explicit_lambda;
    if (lambda.size() != r) throw DimensionError("explicit torus point of the wrong rank");
    for (std::size_t j = 0; j < cert.basis_f.size(); ++j)
      if (character(cert.basis_f[j], lambda) != cert.constraint_values[j]) return false;
    auto factor = proportional_monomial_factor(monomial_substitute(h, cert.linear, lambda), h);
    if (!factor) return false;
    if (factor->alpha != cert.proportionality->alpha || -factor->shift != cert.proportionality->v) return false;
    if (cert.proportionality->v != cert.translation_v) return false;
  }
  return true;
}

} // namespace toral
