#include "toral/structure.hpp"

#include "toral/error.hpp"
#include "toral/zlattice.hpp"

namespace toral {

std::optional<mpz_class> Quasitorus::order() const {
  if (torus_rank != 0) return std::nullopt;
  mpz_class n = 1;
  for (const auto &b : finite_factors) n *= b;
  return n;
}

namespace {

void check_generators(std::span<const LaurentPoly> gens, std::size_t rank) {
  for (const auto &g : gens) {
    if (g.rank() != rank) throw DimensionError("generator rank " + std::to_string(g.rank()) +
                                               " differs from ambient rank " + std::to_string(rank));
    if (g.is_zero()) throw InputError("zero generator");
  }
}

} // namespace

std::vector<LatticeVector> lattice_MX(std::span<const LaurentPoly> gens, std::size_t rank) {
  check_generators(gens, rank);
  if (gens.empty()) return {};
  return lattice_basis(support_differences(gens), rank);
}

Quasitorus quasitorus_HX(std::span<const LatticeVector> mx_basis, std::size_t rank) {
  Quasitorus q;
  if (mx_basis.empty()) {
    q.torus_rank = rank;
    return q;
  }
  auto smith = snf(IntMatrix::from_rows(mx_basis, rank));
  for (const auto &d : smith.invariant_factors)
    if (d > 1) q.finite_factors.push_back(d);
  q.torus_rank = rank - smith.invariant_factors.size();
  return q;
}

SplitResult split_torus_factor(std::span<const LaurentPoly> gens, std::size_t rank) {
  check_generators(gens, rank);
  for (const auto &g : gens)
    if (g.size() < 2) throw InputError("generator " + g.to_string() + " is a unit; it defines the empty set");

  SplitResult out;
  const auto basis = lattice_MX(gens, rank);
  const std::size_t l = basis.size();
  out.torus_rank = rank - l;
  out.is_torus = gens.empty();
  out.change_of_basis = IntMatrix::identity(rank);
  if (out.is_torus) return out;

  // Coordinates adapted to M(X): m -> m V puts M(X) inside the first l axes.
  if (l < rank) out.change_of_basis = snf(IntMatrix::from_rows(basis, rank)).V;

  const ScalarTuple ones = ScalarTuple::ones(rank);
  for (const auto &g : gens) {
    LaurentPoly moved = monomial_substitute(g, out.change_of_basis, ones);
    moved = moved.shifted(-moved.terms().begin()->first);
    LaurentPoly residual(l);
    for (const auto &[m, c] : moved.terms()) {
      LatticeVector head(l);
      for (std::size_t k = 0; k < rank; ++k) {
        if (k < l)
          head[k] = m[k];
        else if (m[k] != 0)
          throw InconsistencyError("generator " + g.to_string() +
                                   " is not homogeneous in the split torus variables");
      }
      residual.add_term(head, c);
    }
    out.residual_generators.push_back(std::move(residual));
  }
  return out;
}

} // namespace toral
