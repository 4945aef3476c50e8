#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "toral/int_matrix.hpp"
#include "toral/laurent.hpp"

namespace toral {

/// Quasitorus (Z/b_1 x ... x Z/b_k) x T_rank.
struct Quasitorus {
  std::vector<mpz_class> finite_factors; // each >= 2, b_1 | b_2 | ...
  std::size_t torus_rank = 0;

  bool is_finite() const noexcept { return torus_rank == 0; }
  // Product of the cyclic orders; nullopt for a positive-dimensional group.
  std::optional<mpz_class> order() const;

  friend bool operator==(const Quasitorus &, const Quasitorus &) = default;
};

struct SplitResult {
  IntMatrix change_of_basis; // r x r unimodular, applied with monomial_substitute
  std::size_t torus_rank = 0; // s
  std::vector<LaurentPoly> residual_generators; // rank r - s, normalized to contain the origin
  bool is_torus = false;
};

// HNF basis of the lattice generated by all support differences. The
// generators are taken to be minimal elements of the ideal (caller contract).
std::vector<LatticeVector> lattice_MX(std::span<const LaurentPoly> gens, std::size_t rank);

// H(X) = { t : chi^m(t) = 1 for m in M(X) }, read off the Smith form of the basis.
Quasitorus quasitorus_HX(std::span<const LatticeVector> mx_basis, std::size_t rank);

/// Splits off the maximal torus factor X = Y x T_s.
///
/// The coordinate change comes from an adapted basis of M(X); after it every
/// generator, divided by its lexicographically smallest monomial, involves
/// only the first r - s variables. When s == 0 the change is the identity.
/// Throws InconsistencyError if a generator is not homogeneous in the split
/// variables and InputError on a unit (single-term) generator.
SplitResult split_torus_factor(std::span<const LaurentPoly> gens, std::size_t rank);

} // namespace toral
