#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "toral/int_matrix.hpp"
#include "toral/lattice_vector.hpp"

namespace toral {

struct HermiteDecomposition {
  IntMatrix H; // row Hermite normal form of the source
  IntMatrix U; // unimodular, U * A == H
  std::size_t rank = 0; // number of nonzero rows of H (they come first)
};

/// Row Hermite normal form.
///
/// H is in row echelon form, every pivot is positive, and entries above a
/// pivot lie in [0, pivot). Zero rows trail.
HermiteDecomposition hnf(const IntMatrix &A);

struct SmithDecomposition {
  IntMatrix U; // rows x rows, unimodular
  IntMatrix S; // diagonal, nonnegative
  IntMatrix V; // cols x cols, unimodular
  std::vector<mpz_class> invariant_factors; // nonzero diagonal of S, d_1 | d_2 | ...
};

/// Smith normal form with witnesses: U * A * V == S.
///
/// Pivots are chosen by minimal absolute value in the remaining block.
SmithDecomposition snf(const IntMatrix &A);

// HNF-reduced basis of {x in Z^cols : A x = 0}.
std::vector<LatticeVector> kernel_basis(const IntMatrix &A);

// Integer coordinates g with w == sum g_j basis_j. Throws DimensionError
// when the basis vectors are dependent or of mixed length.
std::optional<std::vector<std::int64_t>> solve_in_sublattice(std::span<const LatticeVector> basis,
                                                             const LatticeVector &w);

// Nonzero rows of the HNF of the given vectors (the canonical lattice basis).
std::vector<LatticeVector> lattice_basis(std::span<const LatticeVector> generators, std::size_t rank);

mpz_class determinant(const IntMatrix &A); // Bareiss, exact
bool is_unimodular(const IntMatrix &A);
IntMatrix unimodular_inverse(const IntMatrix &A); // throws DimensionError if not unimodular

} // namespace toral
