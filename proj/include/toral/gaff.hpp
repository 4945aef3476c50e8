#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toral/int_matrix.hpp"
#include "toral/laurent.hpp"

namespace toral {

/// Invertible integer affine map m -> linear * m + translation of Z^r.
class AffineLatticeMap {
public:
  AffineLatticeMap() = default;
  // Throws DimensionError unless linear is square, unimodular and matches the translation.
  AffineLatticeMap(IntMatrix linear, LatticeVector translation);
  static AffineLatticeMap identity(std::size_t rank);

  const IntMatrix &linear() const noexcept { return linear_; }
  const LatticeVector &translation() const noexcept { return translation_; }
  std::size_t rank() const noexcept { return translation_.size(); }

  LatticeVector apply(const LatticeVector &m) const;
  AffineLatticeMap inverse() const;
  // (a * b).apply(m) == a.apply(b.apply(m))
  friend AffineLatticeMap operator*(const AffineLatticeMap &a, const AffineLatticeMap &b);
  friend bool operator==(const AffineLatticeMap &, const AffineLatticeMap &) = default;

private:
  IntMatrix linear_;
  LatticeVector translation_;
};

// A permutation of support indices: point i goes to point perm[i].
using Permutation = std::vector<std::size_t>;

Permutation compose_permutations(const Permutation &a, const Permutation &b); // a after b
Permutation invert_permutation(const Permutation &p);
std::size_t permutation_order(const Permutation &p);
// Cycle notation over 1-based indices, "()" for the identity.
std::string cycle_notation(const Permutation &p);

struct GaffGroup {
  std::vector<LatticeVector> support; // ascending lexicographic
  std::vector<AffineLatticeMap> elements; // sorted by their permutations; identity first
  std::vector<Permutation> perm_action; // parallel to elements

  std::size_t order() const noexcept { return elements.size(); }
  bool is_abelian() const;
  std::vector<std::size_t> element_orders() const; // ascending
};

struct GaffOptions {
  std::size_t max_support = 9;
  unsigned threads = 1;
};

// Integer relations sum a_m m = 0 with sum a_m = 0 among the support points,
// as an HNF basis of vectors indexed like `support`.
std::vector<LatticeVector> relation_lattice_basis(std::span<const LatticeVector> support);

// Coefficient condition prod alpha_m^{a_m} == prod alpha_{phi(m)}^{a_m} for
// every relation in the basis. Throws InconsistencyError if phi does not
// preserve supp h.
bool eq2_holds(const LaurentPoly &h, const AffineLatticeMap &phi, std::span<const LatticeVector> relations);

// The affine map sending support[i] to support[sigma[i]], if it is integral
// and unimodular. Throws ScopeError if the support differences are not of
// full rank.
std::optional<AffineLatticeMap> affine_extension(std::span<const LatticeVector> support,
                                                 const Permutation &sigma);

/// All invertible integer affine maps preserving supp h and its coefficient
/// relations.
///
/// The search runs over permutations of the support. Points of an affine
/// basis are placed first; once their images are fixed the map is
/// determined and the remaining positions are forced, so only prefixes of
/// length r + 1 are branched on. Prefixes are also pruned by the content
/// (gcd) of pairwise differences, which every unimodular map preserves.
/// Top-level branches are spread over `options.threads` workers.
GaffGroup enumerate_gaff(const LaurentPoly &h, const GaffOptions &options = {});

} // namespace toral
