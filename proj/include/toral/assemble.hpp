#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "toral/gaff.hpp"
#include "toral/laurent.hpp"
#include "toral/structure.hpp"

namespace toral {

// Aut(X) = Aut(Y) ⋉ (GL_s(Z) ⋉ (Z^rank_E_Y × K*)^s), rendered symbolically.
struct AutFormula {
  std::string aut_y; // "Aut(Y)", "1" for a point, or an order like "|Aut(Y)| = 24"
  std::size_t s = 0;
  std::size_t rank_E_Y = 0;
  std::string text;
};

struct AutStructure {
  std::size_t torus_rank_s = 0;
  std::size_t rank_E_Y = 0;
  Quasitorus h_y;
  std::optional<mpz_class> gaff_order;
  std::optional<mpz_class> aut_y_order;
  std::optional<bool> gaff_abelian;
  std::vector<std::size_t> gaff_element_orders;
  bool is_torus = false;
  AutFormula formula;
  std::vector<std::string> notes;
};

AutStructure aut_structure(std::span<const LaurentPoly> gens, std::size_t rank, const GaffOptions &options = {});

} // namespace toral
