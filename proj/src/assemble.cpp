#include "toral/assemble.hpp"

#include "toral/error.hpp"

namespace toral {

namespace {

std::string script_digits(std::size_t n, const char *const glyphs[10]) {
  std::string digits = std::to_string(n);
  std::string out;
  for (char d : digits) out += glyphs[d - '0'];
  return out;
}

const char *const kSub[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char *const kSup[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string sub(std::size_t n) { return script_digits(n, kSub); }
std::string sup(std::size_t n) { return script_digits(n, kSup); }

AutFormula render_formula(const AutStructure &a) {
  AutFormula f;
  f.s = a.torus_rank_s;
  f.rank_E_Y = a.rank_E_Y;
  if (a.is_torus) {
    f.aut_y = "1";
    f.text = "T" + sub(f.s) + " ⋊ GL" + sub(f.s) + "(ℤ)";
    return f;
  }
  f.aut_y = a.aut_y_order ? "Aut(Y), |Aut(Y)| = " + a.aut_y_order->get_str() : "Aut(Y)";
  if (f.s == 0) {
    f.text = "Aut(Y)";
    return f;
  }
  f.text = "Aut(Y) ⋉ (GL" + sub(f.s) + "(ℤ) ⋉ (ℤ" + sup(f.rank_E_Y) + " × K*)" + sup(f.s) + ")";
  return f;
}

} // namespace

AutStructure aut_structure(std::span<const LaurentPoly> gens, std::size_t rank, const GaffOptions &options) {
  const SplitResult split = split_torus_factor(gens, rank);
  AutStructure a;
  a.torus_rank_s = split.torus_rank;
  a.rank_E_Y = rank - split.torus_rank;
  a.is_torus = split.is_torus;

  if (split.is_torus) {
    // Y is a point: H(Y) and Aut(Y) are trivial.
    a.aut_y_order = mpz_class(1);
    a.notes.push_back("X is a torus of rank " + std::to_string(rank));
  } else {
    const std::size_t l = a.rank_E_Y;
    a.h_y = quasitorus_HX(lattice_MX(split.residual_generators, l), l);
    if (split.residual_generators.size() == 1) {
      const GaffGroup group = enumerate_gaff(split.residual_generators.front(), options);
      a.gaff_order = mpz_class(static_cast<unsigned long>(group.order()));
      a.gaff_abelian = group.is_abelian();
      a.gaff_element_orders = group.element_orders();
      if (auto hy = a.h_y.order()) a.aut_y_order = *hy * *a.gaff_order;
    } else {
      a.notes.push_back("Aut(Y) not computed: the residual ideal has " +
                        std::to_string(split.residual_generators.size()) +
                        " generators; only hypersurfaces (rk E(Y) = dim Y + 1) are handled");
    }
  }
  a.formula = render_formula(a);
  return a;
}

} // namespace toral
