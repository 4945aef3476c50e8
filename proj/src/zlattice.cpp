#include "toral/zlattice.hpp"

#include <utility>

#include "toral/error.hpp"

namespace toral {

namespace {

// Index of the row in [from, rows) with the smallest nonzero |A(i, col)|.
std::optional<std::size_t> min_abs_in_column(const IntMatrix &A, std::size_t col, std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t i = from; i < A.rows(); ++i) {
    if (sgn(A(i, col)) == 0) continue;
    if (!best || mpz_cmpabs(A(i, col).get_mpz_t(), A(*best, col).get_mpz_t()) < 0) best = i;
  }
  return best;
}

mpz_class floor_div(const mpz_class &a, const mpz_class &b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

HermiteDecomposition hnf(const IntMatrix &A) {
  HermiteDecomposition out{A, IntMatrix::identity(A.rows()), 0};
  IntMatrix &H = out.H;
  IntMatrix &U = out.U;
  std::size_t row = 0;
  for (std::size_t col = 0; col < H.cols() && row < H.rows(); ++col) {
    bool have_pivot = false;
    while (true) {
      auto p = min_abs_in_column(H, col, row);
      if (!p) break;
      have_pivot = true;
      H.swap_rows(row, *p);
      U.swap_rows(row, *p);
      bool cleared = true;
      for (std::size_t i = row + 1; i < H.rows(); ++i) {
        if (sgn(H(i, col)) == 0) continue;
        mpz_class q = H(i, col) / H(row, col);
        H.add_row_multiple(i, row, -q);
        U.add_row_multiple(i, row, -q);
        if (sgn(H(i, col)) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (sgn(H(row, col)) < 0) {
      H.negate_row(row);
      U.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q = floor_div(H(i, col), H(row, col));
      H.add_row_multiple(i, row, -q);
      U.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  out.rank = row;
  return out;
}

SmithDecomposition snf(const IntMatrix &A) {
  SmithDecomposition out{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols()), {}};
  IntMatrix &S = out.S;
  IntMatrix &U = out.U;
  IntMatrix &V = out.V;
  const std::size_t diag = std::min(S.rows(), S.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    bool empty_block = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < S.rows(); ++i)
        for (std::size_t j = t; j < S.cols(); ++j)
          if (sgn(S(i, j)) != 0 && (!best || mpz_cmpabs(S(i, j).get_mpz_t(), S(best->first, best->second).get_mpz_t()) < 0)) best = {i, j};
      if (!best) {
        empty_block = true;
        break;
      }
      S.swap_rows(t, best->first);
      U.swap_rows(t, best->first);
      S.swap_cols(t, best->second);
      V.swap_cols(t, best->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < S.rows(); ++i) {
        if (sgn(S(i, t)) == 0) continue;
        mpz_class q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (sgn(S(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < S.cols(); ++j) {
        if (sgn(S(t, j)) == 0) continue;
        mpz_class q = S(t, j) / S(t, t);
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (sgn(S(t, j)) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce that the pivot divides the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < S.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < S.cols(); ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            S.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (empty_block) break;
    if (sgn(S(t, t)) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
    out.invariant_factors.push_back(S(t, t));
  }
  return out;
}

std::vector<LatticeVector> lattice_basis(std::span<const LatticeVector> generators, std::size_t rank) {
  auto h = hnf(IntMatrix::from_rows(generators, rank));
  std::vector<LatticeVector> basis;
  basis.reserve(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) basis.push_back(h.H.row(i));
  return basis;
}

std::vector<LatticeVector> kernel_basis(const IntMatrix &A) {
  auto h = hnf(A.transpose());
  std::vector<LatticeVector> kernel;
  for (std::size_t i = h.rank; i < h.U.rows(); ++i) kernel.push_back(h.U.row(i));
  return lattice_basis(kernel, A.cols());
}

std::optional<std::vector<std::int64_t>> solve_in_sublattice(std::span<const LatticeVector> basis,
                                                             const LatticeVector &w) {
  const std::size_t r = w.size();
  for (const auto &b : basis)
    if (b.size() != r) throw DimensionError("sublattice basis and target differ in rank");
  const IntMatrix B = IntMatrix::from_rows(basis, r);
  auto h = hnf(B);
  if (h.rank != basis.size()) throw DimensionError("sublattice basis vectors are linearly dependent");

  // Forward substitution along the pivots of H: w = sum_i y_i H_i.
  std::vector<mpz_class> residual(r);
  for (std::size_t c = 0; c < r; ++c) residual[c] = static_cast<long>(w[c]);
  std::vector<mpz_class> y(basis.size());
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.rank; ++i) {
    while (sgn(h.H(i, col)) == 0) ++col;
    if (!mpz_divisible_p(residual[col].get_mpz_t(), h.H(i, col).get_mpz_t())) return std::nullopt;
    y[i] = residual[col] / h.H(i, col);
    for (std::size_t c = col; c < r; ++c) residual[c] -= y[i] * h.H(i, c);
  }
  for (const auto &x : residual)
    if (sgn(x) != 0) return std::nullopt;

  // H = U B, so w = (y U) B.
  std::vector<std::int64_t> g(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) acc += y[i] * h.U(i, j);
    g[j] = to_int64(acc);
  }
  return g;
}

mpz_class determinant(const IntMatrix &A) {
  if (!A.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(M(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(M(p, k)) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix &A) {
  if (!A.is_square() || A.rows() == 0) return A.is_square();
  mpz_class d = determinant(A);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix &A) {
  if (!is_unimodular(A)) throw DimensionError("matrix is not unimodular");
  // The HNF of a unimodular matrix is the identity, so U is the inverse.
  return hnf(A).U;
}

} // namespace toral
