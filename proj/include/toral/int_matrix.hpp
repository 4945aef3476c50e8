#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "toral/lattice_vector.hpp"

namespace toral {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// A matrix with zero rows is allowed and stands for an empty family of
/// vectors (e.g. the basis of the trivial lattice); the column count is
/// still meaningful in that case.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Rows are the given vectors; `cols` is used when the list is empty.
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const LatticeVector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  mpz_class &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  LatticeVector row(std::size_t r) const;   // throws DimensionError on int64 overflow
  LatticeVector column(std::size_t c) const;
  std::vector<LatticeVector> row_vectors() const;
  bool is_zero_row(std::size_t r) const;

  // Elementary row/column operations used by the normal forms.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class &k); // row dst += k * row src
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class &k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Matrix acting on a column vector.
  LatticeVector apply(const LatticeVector &v) const;

  std::string to_string() const; // "[[1,0],[0,1]]"

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

std::int64_t to_int64(const mpz_class &z); // throws DimensionError if it does not fit

} // namespace toral
