#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatcode/field.hpp"

namespace fatcode {

// Dense row-major matrix over a single field. All eliminations are exact;
// pivoting always selects the first row with a nonzero entry in the current
// column, which makes rank, RREF, and nullspace bases deterministic.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  static Matrix identity(std::size_t n, const FieldSpec& field);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          const FieldSpec& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const;
  Matrix operator*(const Matrix& other) const;

  // Matrix * column vector.
  std::vector<Scalar> apply(const std::vector<Scalar>& vec) const;

  // Appends the rows of another matrix with the same column count.
  void append_rows(const Matrix& other);
  void append_row(const std::vector<Scalar>& row);

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  std::string str() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;  // strictly increasing
};

// Reduced row echelon form by Gauss-Jordan: pivots normalized to 1, zeros
// above and below, zero rows swept to the bottom.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Canonical basis of the right kernel, one column per free column of the
// RREF: entry 1 at the free column, minus the RREF coefficients at the
// pivot columns, zero elsewhere. Columns are ordered by free column index.
// A matrix with trivial kernel yields a (cols x 0) matrix.
Matrix nullspace_basis(const Matrix& m);

}  // namespace fatcode
