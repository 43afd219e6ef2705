#include "fatcode/matrix.hpp"

#include <sstream>
#include <utility>

namespace fatcode {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         const FieldSpec& field) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "ragged row list");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) {
        throw Error(ErrorKind::FieldMismatch, "row entry from a different field");
      }
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (field_ != other.field_) throw Error(ErrorKind::FieldMismatch, "product fields differ");
  if (cols_ != other.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ in product");
  }
  Matrix out(rows_, other.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Scalar& b = other.at(k, c);
        if (b.is_zero()) continue;
        out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& vec) const {
  if (vec.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "apply length");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !vec[c].is_zero()) out[r] += at(r, c) * vec[c];
  return out;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.cols_ != cols_) throw Error(ErrorKind::DimensionMismatch, "append_rows width");
  if (other.field_ != field_) throw Error(ErrorKind::FieldMismatch, "append_rows field");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void Matrix::append_row(const std::vector<Scalar>& row) {
  if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "append_row width");
  data_.insert(data_.end(), row.begin(), row.end());
  rows_ += 1;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
         data_ == other.data_;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << " ";
      out << at(r, c).str();
    }
    out << "]\n";
  }
  return out.str();
}

namespace {

// In-place Gauss-Jordan. Scans columns left to right, takes the first row
// with a nonzero entry at or below the current row, normalizes it, and
// clears the column everywhere else. Zero entries are skipped in the update
// loop; interpolation matrices are sparse enough that this matters.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = col; c < m.cols(); ++c) {
        std::swap(m.at(sel, c), m.at(pivot_row, c));
      }
    }
    if (!m.at(pivot_row, col).is_one()) {
      Scalar inv = m.at(pivot_row, col).inverse();
      m.at(pivot_row, col) = Scalar::one(m.field());
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        if (!m.at(pivot_row, c).is_zero()) m.at(pivot_row, c) *= inv;
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      Scalar factor = m.at(r, col);
      if (factor.is_zero()) continue;
      m.at(r, col) = Scalar::zero(m.field());
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        const Scalar& src = m.at(pivot_row, c);
        if (!src.is_zero()) m.at(r, c).submul(factor, src);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult result{m, {}};
  result.pivot_columns = rref_in_place(result.reduced);
  return result;
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return rref_in_place(work).size();
}

Matrix nullspace_basis(const Matrix& m) {
  Matrix reduced = m;
  std::vector<std::size_t> pivots = rref_in_place(reduced);

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  // One kernel vector per free column f: 1 at f, and at pivot column
  // pivots[i] the negated RREF entry reduced(i, f).
  Matrix basis(m.cols(), free_cols.size(), m.field());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis.at(f, k) = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis.at(pivots[i], k) = -reduced.at(i, f);
    }
  }
  return basis;
}

}  // namespace fatcode
