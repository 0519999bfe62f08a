#include "mackey/exact/matrix.hpp"

#include <utility>

#include "mackey/error.hpp"

namespace mackey::exact {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycloNumber> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("matrix entry count does not match its shape");
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const CycloNumber> diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<CycloNumber>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::column(std::span<const CycloNumber> v) {
  return ExactMatrix(v.size(), 1, std::vector<CycloNumber>(v.begin(), v.end()));
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

CycloNumber ExactMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  CycloNumber t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                               std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionMismatch("block out of range");
  ExactMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw DimensionMismatch("block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

std::vector<CycloNumber> ExactMatrix::apply(std::span<const CycloNumber> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match columns");
  std::vector<CycloNumber> out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shapes");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!rhs.entries_[i].is_zero()) entries_[i] += rhs.entries_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shapes");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!rhs.entries_[i].is_zero()) entries_[i] -= rhs.entries_[i];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const CycloNumber& s) {
  for (auto& e : entries_) {
    if (!e.is_zero()) e *= s;
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      const bool unit = aik.is_one();
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        if (unit) {
          c(i, j) += bkj;
        } else {
          c(i, j) += aik * bkj;
        }
      }
    }
  }
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string ExactMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

ExactMatrix block_diagonal(std::span<const ExactMatrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ExactMatrix m(rows, cols);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

RowEchelon row_reduce(ExactMatrix a) {
  RowEchelon out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!a(r, c).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(found, j), a(pivot_row, j));
    }
    if (!a(pivot_row, c).is_one()) {
      CycloNumber inv = a(pivot_row, c).inverse();
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(pivot_row, j).is_zero()) a(pivot_row, j) *= inv;
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, c).is_zero()) continue;
      CycloNumber factor = a(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        const auto& p = a(pivot_row, j);
        if (!p.is_zero()) a(r, j) -= factor * p;
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const ExactMatrix& a) { return row_reduce(a).rank(); }

std::vector<std::vector<CycloNumber>> solve_nullspace(const ExactMatrix& a) {
  RowEchelon ech = row_reduce(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<CycloNumber>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycloNumber> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k) {
      const auto& e = ech.reduced(k, free);
      if (!e.is_zero()) v[ech.pivot_columns[k]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix matrix_inverse(const ExactMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  ExactMatrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, ExactMatrix::identity(n));
  RowEchelon ech = row_reduce(std::move(aug));
  if (ech.rank() < n || ech.pivot_columns[n - 1] != n - 1) throw SingularMatrix();
  return ech.reduced.block(0, n, n, n);
}

CycloNumber determinant(const ExactMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  ExactMatrix m = a;
  const std::size_t n = m.rows();
  CycloNumber det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t found = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!m(r, c).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == n) return CycloNumber(0);
    if (found != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(found, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    CycloNumber inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      CycloNumber factor = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(r, j) -= factor * m(c, j);
      }
    }
  }
  return det;
}

}  // namespace mackey::exact
