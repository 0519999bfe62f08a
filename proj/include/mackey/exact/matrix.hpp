#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mackey/exact/cyclo.hpp"

namespace mackey::exact {

/// Dense row-major matrix over Q(zeta_N).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycloNumber> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ExactMatrix diagonal(std::span<const CycloNumber> diag);
  static ExactMatrix from_rows(const std::vector<std::vector<CycloNumber>>& rows);
  static ExactMatrix column(std::span<const CycloNumber> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const CycloNumber& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  CycloNumber& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const CycloNumber> entries() const noexcept { return entries_; }

  bool is_zero() const;
  bool is_identity() const;

  CycloNumber trace() const;
  ExactMatrix transpose() const;
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b);

  /// Matrix-vector product.
  std::vector<CycloNumber> apply(std::span<const CycloNumber> v) const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const CycloNumber& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const CycloNumber& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNumber> entries_;
};

ExactMatrix block_diagonal(std::span<const ExactMatrix> blocks);

/// Reduced row echelon form.  Pivots are the first nonzero entry found
/// scanning down each column, so the result is deterministic.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

RowEchelon row_reduce(ExactMatrix a);

std::size_t rank(const ExactMatrix& a);

/// Basis of {v : A v = 0}, one vector per free column in increasing column
/// order; the free coordinate of each basis vector is 1.
std::vector<std::vector<CycloNumber>> solve_nullspace(const ExactMatrix& a);

/// Exact inverse; throws SingularMatrix or DimensionMismatch.
ExactMatrix matrix_inverse(const ExactMatrix& a);

CycloNumber determinant(const ExactMatrix& a);

}  // namespace mackey::exact
