#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "galois.hpp"

namespace eaqmds {

// Polynomial over a field, coefficients in ascending degree. The zero
// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial(FieldPtr field, std::vector<Elem> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem evaluate(Elem x) const;

 private:
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

// prod (x - r) over the roots; the empty product is 1.
Polynomial poly_from_roots(const FieldPtr& field, std::span<const Elem> roots);

// Dense row-major matrix over a field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }
  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& entries() const { return data_; }

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  // Stacks rows of `below` under this matrix; fields must match.
  Matrix stack(const Matrix& below) const;
  bool is_zero() const;

  // One line per row. Entries are discrete logs of the primitive element
  // ('-' for zero) when the field has log tables, coefficient tuples
  // otherwise.
  std::string to_text() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
// (i, j) entry is the q-conjugate of the (j, i) entry of m.
Matrix hermitian_adjoint(const Matrix& m, std::uint64_t q);
std::size_t matrix_rank(const Matrix& m);
// Rows form a basis of { v : m * v^T = 0 }.
Matrix nullspace_basis(const Matrix& m);

// In-place reduction to reduced row echelon form; returns pivot columns.
// Pivots are the first nonzero entry in column order.
std::vector<std::size_t> row_reduce(Matrix& m);

}  // namespace eaqmds
