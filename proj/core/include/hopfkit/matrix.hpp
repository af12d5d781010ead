#pragma once

// Dense exact matrices and the linear algebra built on them.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfkit/field.hpp"

namespace hopfkit {

/// Dense element of a vector space in a fixed basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec f, std::size_t n);
bool is_zero_vector(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_rows(FieldSpec f, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_scalar_rows(FieldSpec f, const std::vector<Vector>& rows);
  static Matrix column(const Vector& v);
  static Matrix from_columns(FieldSpec f, std::size_t rows, const std::vector<Vector>& cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_col(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  /// Keep the listed columns, in order.
  Matrix select_cols(std::span<const std::size_t> cols) const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& scale(const Scalar& s);
  /// this += s * o
  void add_scaled(const Scalar& s, const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m) { return m.scale(s); }
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, std::size_t e);

/// Left-factor-major Kronecker product: entry (i*br + r, j*bc + c) = a(i,j) b(r,c).
Matrix kronecker(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
RowEchelon row_reduce(Matrix m);

/// Rank; fraction-free (Bareiss) elimination in characteristic 0.
std::size_t rank(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Columns form a basis of the right kernel {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

/// Columns form a basis of the column space.
Matrix column_space(const Matrix& m);

struct LinearSolution {
  Matrix particular;            // A * particular = b
  std::vector<Matrix> kernel;   // basis of {x : A x = 0}, as column vectors
};

/// Exact particular solution plus kernel basis, or nullopt when A x = b is inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Left inverse of a full-column-rank matrix (C * m = I).
Matrix left_inverse(const Matrix& m);

}  // namespace hopfkit
