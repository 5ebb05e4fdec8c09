#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgkit/scalar.hpp"

namespace dgkit {

struct Echelon;

/// Dense exact matrix over a single FieldSpec. Row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, const Scalar& v);

  bool is_zero() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }
  int cmp(const Matrix& other) const;  // canonical ordering for tie-breaking

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;  // M*x
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;
  Matrix row(std::size_t r) const;
  std::vector<Scalar> row_vector(std::size_t r) const;
  static Matrix from_rows(const FieldSpec& field, std::size_t cols,
                          const std::vector<std::vector<Scalar>>& rows);

  /// Gauss-Jordan with leftmost-column, topmost-row pivoting.
  Echelon rref() const;
  std::size_t rank() const;

  /// Row basis of the nullspace {x : M x = 0}, in canonical RREF form.
  Matrix kernel() const;

  /// One solution of M x = rhs with all free variables set to zero, or
  /// nullopt when the system is inconsistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& rhs) const;

  bool is_invertible() const;
  std::optional<Matrix> inverse() const;
  Scalar trace() const;

 private:
  void check_field(const Matrix& other) const;

  FieldSpec field_ = FieldSpec::rationals();
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                   // canonical reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};

}  // namespace dgkit
