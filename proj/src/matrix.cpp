#include "dgkit/matrix.hpp"

#include <stdexcept>

namespace dgkit {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.field() != field_)
    throw FieldMismatch("matrix entry field " + v.field().name() +
                        " differs from matrix field " + field_.name());
  data_[r * cols_ + c] = v;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || field_ != other.field_)
    return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != other.data_[i]) return false;
  return true;
}

int Matrix::cmp(const Matrix& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_ ? -1 : 1;
  if (cols_ != other.cols_) return cols_ < other.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    int c = data_[i].cmp(other.data_[i]);
    if (c != 0) return c;
  }
  return 0;
}

void Matrix::check_field(const Matrix& other) const {
  if (field_ != other.field_)
    throw FieldMismatch("mixed-field matrices: " + field_.name() + " vs " +
                        other.field_.name());
}

Matrix Matrix::operator+(const Matrix& other) const {
  check_field(other);
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch in addition");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  check_field(other);
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= other.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& other) const {
  check_field(other);
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix shape mismatch in product");
  Matrix r(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other.at(k, j);
        if (b.is_zero()) continue;
        r.data_[i * r.cols_ + j] += a * b;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(*this);
  for (auto& v : r.data_) v *= c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("vector length mismatch in apply");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

Matrix Matrix::vstack(const Matrix& below) const {
  check_field(below);
  if (cols_ != below.cols_)
    throw std::invalid_argument("column mismatch in vstack");
  Matrix r(field_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, below.at(i, j));
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  check_field(right);
  if (rows_ != right.rows_)
    throw std::invalid_argument("row mismatch in hstack");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < right.cols_; ++j)
      r.set(i, cols_ + j, right.at(i, j));
  }
  return r;
}

Matrix Matrix::row(std::size_t r) const {
  Matrix m(field_, 1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) m.set(0, j, at(r, j));
  return m;
}

std::vector<Scalar> Matrix::row_vector(std::size_t r) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(r, j));
  return v;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols,
                         const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("row length mismatch in from_rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Echelon Matrix::rref() const {
  Echelon e;
  e.reduced = *this;
  Matrix& m = e.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    // topmost nonzero entry in this column at or below pivot_row
    std::size_t sel = rows_;
    for (std::size_t r = pivot_row; r < rows_; ++r)
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel == rows_) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < cols_; ++j) {
        Scalar tmp = m.at(pivot_row, j);
        m.set(pivot_row, j, m.at(sel, j));
        m.set(sel, j, tmp);
      }
    const Scalar inv = m.at(pivot_row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j)
      m.set(pivot_row, j, m.at(pivot_row, j) * inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row) continue;
      const Scalar f = m.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < cols_; ++j)
        m.set(r, j, m.at(r, j) - f * m.at(pivot_row, j));
    }
    e.pivots.push_back(col);
    ++pivot_row;
  }
  e.rank = pivot_row;
  return e;
}

Matrix Matrix::kernel() const {
  const Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(field_, free_cols.size(), cols_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis.set(k, fc, Scalar::one(field_));
    for (std::size_t r = 0; r < e.rank; ++r)
      basis.set(k, e.pivots[r], -e.reduced.at(r, fc));
  }
  // free columns ascend, so this is already echelon up to row order;
  // canonicalize anyway
  return basis.rref().reduced;
}

std::optional<std::vector<Scalar>> Matrix::solve(
    const std::vector<Scalar>& rhs) const {
  if (rhs.size() != rows_)
    throw std::invalid_argument("rhs length mismatch in solve");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, rhs[i]);
  }
  const Echelon e = aug.rref();
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] == cols_) return std::nullopt;  // 0 = 1 row
    x[e.pivots[r]] = e.reduced.at(r, cols_);
  }
  return x;
}

std::size_t Matrix::rank() const { return rref().rank; }

bool Matrix::is_invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug = hstack(identity(field_, rows_));
  const Echelon e = aug.rref();
  if (e.rank != rows_ || (rows_ > 0 && e.pivots[rows_ - 1] >= rows_))
    return std::nullopt;
  for (std::size_t r = 0; r < rows_; ++r)
    if (e.pivots[r] != r) return std::nullopt;
  Matrix inv(field_, rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j)
      inv.set(i, j, e.reduced.at(i, rows_ + j));
  return inv;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

}  // namespace dgkit
