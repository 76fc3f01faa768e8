#include "milef/linalg.hpp"

#include <algorithm>

#include "milef/errors.hpp"

namespace milef {

namespace {
void check_same_dim(const QVector& a, const QVector& b, const char* op) {
  if (a.dim() != b.dim())
    throw ContractError(std::string("dimension mismatch in ") + op + ": " +
                        std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}
}  // namespace

QVector QVector::operator+(const QVector& other) const {
  check_same_dim(*this, other, "vector addition");
  QVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = data_[i] + other[i];
  return out;
}

QVector QVector::operator-(const QVector& other) const {
  check_same_dim(*this, other, "vector subtraction");
  QVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = data_[i] - other[i];
  return out;
}

QVector QVector::operator*(const Rational& scale) const {
  QVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = data_[i] * scale;
  return out;
}

bool QVector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

bool QVector::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return is_integer(v); });
}

QVector QVector::unit(std::size_t dim, std::size_t index) {
  QVector v(dim);
  v[index] = 1;
  return v;
}

Rational dot(const QVector& a, const QVector& b) {
  check_same_dim(a, b, "dot product");
  Rational sum(0);
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

bool lex_less(const QVector& a, const QVector& b) {
  check_same_dim(a, b, "lexicographic comparison");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : rows_(0), cols_(0) {
  rows_ = rows.size();
  cols_ = rows.size() ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QVector QMatrix::row(std::size_t i) const {
  QVector out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

void QMatrix::set_row(std::size_t i, const QVector& values) {
  if (values.dim() != cols_) throw ContractError("set_row dimension mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = values[j];
}

void QMatrix::append_row(const QVector& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.dim();
  if (values.dim() != cols_) throw ContractError("append_row dimension mismatch");
  data_.insert(data_.end(), values.entries().begin(), values.entries().end());
  ++rows_;
}

QVector QMatrix::apply(const QVector& x) const {
  if (x.dim() != cols_)
    throw ContractError("matrix-vector dimension mismatch: " + std::to_string(cols_) + " vs " +
                        std::to_string(x.dim()));
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational sum(0);
    for (std::size_t j = 0; j < cols_; ++j) sum += (*this)(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

QMatrix QMatrix::multiply(const QMatrix& other) const {
  if (cols_ != other.rows_) throw ContractError("matrix product dimension mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool QMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return is_integer(v); });
}

Rational QMatrix::determinant() const {
  if (rows_ != cols_) throw ContractError("determinant of non-square matrix");
  QMatrix work(*this);
  Rational det(1);
  std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    Rational inv = 1 / work(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (work(i, col) == 0) continue;
      Rational factor = work(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) work(i, j) -= factor * work(col, j);
    }
  }
  return det;
}

std::size_t QMatrix::rank() const {
  QMatrix work(*this);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pivot = r;
    while (pivot < rows_ && work(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work(pivot, j), work(r, j));
    Rational inv = 1 / work(r, col);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (work(i, col) == 0) continue;
      Rational factor = work(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) work(i, j) -= factor * work(r, j);
    }
    ++r;
  }
  return r;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw ContractError("inverse of non-square matrix");
  std::size_t n = rows_;
  QMatrix work(*this);
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw ContractError("matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    Rational scale = 1 / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col) == 0) continue;
      Rational factor = work(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= factor * work(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

std::optional<QVector> solve_linear(const QMatrix& m, const QVector& rhs) {
  if (m.rows() != rhs.dim()) throw ContractError("solve_linear dimension mismatch");
  std::size_t rows = m.rows(), cols = m.cols();
  QMatrix work(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) work(i, j) = m(i, j);
    work(i, cols) = rhs[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && work(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(work(pivot, j), work(r, j));
    Rational scale = 1 / work(r, col);
    for (std::size_t j = col; j <= cols; ++j) work(r, j) *= scale;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || work(i, col) == 0) continue;
      Rational factor = work(i, col);
      for (std::size_t j = col; j <= cols; ++j) work(i, j) -= factor * work(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (work(i, cols) != 0) return std::nullopt;
  QVector x(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = work(i, cols);
  return x;
}

}  // namespace milef
