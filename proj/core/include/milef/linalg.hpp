#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "milef/rational.hpp"

namespace milef {

/// Dense rational vector with an explicit dimension.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : data_(dim, Rational(0)) {}
  QVector(std::initializer_list<Rational> values) : data_(values) {}
  explicit QVector(std::vector<Rational> values) : data_(std::move(values)) {}

  std::size_t dim() const { return data_.size(); }
  const Rational& operator[](std::size_t i) const { return data_[i]; }
  Rational& operator[](std::size_t i) { return data_[i]; }

  const std::vector<Rational>& entries() const { return data_; }

  QVector operator+(const QVector& other) const;
  QVector operator-(const QVector& other) const;
  QVector operator*(const Rational& scale) const;
  bool operator==(const QVector& other) const { return data_ == other.data_; }

  bool is_zero() const;
  /// True when every entry is an integer.
  bool is_integral() const;

  static QVector unit(std::size_t dim, std::size_t index);

 private:
  std::vector<Rational> data_;
};

Rational dot(const QVector& a, const QVector& b);

/// Strict total order (entry-wise lexicographic); used for canonical sorting.
bool lex_less(const QVector& a, const QVector& b);

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  void set_row(std::size_t i, const QVector& values);
  void append_row(const QVector& values);

  QVector apply(const QVector& x) const;  // A * x
  QMatrix multiply(const QMatrix& other) const;
  QMatrix transposed() const;

  bool operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  static QMatrix identity(std::size_t n);

  bool is_integral() const;

  /// Exact determinant via fraction-free elimination. Square matrices only.
  Rational determinant() const;
  /// Rank over the rationals.
  std::size_t rank() const;
  /// Exact inverse; throws ContractError when singular.
  QMatrix inverse() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Solve M x = rhs exactly. Returns an arbitrary solution when the system is
/// underdetermined, nullopt when inconsistent.
std::optional<QVector> solve_linear(const QMatrix& m, const QVector& rhs);

}  // namespace milef
