#include "milef/polyhedra.hpp"

#include <algorithm>

#include "milef/errors.hpp"

namespace milef {

AffineMap::AffineMap(QMatrix m, QVector t) : matrix(std::move(m)), offset(std::move(t)) {
  if (matrix.rows() != offset.dim())
    throw ContractError("affine map: offset length must equal target dimension");
}

QVector AffineMap::apply(const QVector& x) const { return matrix.apply(x) + offset; }

AffineMap AffineMap::after(const AffineMap& other) const {
  if (source_dim() != other.target_dim())
    throw ContractError("affine map composition dimension mismatch");
  return AffineMap(matrix.multiply(other.matrix), matrix.apply(other.offset) + offset);
}

AffineMap AffineMap::identity(std::size_t dim) {
  return AffineMap(QMatrix::identity(dim), QVector(dim));
}

AffineMap AffineMap::coordinate_projection(std::size_t source_dim,
                                           const std::vector<std::size_t>& keep) {
  QMatrix m(keep.size(), source_dim);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= source_dim) throw ContractError("coordinate projection index out of range");
    m(i, keep[i]) = 1;
  }
  return AffineMap(std::move(m), QVector(keep.size()));
}

HPolyhedron::HPolyhedron(std::size_t ambient_dim, QMatrix ineq_lhs, QVector ineq_rhs,
                         QMatrix eq_lhs, QVector eq_rhs)
    : dim_(ambient_dim),
      ineq_lhs_(std::move(ineq_lhs)),
      ineq_rhs_(std::move(ineq_rhs)),
      eq_lhs_(std::move(eq_lhs)),
      eq_rhs_(std::move(eq_rhs)) {
  if (ineq_lhs_.rows() != ineq_rhs_.dim() || eq_lhs_.rows() != eq_rhs_.dim())
    throw ContractError("polyhedron: row counts must match rhs lengths");
  if ((ineq_lhs_.rows() > 0 && ineq_lhs_.cols() != dim_) ||
      (eq_lhs_.rows() > 0 && eq_lhs_.cols() != dim_))
    throw ContractError("polyhedron: matrix column count must equal ambient dimension");
}

void HPolyhedron::add_ineq(const QVector& lhs, const Rational& rhs) {
  if (lhs.dim() != dim_) throw ContractError("inequality row has wrong dimension");
  if (ineq_lhs_.rows() == 0) ineq_lhs_ = QMatrix(0, dim_);
  ineq_lhs_.append_row(lhs);
  QVector new_rhs(ineq_rhs_.dim() + 1);
  for (std::size_t i = 0; i < ineq_rhs_.dim(); ++i) new_rhs[i] = ineq_rhs_[i];
  new_rhs[ineq_rhs_.dim()] = rhs;
  ineq_rhs_ = new_rhs;
}

void HPolyhedron::add_eq(const QVector& lhs, const Rational& rhs) {
  if (lhs.dim() != dim_) throw ContractError("equality row has wrong dimension");
  if (eq_lhs_.rows() == 0) eq_lhs_ = QMatrix(0, dim_);
  eq_lhs_.append_row(lhs);
  QVector new_rhs(eq_rhs_.dim() + 1);
  for (std::size_t i = 0; i < eq_rhs_.dim(); ++i) new_rhs[i] = eq_rhs_[i];
  new_rhs[eq_rhs_.dim()] = rhs;
  eq_rhs_ = new_rhs;
}

bool HPolyhedron::contains(const QVector& x) const {
  if (x.dim() != dim_) throw ContractError("membership test dimension mismatch");
  for (std::size_t i = 0; i < num_ineq(); ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < dim_; ++j) lhs += ineq_lhs_(i, j) * x[j];
    if (lhs > ineq_rhs_[i]) return false;
  }
  for (std::size_t i = 0; i < num_eq(); ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < dim_; ++j) lhs += eq_lhs_(i, j) * x[j];
    if (lhs != eq_rhs_[i]) return false;
  }
  return true;
}

bool HPolyhedron::trivially_infeasible() const {
  for (std::size_t i = 0; i < num_ineq(); ++i) {
    if (ineq_rhs_[i] >= 0) continue;
    bool zero = true;
    for (std::size_t j = 0; j < dim_ && zero; ++j) zero = ineq_lhs_(i, j) == 0;
    if (zero) return true;
  }
  for (std::size_t i = 0; i < num_eq(); ++i) {
    if (eq_rhs_[i] == 0) continue;
    bool zero = true;
    for (std::size_t j = 0; j < dim_ && zero; ++j) zero = eq_lhs_(i, j) == 0;
    if (zero) return true;
  }
  return false;
}

HPolyhedron HPolyhedron::box(std::size_t dim, const Rational& lo, const Rational& hi) {
  HPolyhedron out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    QVector row(dim);
    row[j] = 1;
    out.add_ineq(row, hi);
    row[j] = -1;
    out.add_ineq(row, -lo);
  }
  return out;
}

void VPolytope::canonicalize() {
  auto tidy = [](std::vector<QVector>& pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  };
  tidy(vertices);
  tidy(rays);
}

bool same_point_set(std::vector<QVector> a, std::vector<QVector> b) {
  std::sort(a.begin(), a.end(), lex_less);
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end(), lex_less);
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

}  // namespace milef
