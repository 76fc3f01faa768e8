#pragma once

#include <cstddef>
#include <vector>

#include "milef/linalg.hpp"

namespace milef {

/// Affine map x -> matrix * x + offset.
struct AffineMap {
  QMatrix matrix;
  QVector offset;

  AffineMap() = default;
  AffineMap(QMatrix m, QVector t);

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }

  QVector apply(const QVector& x) const;

  /// this(other(x)), the composite map.
  AffineMap after(const AffineMap& other) const;

  static AffineMap identity(std::size_t dim);
  /// x -> (x_{keep[0]}, ..., x_{keep[t-1]}), a coordinate projection.
  static AffineMap coordinate_projection(std::size_t source_dim,
                                         const std::vector<std::size_t>& keep);
};

/// Inequality/equality description {x : Ax <= b, Ex = f}.
class HPolyhedron {
 public:
  explicit HPolyhedron(std::size_t ambient_dim) : dim_(ambient_dim) {}
  HPolyhedron(std::size_t ambient_dim, QMatrix ineq_lhs, QVector ineq_rhs, QMatrix eq_lhs,
              QVector eq_rhs);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t num_ineq() const { return ineq_lhs_.rows(); }
  std::size_t num_eq() const { return eq_lhs_.rows(); }

  const QMatrix& ineq_lhs() const { return ineq_lhs_; }
  const QVector& ineq_rhs() const { return ineq_rhs_; }
  const QMatrix& eq_lhs() const { return eq_lhs_; }
  const QVector& eq_rhs() const { return eq_rhs_; }

  void add_ineq(const QVector& lhs, const Rational& rhs);
  void add_eq(const QVector& lhs, const Rational& rhs);

  /// Exact membership test by plugging the point into every row.
  bool contains(const QVector& x) const;

  /// A row 0 <= negative or 0 = nonzero makes the system trivially empty.
  bool trivially_infeasible() const;

  /// Whole-space polyhedron (no rows).
  static HPolyhedron whole_space(std::size_t dim) { return HPolyhedron(dim); }
  /// Axis-aligned box lo <= x <= hi in every coordinate.
  static HPolyhedron box(std::size_t dim, const Rational& lo, const Rational& hi);

 private:
  std::size_t dim_;
  QMatrix ineq_lhs_{0, 0};
  QVector ineq_rhs_;
  QMatrix eq_lhs_{0, 0};
  QVector eq_rhs_;
};

/// Vertex/ray description. For bounded sets rays is empty.
struct VPolytope {
  std::size_t ambient_dim = 0;
  std::vector<QVector> vertices;
  std::vector<QVector> rays;

  explicit VPolytope(std::size_t dim) : ambient_dim(dim) {}
  VPolytope(std::size_t dim, std::vector<QVector> verts)
      : ambient_dim(dim), vertices(std::move(verts)) {}

  bool empty() const { return vertices.empty(); }
  bool bounded() const { return rays.empty(); }

  /// Sort vertices and rays lexicographically and drop duplicates.
  void canonicalize();
};

/// Exact set equality after canonical sorting.
bool same_point_set(std::vector<QVector> a, std::vector<QVector> b);

}  // namespace milef
