#pragma once

#include <map>
#include <utility>
#include <vector>

#include "milef/caps.hpp"
#include "milef/geometry.hpp"
#include "milef/polyhedra.hpp"

namespace milef {

/// Integer square matrix with determinant +1 or -1, checked on construction.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(QMatrix entries);
  const QMatrix& entries() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  QMatrix m_;
};

/// v / gcd(v) with the first nonzero entry made positive. Integer input only.
QVector primitive(const QVector& v);

/// Column-style Hermite normal form: H = M * U with U unimodular, H a lower
/// triangular staircase with positive pivots and reduced nonnegative entries
/// left of each pivot.
std::pair<QMatrix, UnimodularMatrix> hnf(const QMatrix& m);

/// A unimodular matrix whose first row is exactly v^T. Requires gcd(v) = 1.
UnimodularMatrix unimodular_completion(const QVector& v);

/// All lattice points of a bounded polyhedron, by bounding-box sweep plus
/// exact membership. Throws on unbounded input or when the box exceeds the
/// configured cap.
std::vector<QVector> integer_points(const HPolyhedron& p, const Caps& caps = Caps::defaults());

struct WidthCertificate {
  QVector direction;  // primitive integer vector
  Rational width;
  QVector max_point;
  QVector min_point;
  /// True when no direction outside the search box can beat `width`
  /// (certified through an inscribed box); otherwise `width` is an upper
  /// bound on the true lattice width.
  bool exact = false;
};

/// Minimum directional extent over nonzero integer directions with
/// |v|_inf <= v_max. Ties broken deterministically, preferring directions
/// supported on earlier coordinate axes.
WidthCertificate lattice_width(const HPolyhedron& b, int v_max,
                               const Caps& caps = Caps::defaults());

/// Configured valid upper bound on the flatness constant Flt(k); a reporting
/// knob only, never used for algorithm control flow.
Rational flt_bound(int k, const std::map<int, Rational>* overrides = nullptr);

}  // namespace milef
