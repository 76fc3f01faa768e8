#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "milef/caps.hpp"
#include "milef/geometry.hpp"
#include "milef/lattice.hpp"
#include "milef/polyhedra.hpp"

namespace milef {

/// Mixed-integer linear extended formulation (Q, sigma, pi): the modelled set
/// is conv(pi(Q cap sigma^{-1}(Z^k))). Complexity (m, k) with m at least the
/// facet count of Q and k the number of integrality constraints.
class Milef {
 public:
  Milef(HPolyhedron q, AffineMap sigma, AffineMap pi,
        std::optional<std::size_t> declared_m = std::nullopt);

  const HPolyhedron& q() const { return q_; }
  const AffineMap& sigma() const { return sigma_; }
  const AffineMap& pi() const { return pi_; }
  std::size_t ell() const { return q_.ambient_dim(); }
  std::size_t k() const { return sigma_.target_dim(); }
  std::size_t d() const { return pi_.target_dim(); }
  std::size_t declared_m() const { return declared_m_; }

 private:
  HPolyhedron q_;
  AffineMap sigma_;
  AffineMap pi_;
  std::size_t declared_m_;
};

/// Finite list of affine subspaces of R^ell, each given by equality rows
/// only. May contain the whole space (zero rows).
struct SubspaceFamily {
  std::size_t ambient_dim = 0;
  std::vector<HPolyhedron> subspaces;

  std::size_t size() const { return subspaces.size(); }
};

/// Q cap sigma^{-1}(z): the fiber over an integer point of the sigma-image.
HPolyhedron fiber(const Milef& m, const QVector& z);

/// Integer points z with a non-empty fiber, found by sweeping the bounding
/// box of sigma(Q) and testing each fiber by LP.
std::vector<QVector> nonempty_fiber_points(const HPolyhedron& q, const AffineMap& sigma,
                                           const Caps& caps = Caps::defaults());

/// Vertex description of the mixed-integer hull conv(Q cap sigma^{-1}(Z^k)),
/// in the extended space R^ell. Requires bounded Q.
VPolytope mixed_integer_hull(const Milef& m, const Caps& caps = Caps::defaults());

/// pi(mixed_integer_hull): fiber vertices are mapped through pi as they are
/// produced and pruned once at the end, so large extended spaces never hold
/// the full vertex union.
VPolytope projected_mixed_integer_hull(const Milef& m, const Caps& caps = Caps::defaults());

/// Image of a vertex set under an affine map, pruned to extreme points.
VPolytope map_and_prune(const AffineMap& f, const VPolytope& v);

/// Disjunctive (Balas) union: a lifted polyhedron whose projection is
/// conv(parts[0] cup ... cup parts[t-1]). Parts must be non-empty and
/// bounded. The lifted system has at most sum_i (rows_i + 1) inequalities.
std::pair<HPolyhedron, AffineMap> balas_union(const std::vector<HPolyhedron>& parts);

struct SliceStep {
  SubspaceFamily family;        // preimages of parallel lattice hyperplanes
  AffineMap tau;                // sigma composed with the completed projection
  QVector direction;            // chosen primitive integer direction v
  bool sigma_lattice_empty = false;
  /// |family| <= 1 + ((1+delta')/delta') flt_bound(k) for the measured
  /// relative distance delta'; false when the search box missed every
  /// direction achieving the bound.
  bool count_bound_certified = true;
};

/// One slicing round: covers all fibers of (D, sigma) with parallel
/// hyperplane preimages along a direction minimizing the exact slab count,
/// and eliminates one integrality constraint via a unimodular completion.
SliceStep slice_once(const HPolyhedron& d, const AffineMap& sigma, const Rational& delta,
                     int v_max, const Caps& caps = Caps::defaults());

struct SliceCertificate {
  SubspaceFamily family;
  Rational delta;
  bool fiber_cover_checked = false;
  ExtRational rdist_achieved;       // rdist(D_sigma, D_H)
  Rational theoretical_size_bound;  // prod_i (1 + ((1+delta)/delta) flt_bound(i))
  bool sigma_lattice_empty = false;
  bool count_bound_certified = true;
};

/// Recursive slicing: returns a family H with D_sigma <= D_H <= D and
/// rdist(D_sigma, D_H) <= delta, eliminating one integer constraint per
/// level. Requires bounded D and delta > 0.
SliceCertificate slice_family(const HPolyhedron& d, const AffineMap& sigma,
                              const Rational& delta, const Caps& caps = Caps::defaults());

struct LefReport {
  ExtRational rdist_achieved;        // rdist(C, proj(lef)) with C = pi(Q_sigma)
  std::size_t inequality_count = 0;  // rows of the lifted system
  std::size_t sum_facets_plus_one = 0;
  std::size_t slice_count = 0;
  Rational theoretical_size_bound;  // (m+1) prod_i (1 + ((1+delta)/delta) flt_bound(i))
};

struct LefResult {
  HPolyhedron lef;
  AffineMap proj;
  LefReport report;
};

/// The approximate-LEF transform: slice, then take the disjunctive union of
/// the non-empty slices. proj(lef) approximates C = pi(Q_sigma) within delta
/// in relative distance (for exact input formulations).
LefResult milef_to_lef(const Milef& m, const Rational& delta,
                       const Caps& caps = Caps::defaults());

/// Restriction to the face {phi = 0} of the modelled polytope, where
/// phi >= 0 must be valid on it; returns (Q cap (phi pi)^{-1}(0), sigma,
/// tau2 pi). The validity precondition is spot-checked on the enumerated
/// mixed-integer hull vertices.
Milef restrict_to_face(const Milef& m, const AffineMap& phi, const AffineMap& tau2,
                       const Caps& caps = Caps::defaults());

/// Closed-form size bound (m+1) prod_{i=1..k} (1 + ((1+delta)/delta) flt_bound(i)).
Rational lef_size_bound(std::size_t m, std::size_t k, const Rational& delta);

}  // namespace milef
