#pragma once

#include <vector>

#include "milef/caps.hpp"
#include "milef/lp.hpp"
#include "milef/polyhedra.hpp"

namespace milef {

/// Exact vertex (and extreme-ray) enumeration of an H-polyhedron by the
/// double description method, run per independent component after equality
/// elimination. The resource cap applies to the effective per-component
/// dimension. Polyhedra with a lineality space are refused: they have no
/// vertex description.
VPolytope vertices(const HPolyhedron& p, const Caps& caps = Caps::defaults());

/// Baseline vertex enumeration by exhaustive basis enumeration with exact
/// rank checks. Independent of the double description path; intended for
/// bounded polyhedra at small dimension and used as a cross-check.
std::vector<QVector> enumerate_vertices_by_bases(const HPolyhedron& p,
                                                 const Caps& caps = Caps::defaults());

/// Irredundant H-description of conv(points) [+ cone(rays)]. The affine hull
/// is captured in equality rows. Throws PreconditionError on empty input.
HPolyhedron hull(const std::vector<QVector>& points, const Caps& caps = Caps::defaults());
HPolyhedron hull(const VPolytope& v, const Caps& caps = Caps::defaults());

/// Exact image f(P), computed through the vertex description.
HPolyhedron project(const HPolyhedron& p, const AffineMap& f, const Caps& caps = Caps::defaults());

/// Concatenated constraint system for P cap S.
HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& s);

/// Exact squared Euclidean distance from a point to a non-empty bounded
/// polyhedron, by projecting onto the affine span of every candidate tight
/// set and keeping the feasible minimum.
Rational min_sq_distance(const QVector& point, const HPolyhedron& p,
                         const Caps& caps = Caps::defaults());

/// Redundancy removal by per-row LP tests; implicit equalities detected by
/// two-sided LP tests and moved to the equality block. Duplicate rows are
/// dropped first.
HPolyhedron irredundant(const HPolyhedron& p);

/// Number of irredundant inequality rows (the facet-based size notion).
std::size_t facet_count(const HPolyhedron& p);

/// Membership of a point in conv(vertices) + cone(rays), decided by an LP
/// over the multipliers.
bool point_in_vhull(const QVector& point, const VPolytope& v);

/// Subset of the input that is extreme in the convex hull of the input,
/// canonically sorted.
std::vector<QVector> prune_to_extreme(const std::vector<QVector>& points);

/// Scale a rational direction to a primitive integer vector, keeping its
/// orientation.
QVector primitive_direction(const QVector& direction);

}  // namespace milef
