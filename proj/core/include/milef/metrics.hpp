#pragma once

#include "milef/caps.hpp"
#include "milef/geometry.hpp"
#include "milef/polyhedra.hpp"

namespace milef {

/// Relative distance rdist(A, B) = inf{ lambda >= 0 : B <= (1+lambda)A - lambda A }
/// for bounded A <= B, computed exactly through one LP per vertex of B over
/// the cone lifting of A's inequality description. Conventions:
/// rdist(empty, empty) = 0, rdist(empty, B) = +inf; +inf also when some
/// vertex admits no decomposition for any lambda.
ExtRational rdist(const VPolytope& a, const VPolytope& b, const Caps& caps = Caps::defaults());

struct GapResult {
  ExtRational value;
  QVector witness_direction;  // c achieving the reported gap (when finite)
  QVector witness_point_a;
  QVector witness_point_b;
};

/// Worst multiplicative maximization gap over nonnegative objectives:
/// sup_{c >= 0} max_B(c)/max_A(c) - 1, with the paper's conventions for
/// zero denominators. Requires A <= B inside the nonnegative orthant.
GapResult lp_gap_max(const VPolytope& a, const VPolytope& b, const Caps& caps = Caps::defaults());

/// Worst multiplicative minimization gap over nonnegative objectives:
/// sup_{c >= 0} min_A(c)/min_B(c) - 1, same conventions.
GapResult lp_gap_min(const VPolytope& a, const VPolytope& b, const Caps& caps = Caps::defaults());

/// Exact square of the one-sided Hausdorff distance sup_{b in B} dist(b, A),
/// which equals d_H(A, B)^2 under A <= B.
Rational hausdorff_sq(const VPolytope& a, const VPolytope& b, const Caps& caps = Caps::defaults());

/// True when every vertex of a lies in conv(b) (with rays, in its recession).
bool contained_in(const VPolytope& a, const VPolytope& b);

}  // namespace milef
