#include "milef/metrics.hpp"

#include <algorithm>

#include "milef/errors.hpp"
#include "milef/lp.hpp"

namespace milef {

namespace {

void require_bounded(const VPolytope& v, const char* name) {
  if (!v.bounded())
    throw PreconditionError(std::string(name) + " must be bounded for this metric");
}

void require_nested(const VPolytope& a, const VPolytope& b) {
  for (const auto& x : a.vertices)
    if (!point_in_vhull(x, b)) {
      std::string coords;
      for (std::size_t j = 0; j < x.dim(); ++j) coords += (j ? "," : "") + to_string(x[j]);
      throw PreconditionError("metric precondition A <= B violated at vertex (" + coords + ")");
    }
}

void require_nonnegative(const VPolytope& v, const char* name) {
  for (const auto& x : v.vertices)
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (x[j] < 0)
        throw PreconditionError(std::string(name) + " must lie in the nonnegative orthant");
}

bool contains_origin(const VPolytope& v) { return point_in_vhull(QVector(v.ambient_dim), v); }

}  // namespace

bool contained_in(const VPolytope& a, const VPolytope& b) {
  for (const auto& x : a.vertices)
    if (!point_in_vhull(x, b)) return false;
  return true;
}

ExtRational rdist(const VPolytope& a, const VPolytope& b, const Caps& caps) {
  if (a.ambient_dim != b.ambient_dim) throw ContractError("rdist dimension mismatch");
  if (a.empty() && b.empty()) return ExtRational(Rational(0));
  if (a.empty()) return ExtRational::infinity();
  require_bounded(a, "A");
  require_bounded(b, "B");
  require_nested(a, b);

  std::size_t d = a.ambient_dim;
  HPolyhedron ha = hull(a, caps);

  // Variables (p, q, lambda): b = p - q with p in (1+lambda)A, q in lambda A.
  Rational worst(0);
  for (const auto& bv : b.vertices) {
    HPolyhedron sys(2 * d + 1);
    for (std::size_t i = 0; i < ha.num_ineq(); ++i) {
      QVector rp(2 * d + 1), rq(2 * d + 1);
      for (std::size_t j = 0; j < d; ++j) {
        rp[j] = ha.ineq_lhs()(i, j);
        rq[d + j] = ha.ineq_lhs()(i, j);
      }
      rp[2 * d] = -ha.ineq_rhs()[i];
      rq[2 * d] = -ha.ineq_rhs()[i];
      sys.add_ineq(rp, ha.ineq_rhs()[i]);  // G p <= (1+lambda) g
      sys.add_ineq(rq, Rational(0));       // G q <= lambda g
    }
    for (std::size_t i = 0; i < ha.num_eq(); ++i) {
      QVector rp(2 * d + 1), rq(2 * d + 1);
      for (std::size_t j = 0; j < d; ++j) {
        rp[j] = ha.eq_lhs()(i, j);
        rq[d + j] = ha.eq_lhs()(i, j);
      }
      rp[2 * d] = -ha.eq_rhs()[i];
      rq[2 * d] = -ha.eq_rhs()[i];
      sys.add_eq(rp, ha.eq_rhs()[i]);
      sys.add_eq(rq, Rational(0));
    }
    for (std::size_t j = 0; j < d; ++j) {
      QVector row(2 * d + 1);
      row[j] = 1;
      row[d + j] = -1;
      sys.add_eq(row, bv[j]);  // p - q = b
    }
    {
      QVector row(2 * d + 1);
      row[2 * d] = -1;
      sys.add_ineq(row, Rational(0));  // lambda >= 0
    }
    QVector obj(2 * d + 1);
    obj[2 * d] = 1;
    LpResult r = lp_solve(obj, LpSense::minimize, sys);
    if (r.status == LpStatus::infeasible) return ExtRational::infinity();
    if (r.value > worst) worst = r.value;
  }
  return ExtRational(worst);
}

GapResult lp_gap_max(const VPolytope& a, const VPolytope& b, const Caps& caps) {
  (void)caps;
  if (a.ambient_dim != b.ambient_dim) throw ContractError("lp_gap_max dimension mismatch");
  if (a.empty() || b.empty()) throw PreconditionError("lp_gap_max requires non-empty sets");
  require_bounded(a, "A");
  require_bounded(b, "B");
  require_nonnegative(a, "A");
  require_nonnegative(b, "B");
  require_nested(a, b);

  std::size_t d = a.ambient_dim;
  GapResult out;

  // Anchored LP family: normalize max_A(c) = 1 at vertex a*, maximize c.w*.
  bool any_feasible = false;
  Rational best(0);
  for (const auto& astar : a.vertices) {
    for (const auto& wstar : b.vertices) {
      HPolyhedron sys(d);
      for (const auto& v : a.vertices) {
        QVector row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = v[j];
        sys.add_ineq(row, Rational(1));
      }
      {
        QVector row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = astar[j];
        sys.add_eq(row, Rational(1));
      }
      for (std::size_t j = 0; j < d; ++j) {
        QVector row(d);
        row[j] = -1;
        sys.add_ineq(row, Rational(0));
      }
      QVector obj(d);
      for (std::size_t j = 0; j < d; ++j) obj[j] = wstar[j];
      LpResult r = lp_solve(obj, LpSense::maximize, sys);
      if (r.status == LpStatus::infeasible) continue;
      if (r.status == LpStatus::unbounded) {
        out.value = ExtRational::infinity();
        return out;
      }
      if (!any_feasible || r.value > best) {
        best = r.value;
        out.witness_direction = r.witness;
        out.witness_point_a = astar;
        out.witness_point_b = wstar;
      }
      any_feasible = true;
    }
  }
  if (!any_feasible) {
    // Every anchor failed, so max_A(c) = 0 for all c >= 0, i.e. A = {0}.
    bool b_is_origin = true;
    for (const auto& w : b.vertices) b_is_origin = b_is_origin && w.is_zero();
    out.value = b_is_origin ? ExtRational(Rational(0)) : ExtRational::infinity();
    return out;
  }
  out.value = ExtRational(best - 1);
  return out;
}

GapResult lp_gap_min(const VPolytope& a, const VPolytope& b, const Caps& caps) {
  (void)caps;
  if (a.ambient_dim != b.ambient_dim) throw ContractError("lp_gap_min dimension mismatch");
  if (a.empty() || b.empty()) throw PreconditionError("lp_gap_min requires non-empty sets");
  require_bounded(a, "A");
  require_bounded(b, "B");
  require_nonnegative(a, "A");
  require_nonnegative(b, "B");
  require_nested(a, b);

  std::size_t d = a.ambient_dim;
  GapResult out;

  if (contains_origin(a)) {
    // min_A(c) = 0 for every c >= 0; the gap condition holds with eps = 0.
    out.value = ExtRational(Rational(0));
    out.witness_direction = QVector(d);
    return out;
  }

  // Infinite-gap detection: a direction with min_B(c) = 0 < min_A(c).
  for (const auto& wstar : b.vertices) {
    HPolyhedron sys(d + 1);  // (c, rho)
    {
      QVector row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = wstar[j];
      sys.add_eq(row, Rational(0));
    }
    for (const auto& v : a.vertices) {
      QVector row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = -v[j];
      row[d] = 1;
      sys.add_ineq(row, Rational(0));  // rho <= c.v
    }
    for (std::size_t j = 0; j < d; ++j) {
      QVector lo(d + 1), hi(d + 1);
      lo[j] = -1;
      sys.add_ineq(lo, Rational(0));
      hi[j] = 1;
      sys.add_ineq(hi, Rational(1));
    }
    QVector obj(d + 1);
    obj[d] = 1;
    LpResult r = lp_solve(obj, LpSense::maximize, sys);
    if (r.optimal() && r.value > 0) {
      out.value = ExtRational::infinity();
      return out;
    }
  }

  // Anchored family: normalize min_B(c) = 1 at vertex w*, maximize min_A(c).
  bool any_feasible = false;
  Rational best(1);
  for (const auto& wstar : b.vertices) {
    HPolyhedron sys(d + 1);
    {
      QVector row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = wstar[j];
      sys.add_eq(row, Rational(1));
    }
    for (const auto& w : b.vertices) {
      QVector row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = -w[j];
      sys.add_ineq(row, Rational(-1));  // c.w >= 1
    }
    for (const auto& v : a.vertices) {
      QVector row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = -v[j];
      row[d] = 1;
      sys.add_ineq(row, Rational(0));  // rho <= c.v
    }
    for (std::size_t j = 0; j < d; ++j) {
      QVector row(d + 1);
      row[j] = -1;
      sys.add_ineq(row, Rational(0));
    }
    QVector obj(d + 1);
    obj[d] = 1;
    LpResult r = lp_solve(obj, LpSense::maximize, sys);
    if (r.status == LpStatus::infeasible) continue;
    if (r.status == LpStatus::unbounded) {
      out.value = ExtRational::infinity();
      return out;
    }
    if (!any_feasible || r.value > best) {
      best = r.value;
      QVector c(d);
      for (std::size_t j = 0; j < d; ++j) c[j] = r.witness[j];
      out.witness_direction = c;
      out.witness_point_b = wstar;
    }
    any_feasible = true;
  }
  if (!any_feasible) {
    // min_B(c) = 0 for every c >= 0 and no infinite gap: ratios are all 0/0.
    out.value = ExtRational(Rational(0));
    out.witness_direction = QVector(d);
    return out;
  }
  // Record a minimizing vertex of A for the winning direction.
  {
    Rational best_val;
    bool first = true;
    for (const auto& v : a.vertices) {
      Rational val = dot(out.witness_direction, v);
      if (first || val < best_val) {
        best_val = val;
        out.witness_point_a = v;
        first = false;
      }
    }
  }
  out.value = ExtRational(best - 1);
  return out;
}

Rational hausdorff_sq(const VPolytope& a, const VPolytope& b, const Caps& caps) {
  if (a.ambient_dim != b.ambient_dim) throw ContractError("hausdorff_sq dimension mismatch");
  if (a.empty() || b.empty()) throw PreconditionError("hausdorff_sq requires non-empty sets");
  require_bounded(a, "A");
  require_bounded(b, "B");
  require_nested(a, b);
  HPolyhedron ha = hull(a, caps);
  Rational worst(0);
  for (const auto& bv : b.vertices) {
    Rational dist = min_sq_distance(bv, ha, caps);
    if (dist > worst) worst = dist;
  }
  return worst;
}

}  // namespace milef
