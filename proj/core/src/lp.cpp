#include "milef/lp.hpp"

#include <algorithm>

#include "milef/errors.hpp"
#include "presolve.hpp"
#include "simplex.hpp"

namespace milef {

namespace {

struct ReducedContext {
  detail::Reduced red;
  std::vector<detail::Component> comps;
};

ReducedContext prepare(const HPolyhedron& p) {
  ReducedContext ctx;
  ctx.red = detail::reduce_equalities(p);
  if (!ctx.red.infeasible) ctx.comps = detail::split_components(ctx.red.a, ctx.red.dim());
  return ctx;
}

LpResult solve_prepared(const ReducedContext& ctx, const QVector& objective, LpSense sense,
                        std::size_t ambient_dim) {
  QVector c = objective;
  if (sense == LpSense::minimize)
    for (std::size_t j = 0; j < c.dim(); ++j) c[j] = -c[j];

  LpResult out;
  if (ctx.red.infeasible) {
    out.status = LpStatus::infeasible;
    return out;
  }
  const detail::Reduced& red = ctx.red;
  std::size_t ud = red.dim();

  QVector cu(ud);
  Rational base_value(0);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (c[j] == 0) continue;
    base_value += c[j] * red.origin[j];
    for (std::size_t k = 0; k < ud; ++k)
      if (red.basis(j, k) != 0) cu[k] += c[j] * red.basis(j, k);
  }

  QVector u(ud);
  QVector ray_u(ud);
  bool unbounded = false;
  Rational total = base_value;

  for (const auto& comp : ctx.comps) {
    if (comp.rows.empty()) {
      for (std::size_t k : comp.vars)
        if (cu[k] != 0) {
          unbounded = true;
          ray_u[k] = cu[k] > 0 ? Rational(1) : Rational(-1);
        }
      continue;
    }
    QVector sub_c(comp.vars.size());
    for (std::size_t t = 0; t < comp.vars.size(); ++t) sub_c[t] = cu[comp.vars[t]];
    detail::DenseLpResult sr = detail::solve_dense(red.a, red.b, comp.rows, comp.vars, sub_c);
    if (sr.status == LpStatus::infeasible) {
      out.status = LpStatus::infeasible;
      return out;
    }
    if (sr.status == LpStatus::unbounded) {
      unbounded = true;
      for (std::size_t t = 0; t < comp.vars.size(); ++t) ray_u[comp.vars[t]] = sr.point[t];
      continue;
    }
    total += sr.value;
    for (std::size_t t = 0; t < comp.vars.size(); ++t) u[comp.vars[t]] = sr.point[t];
  }

  if (unbounded) {
    out.status = LpStatus::unbounded;
    out.witness = red.basis.apply(ray_u);
    return out;
  }
  out.status = LpStatus::optimal;
  out.value = sense == LpSense::minimize ? -total : total;
  out.witness = red.origin + red.basis.apply(u);
  return out;
}

}  // namespace

LpResult lp_solve(const QVector& objective, LpSense sense, const HPolyhedron& p) {
  if (objective.dim() != p.ambient_dim())
    throw ContractError("lp_solve: objective length must equal ambient dimension");
  return solve_prepared(prepare(p), objective, sense, p.ambient_dim());
}

std::vector<LpResult> lp_solve_batch(const std::vector<QVector>& objectives, LpSense sense,
                                     const HPolyhedron& p) {
  ReducedContext ctx = prepare(p);
  std::vector<LpResult> out;
  out.reserve(objectives.size());
  for (const auto& c : objectives) {
    if (c.dim() != p.ambient_dim())
      throw ContractError("lp_solve_batch: objective length must equal ambient dimension");
    out.push_back(solve_prepared(ctx, c, sense, p.ambient_dim()));
  }
  return out;
}

bool is_feasible(const HPolyhedron& p) {
  return lp_solve(QVector(p.ambient_dim()), LpSense::maximize, p).status != LpStatus::infeasible;
}

bool BoundingBox::bounded() const {
  for (const auto& v : lower)
    if (!v) return false;
  for (const auto& v : upper)
    if (!v) return false;
  return true;
}

BoundingBox bounding_box(const HPolyhedron& p) {
  BoundingBox box;
  std::size_t d = p.ambient_dim();
  box.lower.resize(d);
  box.upper.resize(d);
  ReducedContext ctx = prepare(p);
  for (std::size_t j = 0; j < d; ++j) {
    QVector c(d);
    c[j] = 1;
    LpResult hi = solve_prepared(ctx, c, LpSense::maximize, d);
    if (hi.status == LpStatus::infeasible)
      throw PreconditionError("bounding_box of an empty polyhedron");
    LpResult lo = solve_prepared(ctx, c, LpSense::minimize, d);
    if (hi.optimal()) box.upper[j] = hi.value;
    if (lo.optimal()) box.lower[j] = lo.value;
  }
  return box;
}

bool is_bounded(const HPolyhedron& p) { return bounding_box(p).bounded(); }

}  // namespace milef
