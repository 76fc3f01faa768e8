#include "milef/slicing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dd.hpp"
#include "milef/errors.hpp"
#include "milef/lp.hpp"
#include "milef/metrics.hpp"
#include "presolve.hpp"
#include "simplex.hpp"

namespace milef {

Milef::Milef(HPolyhedron q, AffineMap sigma, AffineMap pi, std::optional<std::size_t> declared_m)
    : q_(std::move(q)), sigma_(std::move(sigma)), pi_(std::move(pi)) {
  if (sigma_.source_dim() != q_.ambient_dim())
    throw ContractError("milef: sigma source dimension must equal the ambient dimension of Q");
  if (pi_.source_dim() != q_.ambient_dim())
    throw ContractError("milef: pi source dimension must equal the ambient dimension of Q");
  declared_m_ = declared_m.value_or(q_.num_ineq());
  if (declared_m_ < 1) declared_m_ = 1;
}

HPolyhedron fiber(const Milef& m, const QVector& z) {
  if (z.dim() != m.k()) throw ContractError("fiber: z length must equal k");
  HPolyhedron out = m.q();
  for (std::size_t i = 0; i < m.k(); ++i)
    out.add_eq(m.sigma().matrix.row(i), z[i] - m.sigma().offset[i]);
  return out;
}

namespace {

HPolyhedron fiber_of(const HPolyhedron& q, const AffineMap& sigma, const QVector& z) {
  HPolyhedron out = q;
  for (std::size_t i = 0; i < sigma.target_dim(); ++i)
    out.add_eq(sigma.matrix.row(i), z[i] - sigma.offset[i]);
  return out;
}

// Enumerates fibers of (Q, sigma): the equality elimination runs once, each
// candidate z costs one right-hand-side evaluation plus component-wise
// feasibility with early exit.
class FiberEngine {
 public:
  FiberEngine(const HPolyhedron& q, const AffineMap& sigma)
      : pr_(detail::reduce_equalities_parametric(q, sigma)) {}

  bool feasible(const QVector& z) const {
    auto b = pr_.evaluate(z);
    if (!b) return false;
    for (const auto& comp : pr_.comps) {
      if (comp.rows.empty()) continue;
      auto sr = detail::solve_dense(pr_.a, *b, comp.rows, comp.vars, QVector(comp.vars.size()));
      if (sr.status == LpStatus::infeasible) return false;
    }
    return true;
  }

  // Fiber vertices lifted to the ambient space; nullopt when the fiber is
  // empty. Throws on unbounded fibers or component caps.
  std::optional<std::vector<QVector>> fiber_vertices(const QVector& z, const Caps& caps) const {
    auto b = pr_.evaluate(z);
    if (!b) return std::nullopt;
    std::vector<std::vector<QVector>> comp_vertices;
    std::vector<const std::vector<std::size_t>*> comp_vars;
    for (const auto& comp : pr_.comps) {
      if (comp.rows.empty())
        throw PreconditionError("fiber has a free direction; unbounded fibers are unsupported");
      detail::ComponentVRep rep = detail::component_vrep(pr_.a, *b, comp.rows, comp.vars, caps);
      if (!rep.rays.empty())
        throw PreconditionError("mixed_integer_hull: unbounded fiber");
      if (rep.vertices.empty()) return std::nullopt;  // component infeasible
      comp_vertices.push_back(std::move(rep.vertices));
      comp_vars.push_back(&comp.vars);
    }
    std::size_t ud = pr_.dim();
    std::int64_t count = 1;
    for (const auto& cv : comp_vertices) {
      count *= static_cast<std::int64_t>(cv.size());
      if (count > caps.max_output_vertices)
        throw ResourceError("fiber vertex enumeration would exceed the output cap");
    }
    std::vector<QVector> out;
    QVector current(ud);
    auto emit = [&](auto&& self, std::size_t level) -> void {
      if (level == comp_vertices.size()) {
        out.push_back(pr_.lift(z, current));
        return;
      }
      for (const auto& v : comp_vertices[level]) {
        for (std::size_t t = 0; t < comp_vars[level]->size(); ++t)
          current[(*comp_vars[level])[t]] = v[t];
        self(self, level + 1);
      }
    };
    emit(emit, 0);
    return out;
  }

 private:
  detail::ParamReduced pr_;
};

struct FiberSweep {
  FiberEngine engine;
  std::vector<QVector> points;  // z with non-empty fiber, lexicographically
};

FiberSweep sweep_fibers(const HPolyhedron& q, const AffineMap& sigma, const Caps& caps) {
  if (sigma.source_dim() != q.ambient_dim())
    throw ContractError("fiber sweep: sigma source dimension mismatch");
  FiberSweep sweep{FiberEngine(q, sigma), {}};
  std::size_t k = sigma.target_dim();
  if (k == 0) {
    QVector none(0);
    if (sweep.engine.feasible(none)) sweep.points.push_back(none);
    return sweep;
  }

  // Box of the sigma image. Interval arithmetic over per-variable bounds
  // (read off singleton rows) gives a valid enclosing box without LPs; rows
  // it cannot bound fall back to exact LPs. Enclosure is safe: infeasible
  // candidates are filtered below.
  std::size_t d = q.ambient_dim();
  std::vector<std::optional<Rational>> vlo(d), vhi(d);
  auto meet_ineq = [&](const QVector& row, const Rational& rhs) {
    std::size_t nz = d, count = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (row[j] != 0) {
        nz = j;
        ++count;
      }
    if (count != 1) return;
    Rational bound = rhs / row[nz];
    if (row[nz] > 0) {
      if (!vhi[nz] || bound < *vhi[nz]) vhi[nz] = bound;
    } else {
      if (!vlo[nz] || bound > *vlo[nz]) vlo[nz] = bound;
    }
  };
  for (std::size_t i = 0; i < q.num_ineq(); ++i) meet_ineq(q.ineq_lhs().row(i), q.ineq_rhs()[i]);
  for (std::size_t i = 0; i < q.num_eq(); ++i) {
    meet_ineq(q.eq_lhs().row(i), q.eq_rhs()[i]);
    QVector neg(d);
    for (std::size_t j = 0; j < d; ++j) neg[j] = -q.eq_lhs()(i, j);
    meet_ineq(neg, -q.eq_rhs()[i]);
  }

  std::vector<Integer> lo(k), hi(k);
  std::vector<std::size_t> need_lp;
  for (std::size_t i = 0; i < k; ++i) {
    Rational upper = sigma.offset[i], lower = sigma.offset[i];
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      const Rational& c = sigma.matrix(i, j);
      if (c == 0) continue;
      const auto& top = c > 0 ? vhi[j] : vlo[j];
      const auto& bot = c > 0 ? vlo[j] : vhi[j];
      if (!top || !bot) {
        ok = false;
        break;
      }
      upper += c * *top;
      lower += c * *bot;
    }
    if (ok) {
      hi[i] = floor(upper);
      lo[i] = ceil(lower);
    } else {
      need_lp.push_back(i);
    }
  }
  if (!need_lp.empty()) {
    std::vector<QVector> objectives;
    for (std::size_t i : need_lp) objectives.push_back(sigma.matrix.row(i));
    std::vector<LpResult> mx = lp_solve_batch(objectives, LpSense::maximize, q);
    std::vector<LpResult> mn = lp_solve_batch(objectives, LpSense::minimize, q);
    for (std::size_t t = 0; t < need_lp.size(); ++t) {
      std::size_t i = need_lp[t];
      if (mx[t].status == LpStatus::infeasible) return sweep;  // Q empty
      if (!mx[t].optimal() || !mn[t].optimal())
        throw PreconditionError("fiber sweep: sigma image is unbounded");
      hi[i] = floor(mx[t].value + sigma.offset[i]);
      lo[i] = ceil(mn[t].value + sigma.offset[i]);
    }
  }
  Integer total(1);
  for (std::size_t i = 0; i < k; ++i) {
    if (hi[i] < lo[i]) return sweep;
    total *= hi[i] - lo[i] + 1;
  }
  if (total > caps.max_box_points)
    throw ResourceError("fiber sweep: sigma-image box holds " + total.get_str() +
                        " candidates, above the cap of " + std::to_string(caps.max_box_points));

  std::vector<Integer> cursor = lo;
  QVector z(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) z[i] = Rational(cursor[i]);
    if (sweep.engine.feasible(z)) sweep.points.push_back(z);
    std::size_t i = 0;
    while (i < k) {
      ++cursor[i];
      if (cursor[i] <= hi[i]) break;
      cursor[i] = lo[i];
      ++i;
    }
    if (i == k) break;
  }
  std::sort(sweep.points.begin(), sweep.points.end(), lex_less);
  return sweep;
}

VPolytope mixed_integer_hull_swept(const FiberSweep& sweep, std::size_t ell, const Caps& caps) {
  std::vector<QVector> points;
  for (const auto& z : sweep.points) {
    auto fv = sweep.engine.fiber_vertices(z, caps);
    if (!fv) continue;
    if (static_cast<std::int64_t>(points.size() + fv->size()) > caps.max_output_vertices)
      throw ResourceError("mixed_integer_hull: fiber vertex union exceeds the output cap");
    points.insert(points.end(), fv->begin(), fv->end());
  }
  VPolytope out(ell);
  out.vertices = prune_to_extreme(points);
  return out;
}

}  // namespace

std::vector<QVector> nonempty_fiber_points(const HPolyhedron& q, const AffineMap& sigma,
                                           const Caps& caps) {
  return sweep_fibers(q, sigma, caps).points;
}

VPolytope mixed_integer_hull(const Milef& m, const Caps& caps) {
  // Boundedness of Q is enforced where it matters: the sweep rejects an
  // unbounded sigma image, and fiber enumeration rejects unbounded fibers.
  FiberSweep sweep = sweep_fibers(m.q(), m.sigma(), caps);
  return mixed_integer_hull_swept(sweep, m.ell(), caps);
}

VPolytope projected_mixed_integer_hull(const Milef& m, const Caps& caps) {
  FiberSweep sweep = sweep_fibers(m.q(), m.sigma(), caps);
  std::set<std::vector<Rational>> seen;
  std::vector<QVector> image;
  for (const auto& z : sweep.points) {
    auto fv = sweep.engine.fiber_vertices(z, caps);
    if (!fv) continue;
    for (const auto& x : *fv) {
      QVector y = m.pi().apply(x);
      if (seen.insert(y.entries()).second) image.push_back(y);
    }
  }
  VPolytope out(m.d());
  out.vertices = prune_to_extreme(image);
  return out;
}

VPolytope map_and_prune(const AffineMap& f, const VPolytope& v) {
  if (!v.bounded()) throw PreconditionError("map_and_prune requires a bounded input");
  std::vector<QVector> mapped;
  mapped.reserve(v.vertices.size());
  for (const auto& x : v.vertices) mapped.push_back(f.apply(x));
  VPolytope out(f.target_dim());
  out.vertices = prune_to_extreme(mapped);
  return out;
}

std::pair<HPolyhedron, AffineMap> balas_union(const std::vector<HPolyhedron>& parts) {
  if (parts.empty()) throw PreconditionError("balas_union of an empty part list");
  std::size_t ell = parts[0].ambient_dim();
  for (const auto& p : parts) {
    if (p.ambient_dim() != ell) throw ContractError("balas_union: mixed ambient dimensions");
    if (!is_feasible(p))
      throw PreconditionError("balas_union: empty part; the caller must filter empty pieces");
    if (!is_bounded(p))
      throw PreconditionError(
          "balas_union: unbounded part rejected; the closure of an unbounded disjunction need "
          "not be captured by this lifting");
  }
  std::size_t t = parts.size();
  std::size_t dim = t * ell + t;  // blocks x^0..x^{t-1}, then lambda
  HPolyhedron ext(dim);
  auto lambda_col = [&](std::size_t i) { return t * ell + i; };
  for (std::size_t i = 0; i < t; ++i) {
    const HPolyhedron& p = parts[i];
    for (std::size_t r = 0; r < p.num_ineq(); ++r) {
      QVector row(dim);
      for (std::size_t j = 0; j < ell; ++j) row[i * ell + j] = p.ineq_lhs()(r, j);
      row[lambda_col(i)] = -p.ineq_rhs()[r];
      ext.add_ineq(row, Rational(0));  // A_i x^i <= lambda_i b_i
    }
    for (std::size_t r = 0; r < p.num_eq(); ++r) {
      QVector row(dim);
      for (std::size_t j = 0; j < ell; ++j) row[i * ell + j] = p.eq_lhs()(r, j);
      row[lambda_col(i)] = -p.eq_rhs()[r];
      ext.add_eq(row, Rational(0));
    }
    QVector nonneg(dim);
    nonneg[lambda_col(i)] = -1;
    ext.add_ineq(nonneg, Rational(0));  // lambda_i >= 0
  }
  QVector sum(dim);
  for (std::size_t i = 0; i < t; ++i) sum[lambda_col(i)] = 1;
  ext.add_eq(sum, Rational(1));

  QMatrix proj(ell, dim);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < ell; ++j) proj(j, i * ell + j) = 1;
  return {std::move(ext), AffineMap(std::move(proj), QVector(ell))};
}

namespace {

// Deterministic preference among equal-count directions, favouring earlier
// coordinate axes; mirrors the lattice_width tie-break.
bool direction_preferred(const QVector& a, const QVector& b) {
  for (std::size_t i = a.dim(); i-- > 0;) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

SliceStep slice_once_impl(const AffineMap& sigma, const std::vector<QVector>& lattice_points,
                          const Rational& delta, const ExtRational& measured_rdist, int v_max) {
  std::size_t k = sigma.target_dim();
  std::size_t ell = sigma.source_dim();
  if (k < 1) throw ContractError("slice_once requires k >= 1");
  SliceStep step;
  step.family.ambient_dim = ell;

  QVector v = QVector::unit(k, 0);
  if (lattice_points.empty()) {
    step.sigma_lattice_empty = true;
  } else {
    // Minimize the exact slab count |{v.z}| over the direction box.
    std::size_t best_count = 0;
    bool have = false;
    QVector cand(k);
    std::vector<long> cursor(k, -v_max);
    for (;;) {
      for (std::size_t j = 0; j < k; ++j) cand[j] = Rational(cursor[j]);
      if (!cand.is_zero()) {
        QVector pc = primitive(cand);
        if (pc == cand) {
          std::set<Rational> values;
          for (const auto& z : lattice_points) values.insert(dot(cand, z));
          if (!have || values.size() < best_count ||
              (values.size() == best_count && direction_preferred(cand, v))) {
            best_count = values.size();
            v = cand;
            have = true;
          }
        }
      }
      std::size_t j = 0;
      while (j < k) {
        ++cursor[j];
        if (cursor[j] <= v_max) break;
        cursor[j] = -v_max;
        ++j;
      }
      if (j == k) break;
    }

    std::set<Rational> values;
    for (const auto& z : lattice_points) values.insert(dot(v, z));
    // Preimages sigma^{-1}({v.x = i}) of the covering hyperplanes.
    QVector normal(ell);
    Rational shift(0);
    for (std::size_t i = 0; i < k; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < ell; ++j) normal[j] += v[i] * sigma.matrix(i, j);
      shift += v[i] * sigma.offset[i];
    }
    for (const auto& value : values) {
      HPolyhedron h(ell);
      h.add_eq(normal, value - shift);
      step.family.subspaces.push_back(std::move(h));
    }

    // Count-bound certification against the measured relative distance.
    Rational bound_factor;
    bool check = true;
    if (measured_rdist.is_infinite())
      bound_factor = Rational(1);
    else if (measured_rdist.value() > 0)
      bound_factor = (1 + measured_rdist.value()) / measured_rdist.value();
    else
      check = false;
    if (check) {
      Rational bound = 1 + bound_factor * flt_bound(static_cast<int>(k));
      step.count_bound_certified = Rational(static_cast<long>(values.size())) <= bound;
    }
  }

  step.direction = v;
  UnimodularMatrix u = unimodular_completion(v);
  QMatrix drop_first(k - 1, k);
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) drop_first(i - 1, j) = u.entries()(i, j);
  AffineMap phi(drop_first, QVector(k - 1));
  step.tau = phi.after(sigma);
  (void)delta;
  return step;
}

}  // namespace

SliceStep slice_once(const HPolyhedron& d, const AffineMap& sigma, const Rational& delta,
                     int v_max, const Caps& caps) {
  if (sigma.source_dim() != d.ambient_dim())
    throw ContractError("slice_once: sigma source dimension mismatch");
  if (!(delta > 0)) throw PreconditionError("slice_once requires delta > 0");
  if (!is_bounded(d)) throw PreconditionError("slice_once requires a bounded D");
  auto zs = nonempty_fiber_points(d, sigma, caps);
  VPolytope d_sigma = mixed_integer_hull(Milef(d, sigma, AffineMap::identity(d.ambient_dim())),
                                         caps);
  ExtRational measured = rdist(d_sigma, vertices(d, caps), caps);
  return slice_once_impl(sigma, zs, delta, measured, v_max);
}

namespace {

HPolyhedron combine_subspaces(std::size_t ell, const HPolyhedron& a, const HPolyhedron& b) {
  HPolyhedron out(ell);
  for (std::size_t i = 0; i < a.num_eq(); ++i) out.add_eq(a.eq_lhs().row(i), a.eq_rhs()[i]);
  for (std::size_t i = 0; i < b.num_eq(); ++i) out.add_eq(b.eq_lhs().row(i), b.eq_rhs()[i]);
  return out;
}

struct SliceRec {
  std::vector<HPolyhedron> members;
  bool certified = true;
  bool lattice_empty = false;
};

SliceRec slice_recurse(const HPolyhedron& dcur, const VPolytope& dcur_vertices,
                       const AffineMap& sigma, const Rational& delta, const Caps& caps) {
  std::size_t ell = dcur.ambient_dim();
  SliceRec rec;
  if (sigma.target_dim() == 0) {
    rec.members.push_back(HPolyhedron::whole_space(ell));
    return rec;
  }
  FiberSweep sweep = sweep_fibers(dcur, sigma, caps);
  const auto& zs = sweep.points;
  VPolytope mih = mixed_integer_hull_swept(sweep, ell, caps);
  ExtRational measured = rdist(mih, dcur_vertices, caps);
  if (!measured.is_infinite() && measured.value() <= delta) {
    rec.members.push_back(HPolyhedron::whole_space(ell));
    return rec;
  }
  SliceStep step = slice_once_impl(sigma, zs, delta, measured, caps.v_max);
  rec.certified = step.count_bound_certified;
  if (step.sigma_lattice_empty) {
    rec.lattice_empty = true;
    return rec;  // no fibers: the empty family covers them vacuously
  }
  for (const auto& level : step.family.subspaces) {
    HPolyhedron child = intersect(dcur, level);
    VPolytope child_vertices = vertices(child, caps);
    SliceRec sub = slice_recurse(child, child_vertices, step.tau, delta, caps);
    rec.certified = rec.certified && sub.certified;
    rec.lattice_empty = rec.lattice_empty || sub.lattice_empty;
    for (const auto& h : sub.members) rec.members.push_back(combine_subspaces(ell, level, h));
  }
  return rec;
}

}  // namespace

SliceCertificate slice_family(const HPolyhedron& d, const AffineMap& sigma, const Rational& delta,
                              const Caps& caps) {
  if (sigma.source_dim() != d.ambient_dim())
    throw ContractError("slice_family: sigma source dimension mismatch");
  if (!(delta > 0)) throw PreconditionError("slice_family requires delta > 0");
  std::size_t ell = d.ambient_dim();
  std::size_t k = sigma.target_dim();

  SliceCertificate cert;
  cert.delta = delta;
  cert.family.ambient_dim = ell;
  cert.theoretical_size_bound = Rational(1);
  Rational factor = (1 + delta) / delta;
  for (std::size_t i = 1; i <= k; ++i)
    cert.theoretical_size_bound *= 1 + factor * flt_bound(static_cast<int>(i));

  if (!is_feasible(d)) {
    // rdist(empty, empty) = 0 <= delta: the whole space suffices.
    cert.family.subspaces.push_back(HPolyhedron::whole_space(ell));
    cert.rdist_achieved = ExtRational(Rational(0));
    cert.fiber_cover_checked = true;
    return cert;
  }
  if (!is_bounded(d)) throw PreconditionError("slice_family requires a bounded D");

  VPolytope dv = vertices(d, caps);
  SliceRec rec = slice_recurse(d, dv, sigma, delta, caps);
  cert.family.subspaces = rec.members;
  cert.count_bound_certified = rec.certified;
  cert.sigma_lattice_empty = rec.lattice_empty;

  // Achieved distance rdist(D_sigma, D_H).
  FiberSweep sweep = sweep_fibers(d, sigma, caps);
  const auto& zs = sweep.points;
  VPolytope d_sigma = mixed_integer_hull_swept(sweep, ell, caps);
  std::vector<QVector> dh_points;
  for (const auto& h : cert.family.subspaces) {
    VPolytope sv = vertices(intersect(d, h), caps);
    dh_points.insert(dh_points.end(), sv.vertices.begin(), sv.vertices.end());
  }
  VPolytope dh(ell);
  dh.vertices = prune_to_extreme(dh_points);
  cert.rdist_achieved = rdist(d_sigma, dh, caps);

  // Fiber cover: every non-empty fiber must lie inside some family member.
  bool covered_all = true;
  for (const auto& z : zs) {
    HPolyhedron f = fiber_of(d, sigma, z);
    bool covered = false;
    for (const auto& h : cert.family.subspaces) {
      bool inside = true;
      for (std::size_t i = 0; i < h.num_eq() && inside; ++i) {
        QVector row = h.eq_lhs().row(i);
        LpResult mx = lp_solve(row, LpSense::maximize, f);
        LpResult mn = lp_solve(row, LpSense::minimize, f);
        inside = mx.optimal() && mn.optimal() && mx.value == h.eq_rhs()[i] &&
                 mn.value == h.eq_rhs()[i];
      }
      if (inside) {
        covered = true;
        break;
      }
    }
    covered_all = covered_all && covered;
  }
  cert.fiber_cover_checked = covered_all;
  return cert;
}

LefResult milef_to_lef(const Milef& m, const Rational& delta, const Caps& caps) {
  if (!(delta > 0)) throw PreconditionError("milef_to_lef requires delta > 0");
  LefResult out{HPolyhedron(0), AffineMap::identity(0), {}};
  out.report.theoretical_size_bound = lef_size_bound(m.declared_m(), m.k(), delta);

  if (m.k() == 0) {
    if (!is_feasible(m.q())) throw PreconditionError("milef_to_lef: empty formulation");
    out.lef = m.q();
    out.proj = m.pi();
    out.report.rdist_achieved = ExtRational(Rational(0));
    out.report.inequality_count = m.q().num_ineq();
    out.report.slice_count = 1;
    out.report.sum_facets_plus_one = m.q().num_ineq() + 1;
    return out;
  }

  SliceCertificate cert = slice_family(m.q(), m.sigma(), delta, caps);
  std::vector<HPolyhedron> slices;
  std::vector<VPolytope> slice_vertices;
  for (const auto& h : cert.family.subspaces) {
    HPolyhedron s = intersect(m.q(), h);
    if (!is_feasible(s)) continue;  // empty slices contribute nothing
    VPolytope sv = vertices(s, caps);
    slices.push_back(irredundant(s));
    slice_vertices.push_back(std::move(sv));
  }
  if (slices.empty())
    throw PreconditionError("milef_to_lef: all slices are empty (the modelled set is empty)");

  auto [ext, bproj] = balas_union(slices);
  out.lef = std::move(ext);
  out.proj = m.pi().after(bproj);
  out.report.slice_count = slices.size();
  out.report.inequality_count = out.lef.num_ineq();
  out.report.sum_facets_plus_one = 0;
  for (const auto& s : slices) out.report.sum_facets_plus_one += s.num_ineq() + 1;

  // Achieved distance between C = pi(Q_sigma) and pi(Q_H) = proj(lef).
  VPolytope c = map_and_prune(m.pi(), mixed_integer_hull(m, caps));
  std::vector<QVector> image_points;
  for (const auto& sv : slice_vertices)
    for (const auto& x : sv.vertices) image_points.push_back(m.pi().apply(x));
  VPolytope pl(m.d());
  pl.vertices = prune_to_extreme(image_points);
  out.report.rdist_achieved = rdist(c, pl, caps);
  return out;
}

Milef restrict_to_face(const Milef& m, const AffineMap& phi, const AffineMap& tau2,
                       const Caps& caps) {
  if (phi.target_dim() != 1) throw ContractError("restrict_to_face: phi must map to R^1");
  if (phi.source_dim() != m.d())
    throw ContractError("restrict_to_face: phi must act on the modelled space");
  if (tau2.source_dim() != m.d())
    throw ContractError("restrict_to_face: tau2 must act on the modelled space");

  AffineMap composed = phi.after(m.pi());
  VPolytope mih = mixed_integer_hull(m, caps);
  for (const auto& v : mih.vertices) {
    Rational value = composed.apply(v)[0];
    if (value < 0) {
      std::string coords;
      for (std::size_t j = 0; j < v.dim(); ++j) coords += (j ? "," : "") + to_string(v[j]);
      throw PreconditionError(
          "restrict_to_face: phi is negative on the mixed-integer hull vertex (" + coords + ")");
    }
  }
  HPolyhedron q = m.q();
  q.add_eq(composed.matrix.row(0), -composed.offset[0]);
  return Milef(std::move(q), m.sigma(), tau2.after(m.pi()), m.declared_m());
}

Rational lef_size_bound(std::size_t m, std::size_t k, const Rational& delta) {
  if (m < 1) throw ContractError("lef_size_bound requires m >= 1");
  if (!(delta > 0)) throw ContractError("lef_size_bound requires delta > 0");
  Rational out(static_cast<long>(m) + 1);
  Rational factor = (1 + delta) / delta;
  for (std::size_t i = 1; i <= k; ++i) out *= 1 + factor * flt_bound(static_cast<int>(i));
  return out;
}

}  // namespace milef
