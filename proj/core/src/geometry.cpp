#include "milef/geometry.hpp"

#include <algorithm>
#include <cstdint>

#include "dd.hpp"
#include "milef/errors.hpp"
#include "presolve.hpp"

namespace milef {

QVector primitive_direction(const QVector& direction) {
  Integer lcm_den(1), gcd_num(0);
  for (std::size_t i = 0; i < direction.dim(); ++i) {
    if (direction[i] == 0) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), direction[i].get_den().get_mpz_t());
  }
  QVector out(direction.dim());
  for (std::size_t i = 0; i < direction.dim(); ++i) {
    Rational scaled = direction[i] * Rational(lcm_den);
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_num().get_mpz_t());
    out[i] = scaled;
  }
  if (gcd_num == 0) return out;  // zero vector
  for (std::size_t i = 0; i < direction.dim(); ++i) out[i] /= Rational(gcd_num);
  return out;
}

VPolytope vertices(const HPolyhedron& p, const Caps& caps) {
  VPolytope out(p.ambient_dim());
  if (p.trivially_infeasible() || !is_feasible(p)) return out;

  detail::Reduced red = detail::reduce_equalities(p);
  if (red.infeasible) return out;
  std::size_t ud = red.dim();

  // Per-component vertex/ray sets in local coordinates.
  std::vector<std::vector<std::size_t>> comp_vars;
  std::vector<std::vector<QVector>> comp_vertices;
  std::vector<std::vector<QVector>> comp_rays;
  for (const auto& comp : detail::split_components(red.a, ud)) {
    if (comp.rows.empty())
      throw Error("polyhedron has a lineality space; no vertex description exists");
    detail::ComponentVRep rep = detail::component_vrep(red.a, red.b, comp.rows, comp.vars, caps);
    if (rep.vertices.empty()) throw Error("pointed component without vertices (internal)");
    comp_vars.push_back(comp.vars);
    comp_vertices.push_back(std::move(rep.vertices));
    comp_rays.push_back(std::move(rep.rays));
  }

  // Cross product of component vertex sets, in u-space.
  std::int64_t count = 1;
  for (const auto& v : comp_vertices) {
    count *= static_cast<std::int64_t>(v.size());
    if (count > caps.max_output_vertices)
      throw ResourceError("vertex enumeration would exceed the output cap");
  }
  std::vector<QVector> u_vertices;
  QVector current(ud);
  auto emit = [&](auto&& self, std::size_t level) -> void {
    if (level == comp_vertices.size()) {
      u_vertices.push_back(current);
      return;
    }
    for (const auto& v : comp_vertices[level]) {
      for (std::size_t t = 0; t < comp_vars[level].size(); ++t) current[comp_vars[level][t]] = v[t];
      self(self, level + 1);
    }
  };
  emit(emit, 0);

  for (const auto& u : u_vertices) out.vertices.push_back(red.origin + red.basis.apply(u));
  for (std::size_t c = 0; c < comp_rays.size(); ++c)
    for (const auto& r : comp_rays[c]) {
      QVector u(ud);
      for (std::size_t t = 0; t < comp_vars[c].size(); ++t) u[comp_vars[c][t]] = r[t];
      out.rays.push_back(primitive_direction(red.basis.apply(u)));
    }
  out.canonicalize();
  return out;
}

std::vector<QVector> enumerate_vertices_by_bases(const HPolyhedron& p, const Caps& caps) {
  std::size_t d = p.ambient_dim();
  std::size_t m = p.num_ineq() + p.num_eq();
  if (static_cast<int>(d) > caps.max_enum_dim)
    throw ResourceError("basis enumeration refused: dimension exceeds cap");
  auto row_of = [&](std::size_t i) {
    return i < p.num_ineq() ? p.ineq_lhs().row(i) : p.eq_lhs().row(i - p.num_ineq());
  };
  auto rhs_of = [&](std::size_t i) {
    return i < p.num_ineq() ? p.ineq_rhs()[i] : p.eq_rhs()[i - p.num_ineq()];
  };

  std::vector<QVector> found;
  std::vector<std::size_t> pick;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == d) {
      QMatrix mat(d, d);
      QVector rhs(d);
      for (std::size_t i = 0; i < d; ++i) {
        mat.set_row(i, row_of(pick[i]));
        rhs[i] = rhs_of(pick[i]);
      }
      if (mat.rank() != d) return;
      auto x = solve_linear(mat, rhs);
      if (x && p.contains(*x)) found.push_back(*x);
      return;
    }
    for (std::size_t i = start; i + (d - pick.size()) <= m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  if (d > 0 && m >= d) recurse(recurse, 0);
  if (d == 0 && is_feasible(p)) found.push_back(QVector(0));
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

HPolyhedron hull(const std::vector<QVector>& points, const Caps& caps) {
  return hull(VPolytope(points.empty() ? 0 : points[0].dim(), points), caps);
}

HPolyhedron hull(const VPolytope& v, const Caps& caps) {
  if (v.vertices.empty()) throw PreconditionError("hull of an empty point set");
  std::size_t d = v.ambient_dim;
  for (const auto& p : v.vertices)
    if (p.dim() != d) throw ContractError("hull: mixed point dimensions");
  if (d == 0) return HPolyhedron(0);
  if (static_cast<int>(d) + 1 > caps.max_enum_dim + 1)
    throw ResourceError("hull refused: dimension exceeds cap");

  // Valid inequalities a.x <= beta form the polar cone
  //   {(a, beta) : a.v - beta <= 0 for vertices, a.r <= 0 for rays};
  // its extreme rays are the facets, its lineality the affine hull.
  std::vector<QVector> rows;
  rows.reserve(v.vertices.size() + v.rays.size());
  for (const auto& p : v.vertices) {
    QVector row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = p[j];
    row[d] = -1;
    rows.push_back(std::move(row));
  }
  for (const auto& r : v.rays) {
    QVector row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = r[j];
    rows.push_back(std::move(row));
  }
  detail::ConeResult cone = detail::cone_extreme_rays(d + 1, rows);

  HPolyhedron out(d);
  std::vector<QVector> eq_rows, ineq_rows;
  for (const auto& l : cone.lineality) {
    QVector a(d);
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
      a[j] = l[j];
      nonzero = nonzero || a[j] != 0;
    }
    if (!nonzero) continue;
    QVector full = primitive_direction(l);
    eq_rows.push_back(full);
  }
  for (const auto& r : cone.rays) {
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) nonzero = nonzero || r[j] != 0;
    if (!nonzero) continue;  // the trivial 0 <= beta ray
    ineq_rows.push_back(r);
  }
  std::sort(eq_rows.begin(), eq_rows.end(), lex_less);
  std::sort(ineq_rows.begin(), ineq_rows.end(), lex_less);
  for (const auto& row : eq_rows) {
    QVector a(d);
    for (std::size_t j = 0; j < d; ++j) a[j] = row[j];
    out.add_eq(a, row[d]);
  }
  for (const auto& row : ineq_rows) {
    QVector a(d);
    for (std::size_t j = 0; j < d; ++j) a[j] = row[j];
    out.add_ineq(a, row[d]);
  }
  return out;
}

HPolyhedron project(const HPolyhedron& p, const AffineMap& f, const Caps& caps) {
  if (f.source_dim() != p.ambient_dim())
    throw ContractError("project: map source dimension must match polyhedron");
  VPolytope v = vertices(p, caps);
  if (v.empty()) {
    HPolyhedron empty(f.target_dim());
    empty.add_ineq(QVector(f.target_dim()), Rational(-1));
    return empty;
  }
  VPolytope image(f.target_dim());
  for (const auto& x : v.vertices) image.vertices.push_back(f.apply(x));
  for (const auto& r : v.rays) {
    QVector dir = f.matrix.apply(r);
    if (!dir.is_zero()) image.rays.push_back(dir);
  }
  image.canonicalize();
  return hull(image, caps);
}

HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& s) {
  if (p.ambient_dim() != s.ambient_dim())
    throw ContractError("intersect: ambient dimensions differ");
  HPolyhedron out = p;
  for (std::size_t i = 0; i < s.num_ineq(); ++i) out.add_ineq(s.ineq_lhs().row(i), s.ineq_rhs()[i]);
  for (std::size_t i = 0; i < s.num_eq(); ++i) out.add_eq(s.eq_lhs().row(i), s.eq_rhs()[i]);
  return out;
}

Rational min_sq_distance(const QVector& point, const HPolyhedron& p, const Caps& caps) {
  if (point.dim() != p.ambient_dim()) throw ContractError("min_sq_distance dimension mismatch");
  if (!is_feasible(p)) throw PreconditionError("min_sq_distance: empty polyhedron");
  if (p.contains(point)) return Rational(0);

  std::size_t d = p.ambient_dim();
  std::size_t m = p.num_ineq();

  // Project `point` onto {x : M x = c}; returns nullopt when inconsistent.
  auto project_affine = [&](const QMatrix& constraints,
                            const QVector& rhs) -> std::optional<QVector> {
    if (!solve_linear(constraints, rhs)) return std::nullopt;
    // Work with an independent row subset.
    QMatrix mat(0, d);
    std::vector<Rational> cvals;
    for (std::size_t i = 0; i < constraints.rows(); ++i) {
      QMatrix trial = mat;
      trial.append_row(constraints.row(i));
      if (trial.rank() == trial.rows()) {
        mat = std::move(trial);
        cvals.push_back(rhs[i]);
      }
    }
    if (mat.rows() == 0) return point;
    QVector cv(cvals.size());
    for (std::size_t i = 0; i < cvals.size(); ++i) cv[i] = cvals[i];
    // x* = point - M^T (M M^T)^{-1} (M point - c)
    QMatrix mt = mat.transposed();
    QMatrix gram_inv = mat.multiply(mt).inverse();
    QVector resid = mat.apply(point) - cv;
    return point - mt.apply(gram_inv.apply(resid));
  };

  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  std::int64_t budget = 2000000;
  auto consider = [&]() {
    QMatrix mcons(0, d);
    QVector rhs(pick.size() + p.num_eq());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < p.num_eq(); ++i) {
      mcons.append_row(p.eq_lhs().row(i));
      rhs[idx++] = p.eq_rhs()[i];
    }
    for (std::size_t i : pick) {
      mcons.append_row(p.ineq_lhs().row(i));
      rhs[idx++] = p.ineq_rhs()[i];
    }
    auto x = project_affine(mcons, rhs);
    if (!x || !p.contains(*x)) return;
    QVector diff = point - *x;
    Rational dist = dot(diff, diff);
    if (!best || dist < *best) best = dist;
  };
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (--budget < 0) throw ResourceError("min_sq_distance: face enumeration exceeded budget");
    consider();
    if (pick.size() == d) return;
    for (std::size_t i = start; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  (void)caps;
  if (!best) throw PreconditionError("min_sq_distance: no feasible face projection found");
  return *best;
}

HPolyhedron irredundant(const HPolyhedron& p) {
  std::size_t d = p.ambient_dim();
  // Normalize and deduplicate inequality rows.
  std::vector<std::pair<QVector, Rational>> rows;
  for (std::size_t i = 0; i < p.num_ineq(); ++i) {
    QVector a = p.ineq_lhs().row(i);
    Rational b = p.ineq_rhs()[i];
    std::size_t lead = d;
    for (std::size_t j = 0; j < d; ++j)
      if (a[j] != 0) {
        lead = j;
        break;
      }
    if (lead == d) continue;  // constant row; feasibility handled elsewhere
    Rational scale = a[lead] > 0 ? a[lead] : -a[lead];
    for (std::size_t j = 0; j < d; ++j) a[j] /= scale;
    b /= scale;
    rows.emplace_back(std::move(a), std::move(b));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first == y.first) return x.second < y.second;
    return lex_less(x.first, y.first);
  });
  // Among identical normals keep the tightest rhs.
  std::vector<std::pair<QVector, Rational>> dedup;
  for (auto& r : rows) {
    if (!dedup.empty() && dedup.back().first == r.first) continue;
    dedup.push_back(std::move(r));
  }

  std::vector<bool> alive(dedup.size(), true);
  auto build = [&](std::size_t skip, bool with_skip_relaxed) {
    HPolyhedron q(d);
    for (std::size_t i = 0; i < dedup.size(); ++i) {
      if (!alive[i]) continue;
      if (i == skip) {
        if (with_skip_relaxed) q.add_ineq(dedup[i].first, dedup[i].second + 1);
        continue;
      }
      q.add_ineq(dedup[i].first, dedup[i].second);
    }
    for (std::size_t i = 0; i < p.num_eq(); ++i) q.add_eq(p.eq_lhs().row(i), p.eq_rhs()[i]);
    return q;
  };

  for (std::size_t i = 0; i < dedup.size(); ++i) {
    HPolyhedron rest = build(i, true);
    LpResult r = lp_solve(dedup[i].first, LpSense::maximize, rest);
    if (r.optimal() && r.value <= dedup[i].second) alive[i] = false;
    if (r.status == LpStatus::infeasible) {
      // Empty polyhedron: canonical empty description.
      HPolyhedron empty(d);
      empty.add_ineq(QVector(d), Rational(-1));
      return empty;
    }
  }

  // Implicit equalities among the survivors.
  HPolyhedron out(d);
  for (std::size_t i = 0; i < p.num_eq(); ++i) out.add_eq(p.eq_lhs().row(i), p.eq_rhs()[i]);
  HPolyhedron full = build(dedup.size(), false);
  for (std::size_t i = 0; i < dedup.size(); ++i) {
    if (!alive[i]) continue;
    LpResult lo = lp_solve(dedup[i].first, LpSense::minimize, full);
    if (lo.optimal() && lo.value == dedup[i].second)
      out.add_eq(dedup[i].first, dedup[i].second);
    else
      out.add_ineq(dedup[i].first, dedup[i].second);
  }
  return out;
}

std::size_t facet_count(const HPolyhedron& p) { return irredundant(p).num_ineq(); }

bool point_in_vhull(const QVector& point, const VPolytope& v) {
  if (point.dim() != v.ambient_dim) throw ContractError("point_in_vhull dimension mismatch");
  if (v.vertices.empty()) return false;
  std::size_t nv = v.vertices.size(), nr = v.rays.size();
  HPolyhedron sys(nv + nr);
  // multipliers >= 0
  for (std::size_t i = 0; i < nv + nr; ++i) {
    QVector row(nv + nr);
    row[i] = -1;
    sys.add_ineq(row, Rational(0));
  }
  // convex combination
  QVector ones(nv + nr);
  for (std::size_t i = 0; i < nv; ++i) ones[i] = 1;
  sys.add_eq(ones, Rational(1));
  for (std::size_t j = 0; j < point.dim(); ++j) {
    QVector row(nv + nr);
    for (std::size_t i = 0; i < nv; ++i) row[i] = v.vertices[i][j];
    for (std::size_t i = 0; i < nr; ++i) row[nv + i] = v.rays[i][j];
    sys.add_eq(row, point[j]);
  }
  return is_feasible(sys);
}

std::vector<QVector> prune_to_extreme(const std::vector<QVector>& points) {
  std::vector<QVector> unique = points;
  std::sort(unique.begin(), unique.end(), lex_less);
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.size() <= 1) return unique;
  std::vector<QVector> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    VPolytope others(unique[0].dim());
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.vertices.push_back(unique[j]);
    if (!point_in_vhull(unique[i], others)) out.push_back(unique[i]);
  }
  return out;
}

}  // namespace milef
