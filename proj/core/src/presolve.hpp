#pragma once

// Internal helpers shared by the LP solver and the vertex enumerator:
// equality elimination (affine parametrization of {x : Ex = f}) and
// decomposition of an inequality system into independent components.

#include <numeric>
#include <vector>

#include "milef/polyhedra.hpp"

namespace milef::detail {

// After eliminating equalities: x = origin + basis * u with u free, and the
// inequality system rewritten as a * u <= b.
struct Reduced {
  bool infeasible = false;
  QVector origin;
  QMatrix basis{0, 0};  // ambient_dim x free_count
  QMatrix a{0, 0};
  std::vector<Rational> b;
  std::vector<std::size_t> row_origin;  // source inequality row per reduced row
  std::size_t dim() const { return basis.cols(); }
};

inline Reduced reduce_equalities(const HPolyhedron& p) {
  Reduced out;
  std::size_t d = p.ambient_dim();
  std::size_t me = p.num_eq();
  QMatrix work(me, d + 1);
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < d; ++j) work(i, j) = p.eq_lhs()(i, j);
    work(i, d) = p.eq_rhs()[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(d, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < me; ++col) {
    std::size_t pivot = r;
    while (pivot < me && work(pivot, col) == 0) ++pivot;
    if (pivot == me) continue;
    if (pivot != r)
      for (std::size_t j = 0; j <= d; ++j) std::swap(work(pivot, j), work(r, j));
    Rational inv = 1 / work(r, col);
    for (std::size_t j = col; j <= d; ++j) work(r, j) *= inv;
    for (std::size_t i = 0; i < me; ++i) {
      if (i == r || work(i, col) == 0) continue;
      Rational factor = work(i, col);
      for (std::size_t j = col; j <= d; ++j) work(i, j) -= factor * work(r, j);
    }
    pivot_cols.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  for (std::size_t i = r; i < me; ++i)
    if (work(i, d) != 0) {
      out.infeasible = true;
      return out;
    }

  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  out.origin = QVector(d);
  out.basis = QMatrix(d, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) out.basis(free_cols[k], k) = 1;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    out.origin[pivot_cols[i]] = work(i, d);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      out.basis(pivot_cols[i], k) = -work(i, free_cols[k]);
  }

  out.a = QMatrix(0, free_cols.size());
  for (std::size_t i = 0; i < p.num_ineq(); ++i) {
    QVector row(free_cols.size());
    Rational shift(0);
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& coef = p.ineq_lhs()(i, j);
      if (coef == 0) continue;
      shift += coef * out.origin[j];
      for (std::size_t k = 0; k < free_cols.size(); ++k)
        if (out.basis(j, k) != 0) row[k] += coef * out.basis(j, k);
    }
    Rational rhs = p.ineq_rhs()[i] - shift;
    if (row.is_zero()) {
      if (rhs < 0) {
        out.infeasible = true;
        return out;
      }
      continue;
    }
    out.a.append_row(row);
    out.b.push_back(rhs);
    out.row_origin.push_back(i);
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Variables of a * u <= b grouped into independent components; every row's
// support lies inside exactly one component.
struct Component {
  std::vector<std::size_t> vars;
  std::vector<std::size_t> rows;
};

inline std::vector<Component> split_components(const QMatrix& a, std::size_t dim) {
  UnionFind uf(dim);
  std::vector<std::vector<std::size_t>> row_vars(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < dim; ++k)
      if (a(i, k) != 0) row_vars[i].push_back(k);
    for (std::size_t t = 1; t < row_vars[i].size(); ++t) uf.unite(row_vars[i][0], row_vars[i][t]);
  }
  std::vector<Component> comps(dim);
  for (std::size_t k = 0; k < dim; ++k) comps[uf.find(k)].vars.push_back(k);
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!row_vars[i].empty()) comps[uf.find(row_vars[i][0])].rows.push_back(i);
  std::vector<Component> out;
  for (auto& c : comps)
    if (!c.vars.empty()) out.push_back(std::move(c));
  return out;
}

// Equality elimination for the fiber family {x : Ax <= b, Ex = f, S x = z - t}
// with z a parameter: the elimination runs once, per-z work is right-hand
// side evaluation only.
struct ParamReduced {
  bool infeasible_always = false;
  std::size_t zdim = 0;
  // Rows demanding c0[i] + cz[i] . z == 0.
  std::vector<Rational> cons0;
  QMatrix consz{0, 0};
  // origin(z) = origin0 + originz z; x = origin(z) + basis u.
  QVector origin0;
  QMatrix originz{0, 0};
  QMatrix basis{0, 0};
  // Surviving inequalities: a u <= b0 + bz z.
  QMatrix a{0, 0};
  std::vector<Rational> b0;
  QMatrix bz{0, 0};
  // Zero-support inequality rows: s0[i] + sz[i] . z >= 0 required.
  std::vector<Rational> s0;
  QMatrix sz{0, 0};
  std::vector<Component> comps;

  std::size_t dim() const { return basis.cols(); }

  // Right-hand sides for a concrete z; nullopt when that fiber is empty for
  // structural reasons (consistency or sign rows).
  std::optional<std::vector<Rational>> evaluate(const QVector& z) const {
    if (infeasible_always) return std::nullopt;
    for (std::size_t i = 0; i < cons0.size(); ++i) {
      Rational v = cons0[i];
      for (std::size_t j = 0; j < zdim; ++j) v += consz(i, j) * z[j];
      if (v != 0) return std::nullopt;
    }
    for (std::size_t i = 0; i < s0.size(); ++i) {
      Rational v = s0[i];
      for (std::size_t j = 0; j < zdim; ++j) v += sz(i, j) * z[j];
      if (v < 0) return std::nullopt;
    }
    std::vector<Rational> b(b0);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < zdim; ++j)
        if (bz(i, j) != 0) b[i] += bz(i, j) * z[j];
    return b;
  }

  QVector lift(const QVector& z, const QVector& u) const {
    QVector x = origin0 + basis.apply(u);
    for (std::size_t p = 0; p < x.dim(); ++p)
      for (std::size_t j = 0; j < zdim; ++j)
        if (originz(p, j) != 0) x[p] += originz(p, j) * z[j];
    return x;
  }
};

inline ParamReduced reduce_equalities_parametric(const HPolyhedron& p, const AffineMap& sigma) {
  ParamReduced out;
  std::size_t d = p.ambient_dim();
  std::size_t k = sigma.target_dim();
  out.zdim = k;
  std::size_t me = p.num_eq() + k;
  std::size_t width = d + 1 + k;  // x columns, constant, z coefficients
  QMatrix work(me, width);
  for (std::size_t i = 0; i < p.num_eq(); ++i) {
    for (std::size_t j = 0; j < d; ++j) work(i, j) = p.eq_lhs()(i, j);
    work(i, d) = p.eq_rhs()[i];
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t r = p.num_eq() + i;
    for (std::size_t j = 0; j < d; ++j) work(r, j) = sigma.matrix(i, j);
    work(r, d) = -sigma.offset[i];
    work(r, d + 1 + i) = 1;
  }

  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(d, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < me; ++col) {
    std::size_t pivot = r;
    while (pivot < me && work(pivot, col) == 0) ++pivot;
    if (pivot == me) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < width; ++j) std::swap(work(pivot, j), work(r, j));
    Rational inv = 1 / work(r, col);
    for (std::size_t j = col; j < width; ++j) work(r, j) *= inv;
    for (std::size_t i = 0; i < me; ++i) {
      if (i == r || work(i, col) == 0) continue;
      Rational factor = work(i, col);
      for (std::size_t j = col; j < width; ++j) work(i, j) -= factor * work(r, j);
    }
    pivot_cols.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  out.consz = QMatrix(0, k);
  for (std::size_t i = r; i < me; ++i) {
    bool zero_rhs = work(i, d) == 0;
    for (std::size_t j = 0; j < k && zero_rhs; ++j) zero_rhs = work(i, d + 1 + j) == 0;
    if (zero_rhs) continue;
    bool const_only = true;
    for (std::size_t j = 0; j < k && const_only; ++j) const_only = work(i, d + 1 + j) == 0;
    if (const_only) {
      out.infeasible_always = true;
      return out;
    }
    QVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = work(i, d + 1 + j);
    out.consz.append_row(row);
    out.cons0.push_back(work(i, d));
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  std::size_t nf = free_cols.size();

  out.origin0 = QVector(d);
  out.originz = QMatrix(d, k);
  out.basis = QMatrix(d, nf);
  for (std::size_t t = 0; t < nf; ++t) out.basis(free_cols[t], t) = 1;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    std::size_t pc = pivot_cols[i];
    out.origin0[pc] = work(i, d);
    for (std::size_t j = 0; j < k; ++j) out.originz(pc, j) = work(i, d + 1 + j);
    for (std::size_t t = 0; t < nf; ++t) out.basis(pc, t) = -work(i, free_cols[t]);
  }

  out.a = QMatrix(0, nf);
  out.bz = QMatrix(0, k);
  out.sz = QMatrix(0, k);
  for (std::size_t i = 0; i < p.num_ineq(); ++i) {
    QVector row(nf);
    Rational shift0(0);
    QVector shiftz(k);
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& coef = p.ineq_lhs()(i, j);
      if (coef == 0) continue;
      shift0 += coef * out.origin0[j];
      for (std::size_t t = 0; t < k; ++t)
        if (out.originz(j, t) != 0) shiftz[t] += coef * out.originz(j, t);
      for (std::size_t t = 0; t < nf; ++t)
        if (out.basis(j, t) != 0) row[t] += coef * out.basis(j, t);
    }
    Rational rhs0 = p.ineq_rhs()[i] - shift0;
    QVector rhsz(k);
    for (std::size_t t = 0; t < k; ++t) rhsz[t] = -shiftz[t];
    if (row.is_zero()) {
      out.s0.push_back(rhs0);
      out.sz.append_row(rhsz);
      continue;
    }
    out.a.append_row(row);
    out.b0.push_back(rhs0);
    out.bz.append_row(rhsz);
  }
  out.comps = split_components(out.a, nf);
  return out;
}

}  // namespace milef::detail
