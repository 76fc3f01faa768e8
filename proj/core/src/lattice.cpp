#include "milef/lattice.hpp"

#include <algorithm>

#include "milef/errors.hpp"
#include "milef/lp.hpp"

namespace milef {

UnimodularMatrix::UnimodularMatrix(QMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw ContractError("unimodular matrix must be square");
  if (!m_.is_integral()) throw ContractError("unimodular matrix must be integral");
  Rational det = m_.determinant();
  if (det != 1 && det != -1)
    throw ContractError("matrix is not unimodular: det = " + to_string(det));
}

QVector primitive(const QVector& v) {
  if (!v.is_integral()) throw ContractError("primitive() requires an integer vector");
  if (v.is_zero()) throw ContractError("primitive() of the zero vector");
  Integer g(0);
  for (std::size_t i = 0; i < v.dim(); ++i)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_num().get_mpz_t());
  QVector out(v.dim());
  int sign = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out[i] = v[i] / Rational(g);
    if (sign == 0 && out[i] != 0) sign = out[i] > 0 ? 1 : -1;
  }
  if (sign < 0)
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = -out[i];
  return out;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::pair<QMatrix, UnimodularMatrix> hnf(const QMatrix& m) {
  if (!m.is_integral()) throw ContractError("hnf requires an integer matrix");
  std::size_t rows = m.rows(), cols = m.cols();
  QMatrix h = m;
  QMatrix u = QMatrix::identity(cols);

  auto col_sub = [&](std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    Rational rq(q);
    for (std::size_t i = 0; i < rows; ++i) h(i, target) -= rq * h(i, source);
    for (std::size_t i = 0; i < cols; ++i) u(i, target) -= rq * u(i, source);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(h(i, a), h(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(u(i, a), u(i, b));
  };
  auto col_negate = [&](std::size_t a) {
    for (std::size_t i = 0; i < rows; ++i) h(i, a) = -h(i, a);
    for (std::size_t i = 0; i < cols; ++i) u(i, a) = -u(i, a);
  };

  std::size_t c = 0;
  for (std::size_t i = 0; i < rows && c < cols; ++i) {
    // Gather row i's mass into column c by gcd column operations.
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (h(i, j) == 0) continue;
        if (best == cols || abs(h(i, j).get_num()) < abs(h(i, best).get_num())) best = j;
      }
      if (best == cols) break;  // row is zero from column c on
      col_swap(best, c);
      bool reduced_all = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (h(i, j) == 0) continue;
        Integer q = floor_div(h(i, j).get_num(), h(i, c).get_num());
        col_sub(j, c, q);
        if (h(i, j) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (h(i, c) == 0) continue;  // no pivot in this row
    if (h(i, c) < 0) col_negate(c);
    // Reduce entries left of the pivot to [0, pivot).
    for (std::size_t j = 0; j < c; ++j) {
      Integer q = floor_div(h(i, j).get_num(), h(i, c).get_num());
      col_sub(j, c, q);
    }
    ++c;
  }
  return {h, UnimodularMatrix(u)};
}

UnimodularMatrix unimodular_completion(const QVector& v) {
  if (!v.is_integral()) throw ContractError("unimodular_completion requires an integer vector");
  if (v.is_zero()) throw ContractError("unimodular_completion of the zero vector");
  std::size_t k = v.dim();
  QMatrix row(1, k);
  for (std::size_t j = 0; j < k; ++j) row(0, j) = v[j];
  auto [h, a] = hnf(row);
  if (h(0, 0) != 1)
    throw PreconditionError("unimodular_completion: gcd(v) = " + to_string(h(0, 0)) +
                            " != 1; apply primitive() first");
  // v^T A = e1^T, so U = A^{-1} has first row v^T.
  QMatrix u = a.entries().inverse();
  if (!u.is_integral()) throw Error("unimodular completion produced a non-integral inverse");
  for (std::size_t j = 0; j < k; ++j)
    if (u(0, j) != v[j]) throw Error("unimodular completion lost the first row");
  return UnimodularMatrix(u);
}

std::vector<QVector> integer_points(const HPolyhedron& p, const Caps& caps) {
  std::vector<QVector> out;
  if (p.trivially_infeasible() || !is_feasible(p)) return out;
  std::size_t d = p.ambient_dim();
  if (d == 0) return {QVector(0)};
  BoundingBox box = bounding_box(p);
  if (!box.bounded()) throw PreconditionError("integer_points: polyhedron is unbounded");

  std::vector<Integer> lo(d), hi(d);
  Integer total(1);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = ceil(*box.lower[j]);
    hi[j] = floor(*box.upper[j]);
    if (hi[j] < lo[j]) return out;
    total *= hi[j] - lo[j] + 1;
  }
  if (total > caps.max_box_points)
    throw ResourceError("integer_points: bounding box holds " + total.get_str() +
                        " candidates, above the cap of " + std::to_string(caps.max_box_points));

  QVector candidate(d);
  std::vector<Integer> cursor = lo;
  for (;;) {
    for (std::size_t j = 0; j < d; ++j) candidate[j] = Rational(cursor[j]);
    if (p.contains(candidate)) out.push_back(candidate);
    std::size_t j = 0;
    while (j < d) {
      ++cursor[j];
      if (cursor[j] <= hi[j]) break;
      cursor[j] = lo[j];
      ++j;
    }
    if (j == d) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

namespace {

// Deterministic preference among equal-width directions: compare coordinates
// from the last axis backwards, so directions supported on earlier axes win.
bool direction_preferred(const QVector& a, const QVector& b) {
  for (std::size_t i = a.dim(); i-- > 0;) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

WidthCertificate lattice_width(const HPolyhedron& b, int v_max, const Caps& caps) {
  std::size_t k = b.ambient_dim();
  if (k == 0) throw ContractError("lattice_width in dimension zero");
  if (static_cast<int>(k) > caps.max_enum_dim)
    throw ResourceError("lattice_width: dimension exceeds cap");
  if (!is_feasible(b)) throw PreconditionError("lattice_width of an empty polyhedron");
  if (!is_bounded(b)) throw PreconditionError("lattice_width of an unbounded polyhedron");

  // A lower-dimensional body has width zero along any integer normal of its
  // affine hull.
  HPolyhedron tight = irredundant(b);
  if (tight.num_eq() > 0) {
    QVector normal = primitive(primitive_direction(tight.eq_lhs().row(0)));
    QVector point = lp_solve(QVector(k), LpSense::maximize, b).witness;
    WidthCertificate cert;
    cert.direction = normal;
    cert.width = 0;
    cert.max_point = point;
    cert.min_point = point;
    cert.exact = true;
    return cert;
  }

  WidthCertificate best;
  bool have = false;
  QVector v(k);
  std::vector<long> cursor(k, -v_max);
  for (;;) {
    for (std::size_t j = 0; j < k; ++j) v[j] = Rational(cursor[j]);
    if (!v.is_zero()) {
      QVector pv = primitive(v);
      if (pv == v) {  // visit each primitive direction once
        LpResult hi = lp_solve(v, LpSense::maximize, b);
        LpResult lo = lp_solve(v, LpSense::minimize, b);
        Rational width = hi.value - lo.value;
        if (!have || width < best.width ||
            (width == best.width && direction_preferred(v, best.direction))) {
          best.direction = v;
          best.width = width;
          best.max_point = hi.witness;
          best.min_point = lo.witness;
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
  if (!have) throw Error("lattice_width: no direction examined");

  // Certify through an inscribed box c + rho [-1,1]^k: any direction outside
  // the search box then has extent >= 2 rho (v_max + 1).
  HPolyhedron chebyshev(k + 1);
  for (std::size_t i = 0; i < b.num_ineq(); ++i) {
    QVector row(k + 1);
    Rational norm1(0);
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = b.ineq_lhs()(i, j);
      norm1 += abs(b.ineq_lhs()(i, j));
    }
    row[k] = norm1;
    chebyshev.add_ineq(row, b.ineq_rhs()[i]);
  }
  {
    QVector row(k + 1);
    row[k] = -1;
    chebyshev.add_ineq(row, Rational(0));
  }
  QVector obj(k + 1);
  obj[k] = 1;
  LpResult rho = lp_solve(obj, LpSense::maximize, chebyshev);
  if (rho.optimal() && rho.value > 0)
    best.exact = Rational(2) * rho.value * Rational(v_max + 1) >= best.width;
  return best;
}

Rational flt_bound(int k, const std::map<int, Rational>* overrides) {
  if (k < 1) throw ContractError("flt_bound requires k >= 1");
  if (overrides) {
    auto it = overrides->find(k);
    if (it != overrides->end()) return it->second;
  }
  if (k == 1) return Rational(1);
  if (k == 2) return rat(11, 5);
  // ceil(k^{5/2}), a conservative polynomial bound.
  Integer k5 = Integer(k) * k * k * k * k;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), k5.get_mpz_t());
  if (rem != 0) root += 1;
  return Rational(root);
}

}  // namespace milef
