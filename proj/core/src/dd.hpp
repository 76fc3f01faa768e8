#pragma once

// Internal double description engine over cones {y : g_i . y <= 0},
// shared by the vertex enumerator and the parametric fiber engine.

#include <string>
#include <vector>

#include "milef/caps.hpp"
#include "milef/errors.hpp"
#include "milef/geometry.hpp"

namespace milef::detail {

// Lineality is tracked explicitly: the current cone is cone(rays) + span(lin)
// with rays kept extreme modulo the lineality space. Tight sets over the
// processed rows drive the combinatorial adjacency test.
class ConeDD {
 public:
  explicit ConeDD(std::size_t dim) : dim_(dim) {
    for (std::size_t i = 0; i < dim; ++i) lin_.push_back(QVector::unit(dim, i));
  }

  void add_inequality(const QVector& a) {
    std::size_t hit = lin_.size();
    for (std::size_t i = 0; i < lin_.size(); ++i)
      if (dot(a, lin_[i]) != 0) {
        hit = i;
        break;
      }
    if (hit != lin_.size()) {
      QVector l0 = lin_[hit];
      Rational al0 = dot(a, l0);
      lin_.erase(lin_.begin() + static_cast<std::ptrdiff_t>(hit));
      for (auto& l : lin_) {
        Rational s = dot(a, l);
        if (s != 0) l = l - l0 * (s / al0);
      }
      for (auto& r : rays_) {
        Rational s = dot(a, r.dir);
        if (s != 0) r.dir = primitive_direction(r.dir - l0 * (s / al0));
        r.tight.push_back(true);
      }
      Ray fresh;
      fresh.dir = primitive_direction(al0 > 0 ? l0 * Rational(-1) : l0);
      fresh.tight.assign(processed_, true);
      fresh.tight.push_back(false);
      rays_.push_back(std::move(fresh));
      ++processed_;
      return;
    }

    std::vector<std::size_t> neg, zero, pos;
    std::vector<Rational> val(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      val[i] = dot(a, rays_[i].dir);
      if (val[i] < 0)
        neg.push_back(i);
      else if (val[i] == 0)
        zero.push_back(i);
      else
        pos.push_back(i);
    }
    if (pos.empty()) {
      for (std::size_t i = 0; i < rays_.size(); ++i) rays_[i].tight.push_back(val[i] == 0);
      ++processed_;
      return;
    }

    std::vector<Ray> next;
    next.reserve(neg.size() + zero.size() + neg.size() * pos.size());
    for (std::size_t i : neg) {
      Ray r = rays_[i];
      r.tight.push_back(false);
      next.push_back(std::move(r));
    }
    for (std::size_t i : zero) {
      Ray r = rays_[i];
      r.tight.push_back(true);
      next.push_back(std::move(r));
    }
    for (std::size_t i : neg)
      for (std::size_t j : pos) {
        if (!adjacent(i, j)) continue;
        Ray combo;
        combo.dir = primitive_direction(rays_[i].dir * val[j] - rays_[j].dir * val[i]);
        combo.tight.resize(processed_ + 1);
        for (std::size_t k = 0; k < processed_; ++k)
          combo.tight[k] = rays_[i].tight[k] && rays_[j].tight[k];
        combo.tight[processed_] = true;
        next.push_back(std::move(combo));
      }
    rays_ = std::move(next);
    ++processed_;
  }

  const std::vector<QVector>& lineality() const { return lin_; }
  std::vector<QVector> ray_directions() const {
    std::vector<QVector> out;
    out.reserve(rays_.size());
    for (const auto& r : rays_) out.push_back(r.dir);
    return out;
  }

 private:
  struct Ray {
    QVector dir;
    std::vector<bool> tight;
  };

  bool adjacent(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      if (k == i || k == j) continue;
      bool covers = true;
      for (std::size_t t = 0; t < processed_ && covers; ++t)
        covers = !(rays_[i].tight[t] && rays_[j].tight[t]) || rays_[k].tight[t];
      if (covers) return false;
    }
    return true;
  }

  std::size_t dim_;
  std::vector<QVector> lin_;
  std::vector<Ray> rays_;
  std::size_t processed_ = 0;
};

struct ConeResult {
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
};

inline ConeResult cone_extreme_rays(std::size_t dim, const std::vector<QVector>& rows) {
  ConeDD dd(dim);
  for (const auto& row : rows)
    if (!row.is_zero()) dd.add_inequality(row);
  return {dd.ray_directions(), dd.lineality()};
}

struct ComponentVRep {
  std::vector<QVector> vertices;  // local coordinates
  std::vector<QVector> rays;
};

// Vertices / extreme rays of {w : a(row, var) w <= b[row]} restricted to the
// given rows and variables, via the homogenization {(w, t) : aw - bt <= 0,
// t >= 0}. Throws when the piece has a lineality space.
inline ComponentVRep component_vrep(const QMatrix& a, const std::vector<Rational>& b,
                                    const std::vector<std::size_t>& rows,
                                    const std::vector<std::size_t>& vars, const Caps& caps) {
  std::size_t cd = vars.size();
  if (static_cast<int>(cd) > caps.max_enum_dim)
    throw ResourceError("vertex enumeration refused: component dimension " +
                        std::to_string(cd) + " exceeds cap " +
                        std::to_string(caps.max_enum_dim));
  std::vector<QVector> cone_rows;
  cone_rows.reserve(rows.size() + 1);
  QVector trow(cd + 1);
  trow[cd] = -1;
  cone_rows.push_back(trow);
  for (std::size_t i : rows) {
    QVector row(cd + 1);
    for (std::size_t t = 0; t < cd; ++t) row[t] = a(i, vars[t]);
    row[cd] = -b[i];
    cone_rows.push_back(std::move(row));
  }
  ConeResult cone = cone_extreme_rays(cd + 1, cone_rows);
  if (!cone.lineality.empty())
    throw Error("polyhedron has a lineality space; no vertex description exists");
  ComponentVRep out;
  for (const auto& r : cone.rays) {
    if (r[cd] > 0) {
      QVector v(cd);
      for (std::size_t t = 0; t < cd; ++t) v[t] = r[t] / r[cd];
      out.vertices.push_back(std::move(v));
    } else {
      QVector v(cd);
      for (std::size_t t = 0; t < cd; ++t) v[t] = r[t];
      if (!v.is_zero()) out.rays.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace milef::detail
