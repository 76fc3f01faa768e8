#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "milef/polyhedra.hpp"

namespace milef {

enum class LpStatus { optimal, infeasible, unbounded };
enum class LpSense { maximize, minimize };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;   // objective value when optimal
  QVector witness;  // optimal point when optimal, certificate ray when unbounded

  bool optimal() const { return status == LpStatus::optimal; }
};

/// Exact rational LP over {x : Ax <= b, Ex = f}. Equalities are eliminated
/// up front, the remaining system is split into independent components, and
/// each component runs a two-phase simplex with Bland's anti-cycling rule
/// (entering variable: lowest index with improving reduced cost; leaving:
/// lowest basic index among minimum ratios), so termination is guaranteed.
LpResult lp_solve(const QVector& objective, LpSense sense, const HPolyhedron& p);

/// Solve several objectives over the same polyhedron, sharing the equality
/// elimination and component split across calls.
std::vector<LpResult> lp_solve_batch(const std::vector<QVector>& objectives, LpSense sense,
                                     const HPolyhedron& p);

bool is_feasible(const HPolyhedron& p);

/// Per-coordinate [min, max] over p; nullopt entry bound when unbounded in
/// that direction. Throws PreconditionError on infeasible input.
struct BoundingBox {
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
  bool bounded() const;
};
BoundingBox bounding_box(const HPolyhedron& p);

bool is_bounded(const HPolyhedron& p);

}  // namespace milef
