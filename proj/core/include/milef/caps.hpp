#pragma once

#include <cstdint>

namespace milef {

/// Desk-scale resource limits. Every enumeration-heavy operation takes a
/// Caps value and refuses, with a ResourceError, instead of running away.
struct Caps {
  /// Maximum effective dimension for vertex enumeration. "Effective" means
  /// the dimension of a connected component after equality rows have been
  /// eliminated; that is what actually drives enumeration cost.
  int max_enum_dim = 16;
  /// Maximum number of candidate points a lattice-point sweep may visit.
  std::int64_t max_box_points = 200000;
  /// Maximum number of vertices/rays an enumeration may produce.
  std::int64_t max_output_vertices = 200000;
  /// Search-box radius (infinity norm) for lattice-width direction sweeps.
  int v_max = 5;
  /// Largest graph the combinatorial oracles accept for 2^|E| sweeps.
  int max_oracle_n = 6;
  /// Maximum number of square row selections a subdeterminant sweep visits.
  std::int64_t max_det_subsets = 2000000;

  static Caps defaults() { return Caps{}; }
};

}  // namespace milef
