#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milef/caps.hpp"
#include "milef/slicing.hpp"

namespace milef {

/// Complete graph K_n (or an edge subset of it). Edges are unordered pairs
/// {v, w} with v < w, listed lexicographically, and every edge is oriented
/// from the lower to the higher endpoint. Following that orientation,
/// in_edges(v) are the edges entering v and out_edges(v) those leaving it.
struct CompleteGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static CompleteGraph complete(int n);
  CompleteGraph minus_edge(int v, int w) const;

  std::size_t edge_count() const { return edges.size(); }
  std::size_t edge_index(int v, int w) const;
  std::vector<std::size_t> incident(int v) const;
  std::vector<std::size_t> in_edges(int v) const;
  std::vector<std::size_t> out_edges(int v) const;
};

enum class OracleKind { matching, perfect_matching, vjoin, cut, odd_cut, tour };

/// Exact 0/1 vertex lists by exhaustive enumeration of the definitional
/// predicate over edge subsets (or vertex subsets for cuts, vertex
/// sequences for tours).
VPolytope oracle_vertices(OracleKind kind, int n, const Caps& caps = Caps::defaults());

/// Matching oracle for an arbitrary subgraph, in R^{E(g)}.
VPolytope matching_oracle(const CompleteGraph& g, const Caps& caps = Caps::defaults());

struct FormulationBundle {
  Milef milef;
  std::string family;
  std::string target_name;
  int n = 0;
  /// Dominant formulations are unbounded; they are verified through bounded
  /// windows (see verify_bundle) instead of exact vertex-set equality.
  bool dominant = false;
  std::optional<VPolytope> expected_vertices;
};

FormulationBundle matching_milef(const CompleteGraph& g);
FormulationBundle vjoin_milef(int n);
FormulationBundle cut_milef(int n);
FormulationBundle odd_cut_milef(int n);
FormulationBundle odd_cut_dominant_bimodular(int n);
FormulationBundle tsp_milef(int n, const Caps& caps = Caps::defaults());

/// Build a bundle by family name ("matching", "vjoin", "cut", "oddcut",
/// "oddcut-dominant", "tsp").
FormulationBundle make_bundle(const std::string& family, int n,
                              const Caps& caps = Caps::defaults());

struct BimodularityReport {
  Integer max_abs_subdet;
  bool is_bimodular = false;
  std::vector<std::size_t> witness_rows;  // a row selection attaining the max
};

/// Exhaustive exact sweep over all maximal square row selections. Requires
/// full column rank.
BimodularityReport bimodularity_check(const QMatrix& m, const Caps& caps = Caps::defaults());

/// Inequality-system coefficient matrix of the conic program behind the
/// odd-cut dominant, over columns (xbar, y, z): nonnegativity rows, the
/// arc-difference rows, and the parity row carrying the lone 2.
QMatrix odd_cut_conic_matrix(int n);

struct VerifyReport {
  bool pass = false;
  std::size_t produced_count = 0;
  std::size_t expected_count = 0;
  std::vector<QVector> missing;  // oracle vertices the formulation missed
  std::vector<QVector> extra;    // produced vertices outside the oracle set
};

/// Compare the projected mixed-integer hull of a bundle with its
/// combinatorial oracle, exactly. Dominant bundles are checked through the
/// documented bounded windows: oracle vectors must appear among the
/// projected fiber points, and every projected point must dominate an odd
/// cut within the unit box.
VerifyReport verify_bundle(const FormulationBundle& b, const Caps& caps = Caps::defaults());

}  // namespace milef
