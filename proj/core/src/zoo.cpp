#include "milef/zoo.hpp"

#include <algorithm>
#include <numeric>

#include "milef/errors.hpp"
#include "milef/lp.hpp"

namespace milef {

CompleteGraph CompleteGraph::complete(int n) {
  if (n < 1) throw ContractError("complete graph needs n >= 1");
  CompleteGraph g;
  g.n = n;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) g.edges.emplace_back(v, w);
  return g;
}

CompleteGraph CompleteGraph::minus_edge(int v, int w) const {
  if (v > w) std::swap(v, w);
  CompleteGraph g;
  g.n = n;
  for (const auto& e : edges)
    if (!(e.first == v && e.second == w)) g.edges.push_back(e);
  return g;
}

std::size_t CompleteGraph::edge_index(int v, int w) const {
  if (v > w) std::swap(v, w);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == v && edges[i].second == w) return i;
  throw ContractError("edge not present in graph");
}

std::vector<std::size_t> CompleteGraph::incident(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == v || edges[i].second == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> CompleteGraph::in_edges(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].second == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> CompleteGraph::out_edges(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == v) out.push_back(i);
  return out;
}

namespace {

QVector subset_vector(std::size_t num_edges, unsigned long mask) {
  QVector x(num_edges);
  for (std::size_t i = 0; i < num_edges; ++i)
    if (mask & (1ul << i)) x[i] = 1;
  return x;
}

void check_oracle_cap(int n, const Caps& caps) {
  if (n > caps.max_oracle_n)
    throw ResourceError("oracle sweep refused: n = " + std::to_string(n) + " above cap " +
                        std::to_string(caps.max_oracle_n));
}

std::vector<int> subset_degrees(const CompleteGraph& g, unsigned long mask) {
  std::vector<int> deg(g.n, 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (mask & (1ul << i)) {
      ++deg[g.edges[i].first];
      ++deg[g.edges[i].second];
    }
  return deg;
}

QVector cut_vector(const CompleteGraph& g, unsigned long s_mask) {
  QVector x(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    bool in1 = s_mask & (1ul << g.edges[i].first);
    bool in2 = s_mask & (1ul << g.edges[i].second);
    if (in1 != in2) x[i] = 1;
  }
  return x;
}

}  // namespace

VPolytope matching_oracle(const CompleteGraph& g, const Caps& caps) {
  check_oracle_cap(g.n, caps);
  VPolytope out(g.edges.size());
  for (unsigned long mask = 0; mask < (1ul << g.edges.size()); ++mask) {
    auto deg = subset_degrees(g, mask);
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; }))
      out.vertices.push_back(subset_vector(g.edges.size(), mask));
  }
  out.canonicalize();
  return out;
}

VPolytope oracle_vertices(OracleKind kind, int n, const Caps& caps) {
  check_oracle_cap(n, caps);
  CompleteGraph g = CompleteGraph::complete(n);
  std::size_t ne = g.edges.size();
  VPolytope out(ne);

  switch (kind) {
    case OracleKind::matching:
      return matching_oracle(g, caps);
    case OracleKind::perfect_matching: {
      if (n % 2 != 0) throw PreconditionError("perfect matchings need even n");
      for (unsigned long mask = 0; mask < (1ul << ne); ++mask) {
        auto deg = subset_degrees(g, mask);
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; }))
          out.vertices.push_back(subset_vector(ne, mask));
      }
      break;
    }
    case OracleKind::vjoin: {
      if (n % 2 != 0) throw PreconditionError("V-joins need even n");
      for (unsigned long mask = 0; mask < (1ul << ne); ++mask) {
        auto deg = subset_degrees(g, mask);
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 1; }))
          out.vertices.push_back(subset_vector(ne, mask));
      }
      break;
    }
    case OracleKind::cut: {
      for (unsigned long s = 0; s < (1ul << n); ++s) out.vertices.push_back(cut_vector(g, s));
      break;
    }
    case OracleKind::odd_cut: {
      if (n % 2 != 0) throw PreconditionError("odd cuts need even n");
      for (unsigned long s = 0; s < (1ul << n); ++s)
        if (__builtin_popcountl(s) % 2 == 1) out.vertices.push_back(cut_vector(g, s));
      break;
    }
    case OracleKind::tour: {
      if (n < 3) throw PreconditionError("tours need n >= 3");
      std::vector<int> perm(n - 1);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        QVector x(ne);
        int prev = 0;
        for (int v : perm) {
          x[g.edge_index(prev, v)] = 1;
          prev = v;
        }
        x[g.edge_index(prev, 0)] = 1;
        out.vertices.push_back(x);
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
  }
  out.canonicalize();
  return out;
}

FormulationBundle matching_milef(const CompleteGraph& g) {
  std::size_t ne = g.edges.size();
  HPolyhedron q(ne);
  for (std::size_t i = 0; i < ne; ++i) {
    QVector row(ne);
    row[i] = -1;
    q.add_ineq(row, Rational(0));  // x >= 0
  }
  for (int v = 0; v < g.n; ++v) {
    auto inc = g.incident(v);
    if (inc.empty()) continue;
    QVector row(ne);
    for (std::size_t i : inc) row[i] = 1;
    q.add_ineq(row, Rational(1));  // x(delta(v)) <= 1
  }
  QMatrix sm(g.n, ne);
  for (int v = 0; v < g.n; ++v)
    for (std::size_t i : g.in_edges(v)) sm(v, i) = 1;  // x(delta^+(v)) integral
  AffineMap sigma(std::move(sm), QVector(g.n));

  FormulationBundle b{Milef(std::move(q), std::move(sigma), AffineMap::identity(ne)),
                      "matching",
                      "matching:n" + std::to_string(g.n),
                      g.n,
                      false,
                      std::nullopt};
  return b;
}

FormulationBundle vjoin_milef(int n) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("vjoin_milef needs even n >= 2");
  CompleteGraph g = CompleteGraph::complete(n);
  std::size_t ne = g.edges.size();
  std::size_t dim = ne + static_cast<std::size_t>(n);  // (x, z)
  HPolyhedron q(dim);
  for (std::size_t i = 0; i < ne; ++i) {
    QVector up(dim), lo(dim);
    up[i] = 1;
    q.add_ineq(up, Rational(1));
    lo[i] = -1;
    q.add_ineq(lo, Rational(0));
  }
  for (int v = 0; v < n; ++v) {
    QVector row(dim);
    for (std::size_t i : g.in_edges(v)) row[i] = 1;
    for (std::size_t i : g.out_edges(v)) row[i] = -1;
    row[ne + static_cast<std::size_t>(v)] = -2;
    q.add_eq(row, Rational(1));  // x(in) - x(out) = 2 z_v + 1
  }
  std::vector<std::size_t> zcols(n), xcols(ne);
  std::iota(zcols.begin(), zcols.end(), ne);
  std::iota(xcols.begin(), xcols.end(), 0);
  FormulationBundle b{Milef(std::move(q), AffineMap::coordinate_projection(dim, zcols),
                            AffineMap::coordinate_projection(dim, xcols)),
                      "vjoin",
                      "vjoin:n" + std::to_string(n),
                      n,
                      false,
                      std::nullopt};
  return b;
}

namespace {

// The four per-edge inequalities relating cut indicators x to side labels y,
// plus unit boxes on both blocks. Columns: x (ne), then y (n).
HPolyhedron cut_system(const CompleteGraph& g, std::size_t dim) {
  std::size_t ne = g.edges.size();
  HPolyhedron q(dim);
  for (std::size_t i = 0; i < ne; ++i) {
    int v = g.edges[i].first, w = g.edges[i].second;
    std::size_t yv = ne + static_cast<std::size_t>(v), yw = ne + static_cast<std::size_t>(w);
    QVector r1(dim), r2(dim), r3(dim), r4(dim);
    r1[yv] = 1; r1[yw] = -1; r1[i] = -1;
    q.add_ineq(r1, Rational(0));  // y_v - y_w <= x_e
    r2[yw] = 1; r2[yv] = -1; r2[i] = -1;
    q.add_ineq(r2, Rational(0));  // y_w - y_v <= x_e
    r3[i] = 1; r3[yv] = -1; r3[yw] = -1;
    q.add_ineq(r3, Rational(0));  // x_e <= y_v + y_w
    r4[i] = 1; r4[yv] = 1; r4[yw] = 1;
    q.add_ineq(r4, Rational(2));  // x_e <= 2 - y_v - y_w
  }
  for (std::size_t i = 0; i < ne; ++i) {
    QVector up(dim), lo(dim);
    up[i] = 1;
    q.add_ineq(up, Rational(1));
    lo[i] = -1;
    q.add_ineq(lo, Rational(0));
  }
  for (int v = 0; v < g.n; ++v) {
    std::size_t yv = ne + static_cast<std::size_t>(v);
    QVector up(dim), lo(dim);
    up[yv] = 1;
    q.add_ineq(up, Rational(1));
    lo[yv] = -1;
    q.add_ineq(lo, Rational(0));
  }
  return q;
}

}  // namespace

FormulationBundle cut_milef(int n) {
  if (n < 2) throw PreconditionError("cut_milef needs n >= 2");
  CompleteGraph g = CompleteGraph::complete(n);
  std::size_t ne = g.edges.size();
  std::size_t dim = ne + static_cast<std::size_t>(n);
  HPolyhedron q = cut_system(g, dim);
  std::vector<std::size_t> ycols(n), xcols(ne);
  std::iota(ycols.begin(), ycols.end(), ne);
  std::iota(xcols.begin(), xcols.end(), 0);
  FormulationBundle b{Milef(std::move(q), AffineMap::coordinate_projection(dim, ycols),
                            AffineMap::coordinate_projection(dim, xcols)),
                      "cut",
                      "cut:n" + std::to_string(n),
                      n,
                      false,
                      std::nullopt};
  return b;
}

FormulationBundle odd_cut_milef(int n) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("odd_cut_milef needs even n >= 2");
  CompleteGraph g = CompleteGraph::complete(n);
  std::size_t ne = g.edges.size();
  std::size_t dim = ne + static_cast<std::size_t>(n) + 1;  // (x, y, z)
  HPolyhedron q = cut_system(g, dim);
  {
    // Parity of |S| through the side labels: sum_v y_v = 2 z + 1.
    QVector row(dim);
    for (int v = 0; v < n; ++v) row[ne + static_cast<std::size_t>(v)] = 1;
    row[dim - 1] = -2;
    q.add_eq(row, Rational(1));
  }
  std::vector<std::size_t> sig(n + 1), xcols(ne);
  std::iota(sig.begin(), sig.end(), ne);  // y block and z
  std::iota(xcols.begin(), xcols.end(), 0);
  FormulationBundle b{Milef(std::move(q), AffineMap::coordinate_projection(dim, sig),
                            AffineMap::coordinate_projection(dim, xcols)),
                      "oddcut",
                      "oddcut:n" + std::to_string(n),
                      n,
                      false,
                      std::nullopt};
  return b;
}

FormulationBundle odd_cut_dominant_bimodular(int n) {
  if (n < 2 || n % 2 != 0)
    throw PreconditionError("odd_cut_dominant_bimodular needs even n >= 2");
  CompleteGraph g = CompleteGraph::complete(n);
  std::size_t ne = g.edges.size();
  std::size_t na = static_cast<std::size_t>(n) * (n - 1);  // complete digraph arcs
  auto arc_index = [&](int v, int w) {
    // Arcs ordered lexicographically over ordered pairs (v, w), v != w.
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a)
      for (int b2 = 0; b2 < n; ++b2) {
        if (a == b2) continue;
        if (a == v && b2 == w) return idx;
        ++idx;
      }
    throw ContractError("arc not found");
  };
  std::size_t dim = ne + na + static_cast<std::size_t>(n) + 1;  // (x, xbar, y, z)
  std::size_t ybase = ne + na;
  HPolyhedron q(dim);
  for (std::size_t a = 0; a < na; ++a) {
    QVector row(dim);
    row[ne + a] = -1;
    q.add_ineq(row, Rational(0));  // xbar >= 0
  }
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (v == w) continue;
      QVector row(dim);
      row[ybase + static_cast<std::size_t>(w)] = 1;
      row[ybase + static_cast<std::size_t>(v)] = -1;
      row[ne + arc_index(v, w)] = -1;
      q.add_ineq(row, Rational(0));  // y_w - y_v <= xbar_(v,w)
    }
  for (std::size_t i = 0; i < ne; ++i) {
    int v = g.edges[i].first, w = g.edges[i].second;
    QVector row(dim);
    row[i] = 1;
    row[ne + arc_index(v, w)] = -1;
    row[ne + arc_index(w, v)] = -1;
    q.add_eq(row, Rational(0));  // x_e = xbar_(v,w) + xbar_(w,v)
  }
  {
    QVector row(dim);
    for (int v = 0; v < n; ++v) row[ybase + static_cast<std::size_t>(v)] = 1;
    row[dim - 1] = -2;
    q.add_eq(row, Rational(1));  // sum y = 2z + 1
  }
  std::vector<std::size_t> sig(n + 1), xcols(ne);
  std::iota(sig.begin(), sig.end(), ybase);
  std::iota(xcols.begin(), xcols.end(), 0);
  FormulationBundle b{Milef(std::move(q), AffineMap::coordinate_projection(dim, sig),
                            AffineMap::coordinate_projection(dim, xcols)),
                      "oddcut-dominant",
                      "oddcut-dominant:n" + std::to_string(n),
                      n,
                      true,
                      std::nullopt};
  return b;
}

FormulationBundle tsp_milef(int n, const Caps& caps) {
  if (n < 4) throw PreconditionError("tsp_milef needs n >= 4");
  check_oracle_cap(n, caps);
  CompleteGraph g = CompleteGraph::complete(n);
  std::size_t ne = g.edges.size();
  int bits = 0;
  while ((1 << bits) < n) ++bits;

  // Codes: the lexicographically first n binary strings of length `bits`;
  // code i labels vertex i. Reference tour: the identity cycle.
  auto code_bit = [&](int vertex, int t) { return (vertex >> (bits - 1 - t)) & 1; };
  auto on_tour = [&](int v, int w) {
    if (v > w) std::swap(v, w);
    return (w == v + 1) || (v == 0 && w == n - 1);
  };

  // Auxiliary polytope vertices (code(v), code(w), z) over ordered pairs.
  struct AuxVertex {
    int v, w, z;
  };
  std::vector<AuxVertex> aux;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (v != w) aux.push_back({v, w, on_tour(v, w) ? 1 : 0});
  std::size_t K = aux.size();  // n (n-1)

  std::size_t ybase = ne;
  std::size_t lbase = ne + static_cast<std::size_t>(n) * bits;
  std::size_t dim = lbase + ne * K;  // (x, y, lambda)
  auto ycol = [&](int v, int t) {
    return ybase + static_cast<std::size_t>(v) * bits + static_cast<std::size_t>(t);
  };
  auto lcol = [&](std::size_t e, std::size_t j) { return lbase + e * K + j; };

  HPolyhedron q(dim);
  for (std::size_t i = 0; i < ne; ++i) {
    QVector up(dim), lo(dim);
    up[i] = 1;
    q.add_ineq(up, Rational(1));
    lo[i] = -1;
    q.add_ineq(lo, Rational(0));
  }
  for (int v = 0; v < n; ++v)
    for (int t = 0; t < bits; ++t) {
      QVector up(dim), lo(dim);
      up[ycol(v, t)] = 1;
      q.add_ineq(up, Rational(1));
      lo[ycol(v, t)] = -1;
      q.add_ineq(lo, Rational(0));
    }
  for (std::size_t e = 0; e < ne; ++e)
    for (std::size_t j = 0; j < K; ++j) {
      QVector row(dim);
      row[lcol(e, j)] = -1;
      q.add_ineq(row, Rational(0));  // lambda >= 0
    }
  for (std::size_t e = 0; e < ne; ++e) {
    int v = g.edges[e].first, w = g.edges[e].second;
    // (y_v, y_w, x_e) must be the lambda-combination of auxiliary vertices.
    for (int t = 0; t < bits; ++t) {
      QVector row(dim);
      for (std::size_t j = 0; j < K; ++j)
        if (code_bit(aux[j].v, t)) row[lcol(e, j)] = 1;
      row[ycol(v, t)] = -1;
      q.add_eq(row, Rational(0));
    }
    for (int t = 0; t < bits; ++t) {
      QVector row(dim);
      for (std::size_t j = 0; j < K; ++j)
        if (code_bit(aux[j].w, t)) row[lcol(e, j)] = 1;
      row[ycol(w, t)] = -1;
      q.add_eq(row, Rational(0));
    }
    {
      QVector row(dim);
      for (std::size_t j = 0; j < K; ++j)
        if (aux[j].z) row[lcol(e, j)] = 1;
      row[e] = -1;
      q.add_eq(row, Rational(0));
    }
    {
      QVector row(dim);
      for (std::size_t j = 0; j < K; ++j) row[lcol(e, j)] = 1;
      q.add_eq(row, Rational(1));
    }
  }
  std::vector<std::size_t> sig(static_cast<std::size_t>(n) * bits), xcols(ne);
  std::iota(sig.begin(), sig.end(), ybase);
  std::iota(xcols.begin(), xcols.end(), 0);
  FormulationBundle b{Milef(std::move(q), AffineMap::coordinate_projection(dim, sig),
                            AffineMap::coordinate_projection(dim, xcols)),
                      "tsp",
                      "tsp:n" + std::to_string(n),
                      n,
                      false,
                      std::nullopt};
  return b;
}

FormulationBundle make_bundle(const std::string& family, int n, const Caps& caps) {
  FormulationBundle b = [&] {
    if (family == "matching") return matching_milef(CompleteGraph::complete(n));
    if (family == "vjoin") return vjoin_milef(n);
    if (family == "cut") return cut_milef(n);
    if (family == "oddcut") return odd_cut_milef(n);
    if (family == "oddcut-dominant") return odd_cut_dominant_bimodular(n);
    if (family == "tsp") return tsp_milef(n, caps);
    throw ContractError("unknown formulation family \"" + family + "\"");
  }();
  // Attach the combinatorial oracle so serialized bundles are self-contained.
  if (family == "matching")
    b.expected_vertices = oracle_vertices(OracleKind::matching, n, caps);
  else if (family == "vjoin")
    b.expected_vertices = oracle_vertices(OracleKind::vjoin, n, caps);
  else if (family == "cut")
    b.expected_vertices = oracle_vertices(OracleKind::cut, n, caps);
  else if (family == "oddcut" || family == "oddcut-dominant")
    b.expected_vertices = oracle_vertices(OracleKind::odd_cut, n, caps);
  else if (family == "tsp")
    b.expected_vertices = oracle_vertices(OracleKind::tour, n, caps);
  return b;
}

BimodularityReport bimodularity_check(const QMatrix& m, const Caps& caps) {
  if (!m.is_integral()) throw ContractError("bimodularity_check requires an integer matrix");
  std::size_t rows = m.rows(), cols = m.cols();
  if (m.rank() != cols)
    throw PreconditionError("bimodularity_check requires full column rank");

  // Number of selections C(rows, cols) against the cap.
  Integer count(1);
  for (std::size_t i = 0; i < cols; ++i) {
    count *= Integer(static_cast<long>(rows - i));
    count /= Integer(static_cast<long>(i + 1));
  }
  if (count > caps.max_det_subsets)
    throw ResourceError("bimodularity_check: " + count.get_str() +
                        " row selections exceed the cap");

  std::vector<std::vector<Integer>> work(cols, std::vector<Integer>(cols));
  auto det_of = [&](const std::vector<std::size_t>& pick) {
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) work[i][j] = m(pick[i], j).get_num();
    // Bareiss fraction-free elimination.
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < cols; ++k) {
      std::size_t pivot = k;
      while (pivot < cols && work[pivot][k] == 0) ++pivot;
      if (pivot == cols) return Integer(0);
      if (pivot != k) {
        std::swap(work[pivot], work[k]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < cols; ++i) {
        for (std::size_t j = k + 1; j < cols; ++j) {
          work[i][j] = work[i][j] * work[k][k] - work[i][k] * work[k][j];
          mpz_divexact(work[i][j].get_mpz_t(), work[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        work[i][k] = 0;
      }
      prev = work[k][k];
    }
    return sign > 0 ? work[cols - 1][cols - 1] : -work[cols - 1][cols - 1];
  };

  BimodularityReport report;
  report.max_abs_subdet = 0;
  std::vector<std::size_t> pick(cols);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    Integer d = det_of(pick);
    if (d < 0) d = -d;
    if (d > report.max_abs_subdet) {
      report.max_abs_subdet = d;
      report.witness_rows = pick;
    }
    // next combination
    std::size_t i = cols;
    while (i > 0) {
      --i;
      if (pick[i] != i + rows - cols) {
        ++pick[i];
        for (std::size_t j = i + 1; j < cols; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) {
        report.is_bimodular = report.max_abs_subdet <= 2;
        return report;
      }
    }
  }
}

QMatrix odd_cut_conic_matrix(int n) {
  if (n < 2) throw ContractError("odd_cut_conic_matrix needs n >= 2");
  std::size_t na = static_cast<std::size_t>(n) * (n - 1);
  std::size_t cols = na + static_cast<std::size_t>(n) + 1;  // (xbar, y, z)
  QMatrix m(2 * na + 1, cols);
  std::size_t arc = 0;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (v == w) continue;
      m(arc, arc) = -1;  // -xbar <= 0
      m(na + arc, arc) = -1;
      m(na + arc, na + static_cast<std::size_t>(w)) = 1;
      m(na + arc, na + static_cast<std::size_t>(v)) = -1;  // y_w - y_v - xbar <= 0
      ++arc;
    }
  for (int v = 0; v < n; ++v) m(2 * na, na + static_cast<std::size_t>(v)) = 1;
  m(2 * na, cols - 1) = -2;  // sum y - 2z = 1
  return m;
}

namespace {

VerifyReport verify_exact(const FormulationBundle& b, const VPolytope& oracle, const Caps& caps) {
  VerifyReport report;
  VPolytope image = projected_mixed_integer_hull(b.milef, caps);
  report.produced_count = image.vertices.size();
  report.expected_count = oracle.vertices.size();
  std::vector<QVector> produced = image.vertices;
  std::vector<QVector> expected = oracle.vertices;
  std::sort(produced.begin(), produced.end(), lex_less);
  std::sort(expected.begin(), expected.end(), lex_less);
  std::set_difference(expected.begin(), expected.end(), produced.begin(), produced.end(),
                      std::back_inserter(report.missing), lex_less);
  std::set_difference(produced.begin(), produced.end(), expected.begin(), expected.end(),
                      std::back_inserter(report.extra), lex_less);
  report.pass = report.missing.empty() && report.extra.empty();
  return report;
}

// Dominant bundles: bounded-window evidence for the two inclusion
// directions. The x block is confined to the unit box and the y labels to
// the window {-1,...,2}; every oracle vector must be reproduced, and every
// projected point must dominate an odd cut inside the box.
VerifyReport verify_dominant(const FormulationBundle& b, const VPolytope& oracle,
                             const Caps& caps) {
  VerifyReport report;
  const Milef& m = b.milef;
  std::size_t ne = m.d();
  HPolyhedron q = m.q();
  for (std::size_t i = 0; i < ne; ++i) {
    // pi is the x-coordinate projection; bound that block.
    QVector up(m.ell()), lo(m.ell());
    up = m.pi().matrix.row(i);
    q.add_ineq(up, Rational(1));
    for (std::size_t j = 0; j < m.ell(); ++j) lo[j] = -up[j];
    q.add_ineq(lo, Rational(0));
  }
  for (std::size_t i = 0; i + 1 < m.k(); ++i) {
    // sigma rows except the last (z) are the y labels; window them.
    QVector row = m.sigma().matrix.row(i);
    q.add_ineq(row, Rational(2));
    QVector neg(m.ell());
    for (std::size_t j = 0; j < m.ell(); ++j) neg[j] = -row[j];
    q.add_ineq(neg, Rational(1));  // y >= -1
  }
  Milef windowed(std::move(q), m.sigma(), m.pi(), m.declared_m());
  VPolytope image = projected_mixed_integer_hull(windowed, caps);
  report.produced_count = image.vertices.size();
  report.expected_count = oracle.vertices.size();

  for (const auto& v : oracle.vertices)
    if (!point_in_vhull(v, image)) report.missing.push_back(v);

  // 0/1 dominators of odd cuts within the unit box.
  VPolytope dominators(ne);
  for (unsigned long mask = 0; mask < (1ul << ne); ++mask) {
    QVector x = subset_vector(ne, mask);
    bool dominates = false;
    for (const auto& cut : oracle.vertices) {
      bool ge = true;
      for (std::size_t j = 0; j < ne && ge; ++j) ge = x[j] >= cut[j];
      if (ge) {
        dominates = true;
        break;
      }
    }
    if (dominates) dominators.vertices.push_back(x);
  }
  for (const auto& p : image.vertices)
    if (!point_in_vhull(p, dominators)) report.extra.push_back(p);

  report.pass = report.missing.empty() && report.extra.empty();
  return report;
}

}  // namespace

VerifyReport verify_bundle(const FormulationBundle& b, const Caps& caps) {
  VPolytope oracle = [&] {
    if (b.expected_vertices) return *b.expected_vertices;
    if (b.family == "matching") return oracle_vertices(OracleKind::matching, b.n, caps);
    if (b.family == "vjoin") return oracle_vertices(OracleKind::vjoin, b.n, caps);
    if (b.family == "cut") return oracle_vertices(OracleKind::cut, b.n, caps);
    if (b.family == "oddcut" || b.family == "oddcut-dominant")
      return oracle_vertices(OracleKind::odd_cut, b.n, caps);
    if (b.family == "tsp") return oracle_vertices(OracleKind::tour, b.n, caps);
    throw ContractError("verify_bundle: unknown family \"" + b.family + "\"");
  }();
  return b.dominant ? verify_dominant(b, oracle, caps) : verify_exact(b, oracle, caps);
}

}  // namespace milef
