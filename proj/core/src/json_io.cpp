#include "milef/json_io.hpp"

#include <fstream>

#include "milef/errors.hpp"

namespace milef {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const ExtRational& value) { return to_string(value); }

Json to_json(const QVector& value) {
  Json out = Json::array();
  for (std::size_t i = 0; i < value.dim(); ++i) out.push_back(to_json(value[i]));
  return out;
}

Json to_json(const QMatrix& value) {
  Json out = Json::array();
  for (std::size_t i = 0; i < value.rows(); ++i) out.push_back(to_json(value.row(i)));
  return out;
}

Json to_json(const HPolyhedron& value) {
  return Json{{"ambient_dim", value.ambient_dim()},
              {"ineq_lhs", to_json(value.ineq_lhs())},
              {"ineq_rhs", to_json(value.ineq_rhs())},
              {"eq_lhs", to_json(value.eq_lhs())},
              {"eq_rhs", to_json(value.eq_rhs())}};
}

Json to_json(const VPolytope& value) {
  Json verts = Json::array(), rays = Json::array();
  for (const auto& v : value.vertices) verts.push_back(to_json(v));
  for (const auto& r : value.rays) rays.push_back(to_json(r));
  return Json{{"ambient_dim", value.ambient_dim}, {"vertices", verts}, {"rays", rays}};
}

Json to_json(const AffineMap& value) {
  return Json{{"matrix", to_json(value.matrix)}, {"offset", to_json(value.offset)}};
}

Json to_json(const Milef& value) {
  return Json{{"Q", to_json(value.q())},
              {"sigma", to_json(value.sigma())},
              {"pi", to_json(value.pi())},
              {"complexity", Json{{"m", value.declared_m()}, {"k", value.k()}}}};
}

Json to_json(const SubspaceFamily& value) {
  Json subs = Json::array();
  for (const auto& h : value.subspaces) subs.push_back(to_json(h));
  return Json{{"ambient_dim", value.ambient_dim}, {"subspaces", subs}};
}

Json to_json(const SliceCertificate& value) {
  return Json{{"delta", to_json(value.delta)},
              {"family", to_json(value.family)},
              {"family_size", value.family.size()},
              {"fiber_cover_checked", value.fiber_cover_checked},
              {"rdist_achieved", to_json(value.rdist_achieved)},
              {"theoretical_size_bound", to_json(value.theoretical_size_bound)},
              {"sigma_lattice_empty", value.sigma_lattice_empty},
              {"count_bound_certified", value.count_bound_certified}};
}

Json to_json(const LefReport& value) {
  return Json{{"rdist_achieved", to_json(value.rdist_achieved)},
              {"inequality_count", value.inequality_count},
              {"sum_facets_plus_one", value.sum_facets_plus_one},
              {"slice_count", value.slice_count},
              {"theoretical_size_bound", to_json(value.theoretical_size_bound)}};
}

Json to_json(const WidthCertificate& value) {
  return Json{{"direction", to_json(value.direction)},
              {"width", to_json(value.width)},
              {"max_point", to_json(value.max_point)},
              {"min_point", to_json(value.min_point)},
              {"exact", value.exact}};
}

Json to_json(const GapResult& value) {
  return Json{{"value", to_json(value.value)},
              {"witness_direction", to_json(value.witness_direction)},
              {"witness_point_a", to_json(value.witness_point_a)},
              {"witness_point_b", to_json(value.witness_point_b)}};
}

Json to_json(const FormulationBundle& value) {
  Json out{{"family", value.family},
           {"n", value.n},
           {"target_name", value.target_name},
           {"dominant", value.dominant},
           {"milef", to_json(value.milef)}};
  if (value.expected_vertices) out["expected_vertices"] = to_json(*value.expected_vertices);
  return out;
}

Json to_json(const VerifyReport& value) {
  Json missing = Json::array(), extra = Json::array();
  for (const auto& v : value.missing) missing.push_back(to_json(v));
  for (const auto& v : value.extra) extra.push_back(to_json(v));
  return Json{{"pass", value.pass},
              {"produced_count", value.produced_count},
              {"expected_count", value.expected_count},
              {"missing", missing},
              {"extra", extra}};
}

Json to_json(const BimodularityReport& value) {
  Json rows = Json::array();
  for (auto r : value.witness_rows) rows.push_back(r);
  return Json{{"max_abs_subdet", value.max_abs_subdet.get_str()},
              {"is_bimodular", value.is_bimodular},
              {"witness_rows", rows}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

ExtRational ext_rational_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtRational::infinity();
  return ExtRational(rational_from_json(j));
}

QVector qvector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array of rationals");
  QVector out(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out[i] = rational_from_json(j[i]);
  return out;
}

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  QMatrix out(0, 0);
  for (const auto& row : j) out.append_row(qvector_from_json(row));
  return out;
}

HPolyhedron hpolyhedron_from_json(const Json& j) {
  std::size_t dim = field(j, "ambient_dim").get<std::size_t>();
  QMatrix ineq = qmatrix_from_json(field(j, "ineq_lhs"));
  QVector ineq_rhs = qvector_from_json(field(j, "ineq_rhs"));
  QMatrix eq = qmatrix_from_json(field(j, "eq_lhs"));
  QVector eq_rhs = qvector_from_json(field(j, "eq_rhs"));
  if (ineq.rows() > 0 && ineq.cols() != dim)
    throw ParseError("ineq_lhs column count does not match ambient_dim");
  if (eq.rows() > 0 && eq.cols() != dim)
    throw ParseError("eq_lhs column count does not match ambient_dim");
  if (ineq.rows() == 0) ineq = QMatrix(0, dim);
  if (eq.rows() == 0) eq = QMatrix(0, dim);
  return HPolyhedron(dim, std::move(ineq), std::move(ineq_rhs), std::move(eq),
                     std::move(eq_rhs));
}

VPolytope vpolytope_from_json(const Json& j) {
  VPolytope out(field(j, "ambient_dim").get<std::size_t>());
  for (const auto& v : field(j, "vertices")) out.vertices.push_back(qvector_from_json(v));
  for (const auto& r : field(j, "rays")) out.rays.push_back(qvector_from_json(r));
  for (const auto& v : out.vertices)
    if (v.dim() != out.ambient_dim) throw ParseError("vertex dimension mismatch");
  for (const auto& r : out.rays)
    if (r.dim() != out.ambient_dim) throw ParseError("ray dimension mismatch");
  return out;
}

AffineMap affine_map_from_json(const Json& j) {
  return AffineMap(qmatrix_from_json(field(j, "matrix")), qvector_from_json(field(j, "offset")));
}

Milef milef_from_json(const Json& j) {
  HPolyhedron q = hpolyhedron_from_json(field(j, "Q"));
  AffineMap sigma = affine_map_from_json(field(j, "sigma"));
  AffineMap pi = affine_map_from_json(field(j, "pi"));
  std::optional<std::size_t> m;
  if (j.contains("complexity")) m = field(j["complexity"], "m").get<std::size_t>();
  return Milef(std::move(q), std::move(sigma), std::move(pi), m);
}

FormulationBundle bundle_from_json(const Json& j) {
  FormulationBundle out{milef_from_json(field(j, "milef")),
                        field(j, "family").get<std::string>(),
                        field(j, "target_name").get<std::string>(),
                        field(j, "n").get<int>(),
                        field(j, "dominant").get<bool>(),
                        std::nullopt};
  if (j.contains("expected_vertices"))
    out.expected_vertices = vpolytope_from_json(j["expected_vertices"]);
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in \"" + path + "\": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << j.dump(2) << "\n";
}

}  // namespace milef
