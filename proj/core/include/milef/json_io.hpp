#pragma once

#include <string>

#include <json.hpp>

#include "milef/lattice.hpp"
#include "milef/metrics.hpp"
#include "milef/polyhedra.hpp"
#include "milef/slicing.hpp"
#include "milef/zoo.hpp"

namespace milef {

// Rationals are encoded as strings "p/q" (or "p" for integers); matrices as
// row-major arrays of arrays. Serialization is deterministic: object keys
// keep insertion order and all sets are emitted canonically sorted.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const ExtRational& value);
Json to_json(const QVector& value);
Json to_json(const QMatrix& value);
Json to_json(const HPolyhedron& value);
Json to_json(const VPolytope& value);
Json to_json(const AffineMap& value);
Json to_json(const Milef& value);
Json to_json(const SubspaceFamily& value);
Json to_json(const SliceCertificate& value);
Json to_json(const LefReport& value);
Json to_json(const WidthCertificate& value);
Json to_json(const GapResult& value);
Json to_json(const FormulationBundle& value);
Json to_json(const VerifyReport& value);
Json to_json(const BimodularityReport& value);

Rational rational_from_json(const Json& j);
ExtRational ext_rational_from_json(const Json& j);
QVector qvector_from_json(const Json& j);
QMatrix qmatrix_from_json(const Json& j);
HPolyhedron hpolyhedron_from_json(const Json& j);
VPolytope vpolytope_from_json(const Json& j);
AffineMap affine_map_from_json(const Json& j);
Milef milef_from_json(const Json& j);
FormulationBundle bundle_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace milef
