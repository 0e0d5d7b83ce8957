#pragma once

#include <json.hpp>

#include "funcrowd/f1_structure.hpp"
#include "funcrowd/flag_complex.hpp"
#include "funcrowd/geometry.hpp"

namespace funcrowd {

using Json = nlohmann::ordered_json;

Json geometry_to_json(const IncidenceGeometry& g);
Json certificate_to_json(const PolygonCertificate& c);
Json complex_to_json(const SimplicialComplex& c);
Json plane_report_to_json(const PlaneReport& r);
Json p3_report_to_json(const P3Report& r, bool with_structures = false);

/// Fixed-format serialization used for byte-identity checks.
std::string dump_canonical(const Json& j);

}  // namespace funcrowd
