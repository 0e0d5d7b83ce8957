#include "funcrowd/json_io.hpp"

#include "funcrowd/points.hpp"

namespace funcrowd {

Json geometry_to_json(const IncidenceGeometry& g) {
  Json j;
  j["points"] = g.num_points;
  j["lines"] = g.num_lines;
  Json flags = Json::array();
  auto sorted = g.flags;
  std::sort(sorted.begin(), sorted.end());
  for (auto [p, l] : sorted) flags.push_back(Json::array({p, l}));
  j["flags"] = std::move(flags);
  return j;
}

Json certificate_to_json(const PolygonCertificate& c) {
  Json j;
  j["ok"] = c.ok;
  j["gonality"] = c.gonality;
  j["girth"] = c.girth;
  j["diameter"] = c.diameter;
  j["thick"] = c.thick;
  if (c.has_order) j["order"] = Json::array({c.s, c.t});
  j["warnings"] = c.warnings;
  return j;
}

Json complex_to_json(const SimplicialComplex& c) {
  Json j;
  j["band"] = c.b->name();
  j["n"] = c.n;
  Json types = Json::object();
  int max_dim = 0;
  for (const auto& [type, pts] : c.simplices) {
    std::string key;
    for (int r : type) key += (key.empty() ? "" : ",") + std::to_string(r);
    types[key] = pts.size();
    max_dim = std::max(max_dim, (int)type.size() - 1);
  }
  j["by_type"] = std::move(types);
  Json dims = Json::array();
  for (int d = 0; d <= max_dim; ++d) dims.push_back(c.count(d));
  j["by_dim"] = std::move(dims);
  return j;
}

Json plane_report_to_json(const PlaneReport& r) {
  Json j;
  j["q"] = r.q;
  j["valid"] = r.valid;
  j["class_a"] = r.class_a;
  j["class_b"] = r.class_b;
  j["both"] = r.both;
  j["unmatched"] = r.unmatched;
  return j;
}

Json p3_report_to_json(const P3Report& r, bool with_structures) {
  Json j;
  j["q"] = r.q;
  j["valid"] = r.valid;
  j["case_E"] = r.case_E;
  j["case_F"] = r.case_F;
  j["both"] = r.both;
  j["unmatched"] = r.unmatched;
  if (with_structures) j["structures"] = r.structures;
  j["unmatched_structures"] = r.unmatched_structures;
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace funcrowd
