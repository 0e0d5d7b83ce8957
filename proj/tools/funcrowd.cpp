#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "funcrowd/acceptance.hpp"
#include "funcrowd/activity.hpp"
#include "funcrowd/crowd.hpp"
#include "funcrowd/f1_structure.hpp"
#include "funcrowd/flag_complex.hpp"
#include "funcrowd/geometry.hpp"
#include "funcrowd/json_io.hpp"
#include "funcrowd/matroid.hpp"
#include "funcrowd/points.hpp"

using namespace funcrowd;

namespace {

int default_jobs() {
  if (const char* env = std::getenv("FUNCROWD_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

const Band& band_by_name(const std::string& name, int q) {
  if (name == "fpm" || name == "f+-1") return band(BandKind::Fpm);
  if (name == "krasner" || name == "k") return band(BandKind::Krasner);
  if (name == "fq") return band(BandKind::Fq, q);
  if (name == "tropical" || name == "t") return band(BandKind::Tropical);
  if (name == "ot" || name == "o_t") return band(BandKind::TropicalIntegers);
  throw CLI::ValidationError("--band", "unknown band '" + name + "'");
}

// "111" (single-character entries) or "1,0,-1"
std::vector<Elt> parse_vector(const Band& B, const std::string& s) {
  std::vector<Elt> out;
  if (s.find(',') == std::string::npos) {
    for (char ch : s) out.push_back(B.parse(std::string(1, ch)));
    return out;
  }
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(B.parse(tok));
  return out;
}

// "ones" | "id" | rows separated by ';', entries by ',' (or compact digits)
BandMatrix parse_matrix(const Band& B, int n, const std::string& s) {
  if (s == "id" || s == "identity") return BandMatrix::identity(B, n);
  BandMatrix m{&B, n, std::vector<Elt>(n * n, B.zero())};
  if (s == "ones") {
    for (auto& e : m.entries) e = B.one();
    return m;
  }
  std::stringstream ss(s);
  std::string row;
  std::vector<Elt> entries;
  while (std::getline(ss, row, ';')) {
    auto r = parse_vector(B, row);
    entries.insert(entries.end(), r.begin(), r.end());
  }
  if ((int)entries.size() != n * n)
    throw CLI::ValidationError("--a", "expected " + std::to_string(n * n) + " entries");
  m.entries = std::move(entries);
  return m;
}

struct Output {
  std::string out_path;
  std::string format = "json";

  void emit(const Json& j, const std::string& text) const {
    std::string payload = format == "text" ? text : dump_canonical(j);
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      f << payload;
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"funcrowd: bands, crowds, flag complexes, polygons and F1-structure classification"};
  app.require_subcommand(1);
  app.fallthrough();  // let --out/--jobs/--format appear after the subcommand
  Output out;
  int jobs = default_jobs();
  app.add_option("--out", out.out_path, "write the report to a file instead of stdout");
  app.add_option("--format", out.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "worker count (default: FUNCROWD_JOBS or 1)");

  std::string band_name = "krasner";
  int q = 2, n = 3, r = 1;

  // band
  auto* cband = app.add_subcommand("band", "describe a band");
  cband->add_option("--kind", band_name, "fpm|krasner|fq|tropical|ot");
  cband->add_option("--q", q, "field size for fq");

  // points
  auto* cpoints = app.add_subcommand("points", "enumerate point functor values");
  std::string functor = "proj";
  cpoints->add_option("--functor", functor, "proj|gr|fl");
  cpoints->add_option("--band", band_name);
  cpoints->add_option("--q", q);
  cpoints->add_option("--n", n);
  cpoints->add_option("--r", r);
  std::string rvec_s = "1,2";
  cpoints->add_option("--rvec", rvec_s, "flag type for fl, e.g. 1,2");

  // matroid
  auto* cmatroid = app.add_subcommand("matroid", "basis-exchange check");
  std::string bases_s;
  int mat_n = 3;
  cmatroid->add_option("--bases", bases_s, "comma list of basis words, e.g. 12,13")->required();
  cmatroid->add_option("--n", mat_n);

  // crowd
  auto* ccrowd = app.add_subcommand("crowd", "SL_n crowds");
  std::string crowd_what = "sl";
  ccrowd->add_option("what", crowd_what, "sl|monomial")->check(CLI::IsMember({"sl", "monomial"}));
  ccrowd->add_option("--band", band_name);
  ccrowd->add_option("--q", q);
  ccrowd->add_option("--n", n);
  bool count_only = false, axioms = false, group = false;
  ccrowd->add_flag("--count", count_only, "emit the element count only");
  ccrowd->add_flag("--axioms", axioms, "include the C1-C3 axiom report");
  ccrowd->add_flag("--group", group, "attempt group_from_crowd");

  // orbit
  auto* corbit = app.add_subcommand("orbit", "orbit of a point under a matrix");
  std::string a_s = "id", x_s = "111";
  corbit->add_option("--band", band_name);
  corbit->add_option("--q", q);
  corbit->add_option("--n", n);
  corbit->add_option("--a", a_s, "matrix: id|ones|rows like 110;010;001");
  corbit->add_option("--x", x_s, "point coordinates");
  corbit->add_option("--functor", functor, "proj|gr");
  corbit->add_option("--r", r);

  // complex
  auto* ccomplex = app.add_subcommand("complex", "flag complexes");
  std::string complex_type = "delta";
  ccomplex->add_option("--type", complex_type, "delta|gamma")
      ->check(CLI::IsMember({"delta", "gamma"}));
  ccomplex->add_option("--band", band_name);
  ccomplex->add_option("--q", q);
  ccomplex->add_option("--n", n);

  // polygon
  auto* cpolygon = app.add_subcommand("polygon", "construct and certify a geometry");
  std::string shape = "ngon";
  bool do_double = false;
  int ngon = 3, km = 4, pd = 2;
  cpolygon->add_option("--shape", shape, "ngon|complete|pg|t2|q4")
      ->check(CLI::IsMember({"ngon", "complete", "pg", "t2", "q4"}));
  cpolygon->add_option("--n", ngon, "gonality for ngon");
  cpolygon->add_option("--m", km, "vertex count for complete");
  cpolygon->add_option("--q", q);
  cpolygon->add_option("--d", pd, "dimension for pg");
  cpolygon->add_flag("--double", do_double, "apply the doubling construction");

  // classify
  auto* cclassify = app.add_subcommand("classify", "F1-structure classification");
  std::string target = "plane";
  cclassify->add_option("what", target, "plane|p3")->check(CLI::IsMember({"plane", "p3"}));
  cclassify->add_option("--q", q);
  bool with_structures = false;
  cclassify->add_flag("--structures", with_structures, "include the class vectors");

  // verify-all
  auto* cverify = app.add_subcommand("verify-all", "run the acceptance suite");
  std::string filter;
  cverify->add_option("--filter", filter, "run only criteria whose name contains this string");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cband) {
      const Band& B = band_by_name(band_name, q);
      Json j;
      j["kind"] = B.name();
      if (B.kind() == BandKind::Fq) j["q"] = B.q();
      j["finite"] = B.finite();
      std::string text = B.name();
      if (B.finite()) {
        Json u = Json::array();
        for (const auto& e : B.universe()) u.push_back(B.format(e));
        j["universe"] = u;
        Json units = Json::array();
        for (const auto& e : B.units()) units.push_back(B.format(e));
        j["units"] = units;
        text += " universe " + j["universe"].dump();
      }
      text += "\n";
      out.emit(j, text);
      return 0;
    }
    if (*cpoints) {
      const Band& B = band_by_name(band_name, q);
      Functor f = Functor::proj(n);
      if (functor == "gr") f = Functor::gr(r, n);
      if (functor == "fl") {
        std::vector<int> rv;
        for (auto& e : parse_vector(band(BandKind::Krasner), rvec_s)) rv.push_back((int)e.v.numerator());
        f = Functor::fl(rv, n);
      }
      Json j;
      j["functor"] = f.to_string();
      j["band"] = B.name();
      Json arr = Json::array();
      if (f.kind == Functor::Fl) {
        auto flags = enumerate_flags(f.rvec, n, B);
        for (const auto& fl : flags) {
          Json stages = Json::array();
          for (const auto& st : fl.stages) stages.push_back(point_to_string(st));
          arr.push_back(stages);
        }
        j["count"] = flags.size();
      } else {
        auto pts = enumerate_points(f, B);
        for (const auto& p : pts) arr.push_back(point_to_string(p));
        j["count"] = pts.size();
      }
      j["points"] = arr;
      out.emit(j, std::to_string(j["count"].get<size_t>()) + " points\n");
      return 0;
    }
    if (*cmatroid) {
      std::set<uint32_t> bases;
      int rr = -1;
      std::stringstream ss(bases_s);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        uint32_t m = 0;
        for (char ch : tok) m |= 1u << (ch - '1');
        bases.insert(m);
        rr = (int)tok.size();
      }
      bool ok = is_matroid(mat_n, rr, bases);
      Json j;
      j["n"] = mat_n;
      j["r"] = rr;
      j["bases"] = bases.size();
      j["is_matroid"] = ok;
      out.emit(j, std::string(ok ? "matroid" : "not a matroid") + "\n");
      return 0;
    }
    if (*ccrowd) {
      const Band& B = band_by_name(band_name, q);
      auto sl = crowd_what == "monomial" ? monomial_subcrowd(B, n) : build_sl(B, n);
      Json j;
      j["band"] = B.name();
      j["n"] = n;
      j["count"] = sl.elements.size();
      if (!count_only) {
        Json arr = Json::array();
        for (const auto& m : sl.elements) arr.push_back(m.to_string());
        j["elements"] = arr;
      }
      if (axioms) {
        auto rep = check_crowd_axioms(sl.crowd, false);
        j["axioms"] = {{"c1", rep.c1}, {"c2", rep.c2}, {"c3", rep.c3}};
      }
      bool pass = true;
      if (group) {
        auto g = group_from_crowd(sl.crowd);
        j["group"] = {{"ok", g.ok}, {"reason", g.reason}};
        pass = g.ok;
      }
      out.emit(j, "count " + std::to_string(sl.elements.size()) + "\n");
      return pass ? 0 : 2;
    }
    if (*corbit) {
      const Band& B = band_by_name(band_name, q);
      auto a = parse_matrix(B, n, a_s);
      PluckerFamily x{&B, functor == "gr" ? r : 1, functor == "gr" ? n : n, {}};
      x.coords = parse_vector(B, x_s);
      if (functor == "proj") {
        x.r = 1;
        x.n = n;
      }
      if ((int)x.coords.size() != (int)subsets_colex(x.n, x.r).size())
        throw CLI::ValidationError("--x", "wrong coordinate count");
      auto orb = orbit(a, canonicalize(x));
      Json j;
      j["band"] = B.name();
      j["a"] = a.to_string();
      j["x"] = point_to_string(canonicalize(x));
      Json arr = Json::array();
      for (const auto& y : orb) arr.push_back(point_to_string(y));
      j["orbit"] = arr;
      j["count"] = orb.size();
      out.emit(j, std::to_string(orb.size()) + " points\n");
      return 0;
    }
    if (*ccomplex) {
      const Band& B = band_by_name(band_name, q);
      auto c = complex_type == "gamma" ? build_gamma(B, n) : build_delta(B, n);
      out.emit(complex_to_json(c), "complex over " + B.name() + "\n");
      return 0;
    }
    if (*cpolygon) {
      IncidenceGeometry g;
      if (shape == "ngon") g = ordinary_ngon(ngon);
      if (shape == "complete") g = complete_graph_geometry(km);
      if (shape == "pg") g = pg_model(q, pd).point_line_geometry();
      if (shape == "t2") g = t2_of_oval(q, conic_oval(q));
      if (shape == "q4") g = q4q_quadric(q);
      if (do_double) g = double_geometry(g);
      auto cert = verify_polygon(g);
      Json j;
      j["points"] = g.num_points;
      j["lines"] = g.num_lines;
      j["certificate"] = certificate_to_json(cert);
      out.emit(j, "gonality " + std::to_string(cert.gonality) + "\n");
      return cert.ok ? 0 : 2;
    }
    if (*cclassify) {
      Json j;
      long long unmatched = 0;
      if (target == "plane") {
        auto rep = enumerate_plane_epis(q);
        j = plane_report_to_json(rep);
        unmatched = rep.unmatched;
      } else {
        auto rep = enumerate_p3_epis(q, jobs);
        j = p3_report_to_json(rep, with_structures);
        unmatched = rep.unmatched;
      }
      out.emit(j, "unmatched " + std::to_string(unmatched) + "\n");
      return unmatched == 0 ? 0 : 2;
    }
    if (*cverify) {
      auto results = run_acceptance(jobs, filter);
      std::string text;
      bool all = true;
      for (const auto& r : results) {
        char line[160];
        std::snprintf(line, sizeof(line), "[%2d] %-28s %s%s%s\n", r.id, r.name.c_str(),
                      r.pass ? "PASS" : "FAIL", r.detail.empty() ? "" : " -- ",
                      r.detail.c_str());
        text += line;
        all = all && r.pass;
      }
      out.emit(Json::parse(acceptance_report_json(results)), text);
      return all ? 0 : 2;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
