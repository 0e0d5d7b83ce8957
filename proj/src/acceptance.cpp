#include "funcrowd/acceptance.hpp"

#include <random>
#include <sstream>

#include "funcrowd/activity.hpp"
#include "funcrowd/crowd.hpp"
#include "funcrowd/f1_structure.hpp"
#include "funcrowd/flag_complex.hpp"
#include "funcrowd/geometry.hpp"
#include "funcrowd/json_io.hpp"
#include "funcrowd/matroid.hpp"
#include "funcrowd/points.hpp"

namespace funcrowd {

namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

BandMatrix mat(const Band& B, int n, std::initializer_list<std::string> rows) {
  return BandMatrix::from_strings(B, n, rows);
}

PluckerFamily kpoint(int r, int n, std::initializer_list<std::string> coords) {
  const Band& K = band(BandKind::Krasner);
  PluckerFamily x{&K, r, n, {}};
  for (const auto& s : coords) x.coords.push_back(K.parse(s));
  return canonicalize(x);
}

// ---- criterion 1 ----
Check c01_sl2_fpm() {
  Check c;
  const Band& F = band(BandKind::Fpm);
  auto sl = build_sl(F, 2);
  c.expect(sl.elements.size() == 20, "|SL2(F+-1)| != 20");
  std::vector<BandMatrix> reps{
      mat(F, 2, {"1", "0", "0", "1"}),  mat(F, 2, {"1", "1", "0", "1"}),
      mat(F, 2, {"1", "-1", "0", "1"}), mat(F, 2, {"1", "0", "1", "1"}),
      mat(F, 2, {"1", "0", "-1", "1"}), mat(F, 2, {"0", "1", "-1", "0"}),
      mat(F, 2, {"1", "1", "-1", "0"}), mat(F, 2, {"-1", "1", "-1", "0"}),
      mat(F, 2, {"0", "1", "-1", "1"}), mat(F, 2, {"0", "1", "-1", "-1"})};
  std::set<BandMatrix> expect;
  for (const auto& m : reps) {
    expect.insert(m);
    BandMatrix neg = m;
    for (auto& e : neg.entries) e = F.neg(e);
    expect.insert(neg);
  }
  c.expect(std::set<BandMatrix>(sl.elements.begin(), sl.elements.end()) == expect,
           "element list mismatch");
  int shear = sl.index_of(mat(F, 2, {"1", "1", "0", "1"}));
  c.expect(shear >= 0 && product_set(sl.crowd, shear, shear).empty(),
           "[[1,1],[0,1]]^2 not empty");
  return c;
}

// ---- criterion 2 ----
Check c02_sl2_k() {
  Check c;
  const Band& K = band(BandKind::Krasner);
  auto sl = build_sl(K, 2);
  std::set<BandMatrix> expect{
      mat(K, 2, {"1", "0", "0", "1"}), mat(K, 2, {"0", "1", "1", "0"}),
      mat(K, 2, {"1", "1", "0", "1"}), mat(K, 2, {"1", "0", "1", "1"}),
      mat(K, 2, {"1", "1", "1", "0"}), mat(K, 2, {"0", "1", "1", "1"}),
      mat(K, 2, {"1", "1", "1", "1"})};
  c.expect(std::set<BandMatrix>(sl.elements.begin(), sl.elements.end()) == expect,
           "element list mismatch");
  for (int a = 0; a < sl.crowd.size; ++a) {
    const auto& m = sl.elements[a];
    BandMatrix want{&K, 2, {m.at(1, 1), m.at(0, 1), m.at(1, 0), m.at(0, 0)}};
    c.expect(inverse_set(sl.crowd, a) == std::set<int>{sl.index_of(want)},
             "inverse of " + m.to_string() + " not the swapped singleton");
  }
  return c;
}

// ---- criterion 3 ----
Check c03_sl3_k_inverse() {
  Check c;
  const Band& K = band(BandKind::Krasner);
  auto sl = build_sl(K, 3);
  int a = sl.index_of(mat(K, 3, {"1", "1", "1", "1", "1", "1", "0", "0", "1"}));
  c.expect(a >= 0, "element missing");
  std::set<int> want{sl.index_of(mat(K, 3, {"1", "1", "0", "1", "1", "1", "0", "0", "1"})),
                     sl.index_of(mat(K, 3, {"1", "1", "1", "1", "1", "0", "0", "0", "1"})),
                     sl.index_of(mat(K, 3, {"1", "1", "1", "1", "1", "1", "0", "0", "1"}))};
  c.expect(a >= 0 && inverse_set(sl.crowd, a) == want, "inverse set mismatch");
  return c;
}

// ---- criterion 4 ----
Check c04_orbits() {
  Check c;
  const Band& K = band(BandKind::Krasner);
  c.expect(permutation_orbits_singleton(K, 3, Functor::gr(1, 3)), "sigma orbit not singleton (r=1)");
  c.expect(permutation_orbits_singleton(K, 3, Functor::gr(2, 3)), "sigma orbit not singleton (r=2)");
  auto shear = mat(K, 3, {"1", "1", "0", "0", "1", "0", "0", "0", "1"});
  auto e13 = kpoint(1, 3, {"1", "0", "1"});
  auto u1 = kpoint(1, 3, {"1", "1", "1"});
  auto orb1 = orbit(shear, e13);
  c.expect(orb1 == std::vector<PluckerFamily>{e13}, "shear orbit of [1,0,1]");
  auto orb2 = orbit(shear, u1);
  c.expect(std::set<PluckerFamily>(orb2.begin(), orb2.end()) ==
               std::set<PluckerFamily>{kpoint(1, 3, {"0", "1", "1"}), u1},
           "shear orbit of [1,1,1]");
  auto ones = mat(K, 3, {"1", "1", "1", "1", "1", "1", "1", "1", "1"});
  auto all1 = enumerate_points(Functor::gr(1, 3), K);
  auto orb3 = orbit(ones, u1);
  c.expect(orb3 == all1 && orb3.size() == 7, "all-ones orbit of [1,1,1] != Gr(1,3)(K)");
  auto all2 = enumerate_points(Functor::gr(2, 3), K);
  auto orb4 = orbit(ones, kpoint(2, 3, {"1", "1", "1"}));
  c.expect(orb4 == all2 && orb4.size() == 7, "all-ones rank-2 orbit != Gr(2,3)(K)");
  return c;
}

// ---- criterion 5 ----
Check c05_oracles() {
  Check c;
  for (int q : {2, 3})
    for (int n = 2; n <= 4; ++n)
      for (int r = 1; r <= std::min(2, n); ++r) {
        auto pts = enumerate_points(Functor::gr(r, n), band(BandKind::Fq, q));
        auto oracle = field_grassmannian_oracle(q, r, n);
        c.expect(std::set<PluckerFamily>(pts.begin(), pts.end()) ==
                     std::set<PluckerFamily>(oracle.begin(), oracle.end()),
                 "Gr(" + std::to_string(r) + "," + std::to_string(n) + ")(F" +
                     std::to_string(q) + ") != row-space oracle");
      }
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= n; ++r) {
      auto rep = grK_bijection_check(r, n);
      c.expect(rep.equal, "Gr(" + std::to_string(r) + "," + std::to_string(n) +
                              ")(K) supports != matroids");
    }
  const Band& K = band(BandKind::Krasner);
  for (int n = 2; n <= 4; ++n) {
    auto flags = enumerate_flags({1, 2}, n, K);
    std::set<std::pair<PluckerFamily, PluckerFamily>> from_flags;
    for (const auto& f : flags) from_flags.insert({f.stages[0], f.stages[1]});
    std::set<std::pair<PluckerFamily, PluckerFamily>> from_quotients;
    for (const auto& x : enumerate_points(Functor::gr(1, n), K))
      for (const auto& y : enumerate_points(Functor::gr(2, n), K))
        if (is_quotient(support_matroid(y), support_matroid(x))) from_quotients.insert({x, y});
    c.expect(from_flags == from_quotients,
             "Fl(1,2;" + std::to_string(n) + ")(K) != matroid quotient pairs");
  }
  return c;
}

// ---- criterion 6 ----
Check c06_complexes() {
  Check c;
  const Band& K = band(BandKind::Krasner);
  const Band& F2 = band(BandKind::Fq, 2);
  auto dk = build_delta(K, 3);
  c.expect(dk.count(0) == 14 && dk.count(1) == 22, "Delta3(K) counts");
  auto df = build_delta(F2, 3);
  c.expect(df.count(0) == 14 && df.count(1) == 21, "Delta3(F2) counts");
  auto img = map_complex(units_to_one_morphism(F2), df);
  int missing = 0;
  for (const auto& e : dk.simplices.at({1, 2}))
    if (!img.contains(e)) ++missing;
  c.expect(is_subcomplex(img, dk) && missing == 1, "t_* image not one edge short");
  auto g3 = build_gamma(K, 3);
  bool hexagon = g3.count(0) == 6 && g3.count(1) == 6;
  std::map<std::string, int> deg;
  for (const auto& e : g3.all_of_dim(1))
    for (const auto& sub : {std::vector<int>{1}, std::vector<int>{2}})
      deg[std::to_string(sub[0]) + point_to_string(project_flag(e, sub).stages[0])]++;
  for (const auto& [v, d] : deg) hexagon = hexagon && d == 2;
  hexagon = hexagon && deg.size() == 6;
  c.expect(hexagon, "Gamma3(K) not a 6-cycle");
  auto g4 = build_gamma(K, 4);
  c.expect(g4.count(0) == 14 && g4.count(1) == 36 && g4.count(2) == 24, "Gamma4(K) counts");
  c.expect(commuting_square_with_support(2, 3), "commuting square fails on the 21 chambers");
  return c;
}

// ---- criterion 7 ----
Check c07_crowd_axioms() {
  Check c;
  for (int n : {2, 3})
    for (const Band* B : {&band(BandKind::Fpm), &band(BandKind::Krasner), &band(BandKind::Fq, 2),
                          &band(BandKind::Fq, 3)}) {
      auto sl = build_sl(*B, n);
      auto rep = check_crowd_axioms(sl.crowd, false);
      c.expect(rep.c1 && rep.c2 && rep.c3,
               "C1-C3 fail for SL" + std::to_string(n) + "(" + B->name() + ")");
    }
  auto f3 = build_sl(band(BandKind::Fq, 3), 2);
  auto g = group_from_crowd(f3.crowd);
  c.expect(g.ok && (int)g.table.mul.size() == 24, "SL2(F3) not a group of order 24");
  for (int n = 1; n <= 4; ++n) {
    auto mono = monomial_subcrowd(band(BandKind::Krasner), n);
    auto gm = group_from_crowd(mono.crowd);
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    c.expect(gm.ok && (int)gm.table.mul.size() == fact,
             "monomial K crowd not S_" + std::to_string(n));
  }
  auto slk = build_sl(band(BandKind::Krasner), 2);
  auto gk = group_from_crowd(slk.crowd);
  c.expect(!gk.ok && !gk.reason.empty(), "SL2(K) unexpectedly a group");
  return c;
}

// ---- criterion 8 ----
Check c08_tropical() {
  Check c;
  const Band& T = band(BandKind::Tropical);
  std::mt19937 rng(12345);
  auto rand_elt = [&]() {
    long long num = rng() % 16;
    long long den = 1 + rng() % 4;
    return Elt{Rat(num, den)};
  };
  int mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    BandMatrix a{&T, 2, {rand_elt(), rand_elt(), rand_elt(), rand_elt()}};
    auto rep = sl2T_member(a);
    if (rep.member != (rep.branch != 0)) ++mismatches;
    if (rep.member != sl_member(a)) ++mismatches;
  }
  c.expect(mismatches == 0, "branch condition disagreement");
  BandMatrix twos{&T, 2, {T.parse("2"), T.parse("2"), T.parse("2"), T.parse("2")}};
  c.expect(sl2T_member(twos).member, "[[2,2],[2,2]] not in SL2(T)");
  const Band& OT = band(BandKind::TropicalIntegers);
  std::vector<Elt> grid{OT.parse("0"), OT.parse("1/4"), OT.parse("1/2"), OT.parse("3/4"),
                        OT.parse("1")};
  bool grid_ok = true;
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& x : grid)
        for (const auto& y : grid) {
          BandMatrix m{&OT, 2, {a, b, x, y}};
          bool member = sl_member(m);
          bool shape = (a == OT.one() && y == OT.one()) || (b == OT.one() && x == OT.one());
          grid_ok = grid_ok && member == shape;
        }
  c.expect(grid_ok, "SL2(O_T) grid shapes mismatch");
  return c;
}

// ---- criterion 9 ----
Check c09_polygons() {
  Check c;
  c.expect(incidence_isomorphic(double_geometry(ordinary_ngon(3)), ordinary_ngon(6)),
           "double(triangle) != hexagon");
  auto fano = pg_model(2, 2).point_line_geometry();
  auto dfano = double_geometry(fano);
  auto cd = verify_polygon(dfano);
  c.expect(cd.ok && cd.gonality == 6 && cd.has_order && cd.s == 1 && cd.t == 2 &&
               dfano.num_points == 14 && dfano.num_lines == 21,
           "double(Fano) certificate");
  auto t2 = t2_of_oval(2, conic_oval(2));
  auto ct = verify_polygon(t2);
  c.expect(ct.ok && ct.gonality == 4 && ct.s == 2 && ct.t == 2 && t2.num_points == 15 &&
               t2.num_lines == 15,
           "T2(O) not GQ(2,2) with 15/15");
  c.expect(incidence_isomorphic(t2, q4q_quadric(2)), "T2(O) !~ Q(4,2)");
  // Feit-Higman consistency over the constructed thick suite
  std::vector<PolygonCertificate> thick{verify_polygon(fano),
                                        verify_polygon(pg_model(3, 2).point_line_geometry()),
                                        ct,
                                        verify_polygon(q4q_quadric(2)),
                                        verify_polygon(q4q_quadric(3)),
                                        verify_polygon(t2_of_oval(3, conic_oval(3)))};
  for (const auto& cert : thick)
    c.expect(cert.ok && cert.thick && cert.warnings.empty() &&
                 (cert.gonality == 3 || cert.gonality == 4 || cert.gonality == 6 ||
                  cert.gonality == 8),
             "Feit-Higman warning on a constructed thick polygon");
  return c;
}

// ---- criterion 10 ----
Check c10_plane_classification() {
  Check c;
  for (int q : {2, 3}) {
    auto rep = enumerate_plane_epis(q);
    c.expect(rep.valid > 0 && rep.unmatched == 0,
             "q=" + std::to_string(q) + ": " + std::to_string(rep.unmatched) + " unmatched");
  }
  return c;
}

// ---- criterion 11 ----
Check c11_p3_classification(int jobs) {
  Check c;
  auto rep = enumerate_p3_epis(2, jobs);
  c.expect(rep.valid > 0 && rep.unmatched == 0,
           std::to_string(rep.unmatched) + " structures outside E/F");
  const auto& m = p3_model(2);
  auto ge = generate_case_E_templates(m);
  auto gf = generate_case_F_templates(m);
  std::set<std::vector<int>> gen = ge;
  gen.insert(gf.begin(), gf.end());
  std::set<std::vector<int>> found(rep.structures.begin(), rep.structures.end());
  c.expect(gen == found, "generated templates != search results");
  bool dim = true;
  for (const auto& cls : rep.structures)
    dim = dim && dimension_check(F1Structure{&m, 4, cls, {}});
  c.expect(dim, "dimension check fails on a found structure");
  return c;
}

// ---- criterion 12 ----
Check c12_determinism() {
  Check c;
  // the classification searches are the only worker-sensitive computations;
  // their serialized reports must agree byte for byte across worker counts
  std::string base;
  for (int jobs : {1, 2, 4}) {
    Json j;
    j["plane2"] = plane_report_to_json(enumerate_plane_epis(2));
    j["plane3"] = plane_report_to_json(enumerate_plane_epis(3));
    j["p3"] = p3_report_to_json(enumerate_p3_epis(2, jobs), true);
    auto s = dump_canonical(j);
    if (base.empty())
      base = s;
    else
      c.expect(s == base, "report differs at jobs=" + std::to_string(jobs));
  }
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int jobs, const std::string& filter) {
  struct Entry {
    int id;
    std::string name;
    std::function<Check()> fn;
  };
  std::vector<Entry> entries{
      {1, "crowd-sl2-fpm", c01_sl2_fpm},
      {2, "crowd-sl2-krasner", c02_sl2_k},
      {3, "crowd-sl3-krasner-inverse", c03_sl3_k_inverse},
      {4, "orbit-case-study", c04_orbits},
      {5, "oracle-equivalences", c05_oracles},
      {6, "complex-counts", c06_complexes},
      {7, "crowd-axioms-groups", c07_crowd_axioms},
      {8, "tropical-sl2", c08_tropical},
      {9, "polygon-suite", c09_polygons},
      {10, "classify-plane-gt", c10_plane_classification},
      {11, "classify-p3-funstr", [jobs] { return c11_p3_classification(jobs); }},
      {12, "determinism-workers", c12_determinism},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    if (!filter.empty() && e.name.find(filter) == std::string::npos) continue;
    Check c = e.fn();
    out.push_back({e.id, e.name, c.pass, c.detail});
  }
  return out;
}

std::string acceptance_report_json(const std::vector<CriterionResult>& results) {
  Json j;
  j["suite"] = "acceptance";
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["detail"] = r.detail;
    arr.push_back(c);
    all = all && r.pass;
  }
  j["criteria"] = std::move(arr);
  j["all_pass"] = all;
  return dump_canonical(j);
}

}  // namespace funcrowd
