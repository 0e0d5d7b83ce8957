#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "funcrowd/flag_complex.hpp"
#include "funcrowd/geometry.hpp"

using namespace funcrowd;

namespace {

IncidenceGeometry fano() { return pg_model(2, 2).point_line_geometry(); }

// vertex/edge incidence geometry of a 1-dimensional simplicial complex
IncidenceGeometry complex_as_geometry(const SimplicialComplex& c) {
  IncidenceGeometry g;
  std::map<std::pair<std::vector<int>, FlagPoint>, int> vid;
  for (const auto& type : {std::vector<int>{1}, std::vector<int>{2}})
    for (const auto& v : c.simplices.at(type)) vid[{type, v}] = g.num_points++;
  for (const auto& e : c.simplices.at({1, 2})) {
    g.flags.emplace_back(vid.at({{1}, project_flag(e, {1})}), g.num_lines);
    g.flags.emplace_back(vid.at({{2}, project_flag(e, {2})}), g.num_lines);
    ++g.num_lines;
  }
  return g;
}

}  // namespace

TEST_CASE("ordinary n-gons and complete graphs") {
  for (int n : {2, 3, 4, 5, 6, 8}) {
    auto cert = verify_polygon(ordinary_ngon(n));
    CHECK(cert.ok);
    CHECK(cert.gonality == n);
    CHECK(cert.has_order);
    CHECK(cert.s == 1);
    CHECK(cert.t == 1);
    CHECK_FALSE(cert.thick);
  }
  auto k3 = complete_graph_geometry(3);
  auto c3 = verify_polygon(k3);
  CHECK(c3.ok);
  CHECK(c3.gonality == 3);
  CHECK(c3.s == 1);
  CHECK(c3.t == 1);
  auto k4 = complete_graph_geometry(4);
  CHECK(k4.num_points == 4);
  CHECK(k4.num_lines == 6);
  auto c4 = verify_polygon(k4);
  CHECK(c4.s == 1);
  CHECK(c4.t == 2);
  CHECK_FALSE(c4.ok);  // girth 6, diameter 2: not a polygon
  for (int m : {3, 4, 5}) {
    auto km = complete_graph_geometry(m);
    std::vector<int> deg(km.num_points, 0);
    for (auto [p, l] : km.flags) deg[p]++;
    for (int d : deg) CHECK(d == m - 1);
  }
  CHECK_THROWS(ordinary_ngon(1));
  CHECK_THROWS(complete_graph_geometry(2));
}

TEST_CASE("projective space models") {
  auto f = pg_model(2, 2);
  CHECK(f.points.size() == 7);
  CHECK(f.lines.size() == 7);
  auto cf = verify_polygon(f.point_line_geometry());
  CHECK(cf.ok);
  CHECK(cf.gonality == 3);
  CHECK(cf.s == 2);
  CHECK(cf.t == 2);
  CHECK(cf.thick);
  CHECK(cf.warnings.empty());

  auto p33 = pg_model(3, 2);
  CHECK(p33.points.size() == 13);
  CHECK(p33.lines.size() == 13);
  auto c33 = verify_polygon(p33.point_line_geometry());
  CHECK(c33.gonality == 3);
  CHECK(c33.s == 3);

  auto p23 = pg_model(2, 3);
  CHECK(p23.points.size() == 15);
  CHECK(p23.lines.size() == 35);
  CHECK(p23.planes.size() == 15);

  auto p43 = pg_model(4, 2);
  CHECK(p43.points.size() == 21);
  CHECK(p43.lines.size() == 21);

  auto p53 = pg_model(5, 3);
  CHECK(p53.points.size() == 156);
  CHECK(p53.lines.size() == (25 + 1) * (25 + 5 + 1));  // Gaussian binomial [4,2]_5
  CHECK(p53.planes.size() == 156);
  CHECK_THROWS(pg_model(7, 2));
  CHECK_THROWS(pg_model(2, 4));
}

TEST_CASE("doubling") {
  auto hex = double_geometry(ordinary_ngon(3));
  auto ch = verify_polygon(hex);
  CHECK(ch.ok);
  CHECK(ch.gonality == 6);
  CHECK(ch.s == 1);
  CHECK(ch.t == 1);
  CHECK(incidence_isomorphic(hex, ordinary_ngon(6)));

  auto dfano = double_geometry(fano());
  CHECK(dfano.num_points == 14);
  CHECK(dfano.num_lines == 21);
  auto cd = verify_polygon(dfano);
  CHECK(cd.ok);
  CHECK(cd.gonality == 6);
  CHECK(cd.has_order);
  CHECK(cd.s == 1);
  CHECK(cd.t == 2);
  CHECK_FALSE(cd.thick);

  for (int n : {2, 4, 5}) {
    auto d = verify_polygon(double_geometry(ordinary_ngon(n)));
    CHECK(d.ok);
    CHECK(d.gonality == 2 * n);
    CHECK(d.s == 1);
    CHECK(d.t == 1);
  }
}

TEST_CASE("ovals") {
  for (int q : {2, 3, 4, 5}) CHECK(is_oval(q, conic_oval(q)));
  const Band& F = band(BandKind::Fq, 2);
  Elt z = F.zero(), o = F.one();
  std::vector<std::vector<Elt>> tri{{o, z, z}, {z, o, z}, {z, z, o}};
  CHECK(is_oval(2, tri));
  std::vector<std::vector<Elt>> col{{o, z, z}, {z, o, z}, {o, o, z}};
  CHECK_FALSE(is_oval(2, col));
  CHECK_FALSE(is_oval(2, {{o, z, z}, {z, o, z}}));
}

TEST_CASE("Tits quadrangle") {
  auto t2 = t2_of_oval(2, conic_oval(2));
  CHECK(t2.num_points == 15);
  CHECK(t2.num_lines == 15);
  auto c = verify_polygon(t2);
  CHECK(c.ok);
  CHECK(c.gonality == 4);
  CHECK(c.has_order);
  CHECK(c.s == 2);
  CHECK(c.t == 2);
  CHECK(c.thick);
  CHECK(c.warnings.empty());

  auto oct = verify_polygon(double_geometry(t2));
  CHECK(oct.ok);
  CHECK(oct.gonality == 8);
  CHECK(oct.s == 1);
  CHECK(oct.t == 2);

  auto t24 = t2_of_oval(4, conic_oval(4));
  auto c4 = verify_polygon(t24);
  CHECK(c4.ok);
  CHECK(c4.gonality == 4);
  CHECK(c4.s == 4);
  CHECK(c4.t == 4);

  CHECK_THROWS(t2_of_oval(2, std::vector<std::vector<Elt>>{}));
}

TEST_CASE("parabolic quadric") {
  auto q2 = q4q_quadric(2);
  CHECK(q2.num_points == 15);
  CHECK(q2.num_lines == 15);
  auto c2 = verify_polygon(q2);
  CHECK(c2.ok);
  CHECK(c2.gonality == 4);
  CHECK(c2.s == 2);
  CHECK(c2.t == 2);
  CHECK(incidence_isomorphic(q2, t2_of_oval(2, conic_oval(2))));

  auto c3 = verify_polygon(q4q_quadric(3));
  CHECK(c3.ok);
  CHECK(c3.gonality == 4);
  CHECK(c3.s == 3);
  CHECK(c3.t == 3);
  CHECK_THROWS(q4q_quadric(4));
}

TEST_CASE("sub-polygon coverage") {
  CHECK(pairs_in_ordinary_subgon(double_geometry(fano()), 6));
  CHECK(pairs_in_ordinary_subgon(q4q_quadric(2), 4));
  CHECK(pairs_in_ordinary_subgon(fano(), 3));
}

TEST_CASE("isomorphism sanity") {
  CHECK(incidence_isomorphic(fano(), pg_model(2, 2).point_line_geometry()));
  CHECK_FALSE(incidence_isomorphic(fano(), pg_model(3, 2).point_line_geometry()));
  CHECK_FALSE(incidence_isomorphic(ordinary_ngon(4), complete_graph_geometry(4)));
}

TEST_CASE("building geometry matches the doubled plane") {
  auto d = build_delta(band(BandKind::Fq, 2), 3);
  auto g = complex_as_geometry(d);
  CHECK(g.num_points == 14);
  CHECK(g.num_lines == 21);
  CHECK(incidence_isomorphic(g, double_geometry(fano())));
  auto c = verify_polygon(g);
  CHECK(c.ok);
  CHECK(c.gonality == 6);
}

TEST_CASE("errors and warnings") {
  IncidenceGeometry disconnected;
  disconnected.num_points = 2;
  disconnected.num_lines = 2;
  disconnected.flags = {{0, 0}, {1, 1}};
  CHECK_THROWS(verify_polygon(disconnected));
  CHECK_THROWS(verify_polygon(IncidenceGeometry{}));
  auto bad = verify_polygon(complete_graph_geometry(4));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.warnings.empty());
}
