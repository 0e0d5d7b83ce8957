#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "funcrowd/points.hpp"

using namespace funcrowd;

namespace {

PluckerFamily make_point(const Band& B, int r, int n, std::initializer_list<std::string> coords) {
  PluckerFamily x{&B, r, n, {}};
  for (const auto& c : coords) x.coords.push_back(B.parse(c));
  return canonicalize(x);
}

}  // namespace

TEST_CASE("projective space counts") {
  CHECK(enumerate_points(Functor::proj(2), band(BandKind::Krasner)).size() == 7);
  CHECK(enumerate_points(Functor::proj(1), band(BandKind::Fpm)).size() == 4);
  CHECK(enumerate_points(Functor::proj(2), band(BandKind::Fq, 3)).size() == 13);
  CHECK(enumerate_points(Functor::proj(1), band(BandKind::Fq, 2)).size() == 3);
}

TEST_CASE("Proj(1) over Fpm lists the four expected points") {
  auto pts = enumerate_points(Functor::proj(1), band(BandKind::Fpm));
  const Band& F = band(BandKind::Fpm);
  std::set<PluckerFamily> got(pts.begin(), pts.end());
  std::set<PluckerFamily> want{make_point(F, 1, 2, {"0", "1"}), make_point(F, 1, 2, {"1", "0"}),
                               make_point(F, 1, 2, {"1", "1"}), make_point(F, 1, 2, {"1", "-1"})};
  CHECK(got == want);
}

TEST_CASE("satisfies_plucker over K") {
  const Band& K = band(BandKind::Krasner);
  // support {12, 34} only: the three-term relation has a single term
  auto bad = make_point(K, 2, 4, {"1", "0", "0", "0", "0", "1"});
  CHECK(!satisfies_plucker(bad));
  // uniform U_{2,4}: every relation has multiplicity 3 >= 2
  auto u24 = make_point(K, 2, 4, {"1", "1", "1", "1", "1", "1"});
  CHECK(satisfies_plucker(u24));
}

TEST_CASE("decomposable vectors over a field satisfy the relation") {
  for (int q : {2, 3}) {
    for (const auto& x : field_grassmannian_oracle(q, 2, 4)) CHECK(satisfies_plucker(x));
  }
}

TEST_CASE("Gr counts") {
  CHECK(enumerate_points(Functor::gr(2, 3), band(BandKind::Krasner)).size() == 7);
  CHECK(field_grassmannian_oracle(2, 1, 2).size() == 3);
  CHECK(field_grassmannian_oracle(2, 2, 4).size() == 35);
  CHECK(field_grassmannian_oracle(3, 1, 3).size() == 13);
}

TEST_CASE("oracle equivalence pins the sign convention") {
  for (int q : {2, 3}) {
    const Band& B = band(BandKind::Fq, q);
    for (int n = 2; n <= 4; ++n) {
      for (int r = 1; r <= 2 && r <= n; ++r) {
        auto enumerated = enumerate_points(Functor::gr(r, n), B);
        auto oracle = field_grassmannian_oracle(q, r, n);
        CHECK(enumerated == oracle);
      }
    }
  }
}

TEST_CASE("canonicalization is idempotent and scaling-invariant") {
  for (const Band* B : {&band(BandKind::Fpm), &band(BandKind::Fq, 3)}) {
    auto pts = enumerate_points(Functor::gr(2, 4), *B);
    for (const auto& x : pts) {
      CHECK(canonicalize(x) == x);
      for (const auto& u : B->units()) {
        PluckerFamily y = x;
        for (auto& c : y.coords) c = B->mul(c, u);
        CHECK(canonicalize(y) == x);
        CHECK(satisfies_plucker(y) == satisfies_plucker(x));
      }
    }
  }
}

TEST_CASE("incidence over K matches subspace flags") {
  const Band& K = band(BandKind::Krasner);
  auto e1 = make_point(K, 1, 3, {"1", "0", "0"});
  auto e3 = make_point(K, 1, 3, {"0", "0", "1"});
  auto plane12 = make_point(K, 2, 3, {"1", "0", "0"});  // support {1,2} only
  CHECK(satisfies_incidence(e1, plane12));
  CHECK(!satisfies_incidence(e3, plane12));
}

TEST_CASE("field flags satisfy incidence") {
  const Band& F2 = band(BandKind::Fq, 2);
  auto flags = enumerate_flags({1, 2}, 3, F2);
  CHECK(flags.size() == 21);  // chambers of the A2 building over F2
  for (const auto& f : flags) CHECK(is_valid_flag(f));
}

TEST_CASE("project_flag") {
  const Band& K = band(BandKind::Krasner);
  auto flags = enumerate_flags({1, 2}, 3, K);
  CHECK(flags.size() == 22);
  auto gr1 = enumerate_points(Functor::gr(1, 3), K);
  auto gr2 = enumerate_points(Functor::gr(2, 3), K);
  std::set<PluckerFamily> s1(gr1.begin(), gr1.end()), s2(gr2.begin(), gr2.end());
  for (const auto& f : flags) {
    CHECK(project_flag(f, {1, 2}) == f);
    auto p1 = project_flag(f, {1});
    auto p2 = project_flag(f, {2});
    CHECK(s1.count(p1.stages[0]) == 1);
    CHECK(s2.count(p2.stages[0]) == 1);
  }
  CHECK_THROWS(project_flag(flags[0], {3}));
}

TEST_CASE("induced_map functoriality") {
  for (int q : {2, 3}) {
    const Band& Fq = band(BandKind::Fq, q);
    auto t = units_to_one_morphism(Fq);
    REQUIRE(check_morphism(t));
    for (int n = 2; n <= 4; ++n) {
      for (int r = 1; r <= 2 && r <= n; ++r) {
        for (const auto& x : enumerate_points(Functor::gr(r, n), Fq)) {
          auto y = induced_map(t, x);
          CHECK(satisfies_plucker(y));
          CHECK(canonicalize(y) == y);
        }
      }
    }
  }
}

TEST_CASE("t maps P2(F3) onto P2(K)") {
  const Band& F3 = band(BandKind::Fq, 3);
  auto t = units_to_one_morphism(F3);
  auto src = enumerate_points(Functor::proj(2), F3);
  auto dst = enumerate_points(Functor::proj(2), band(BandKind::Krasner));
  std::set<PluckerFamily> image;
  for (const auto& x : src) image.insert(induced_map(t, x));
  CHECK(image == std::set<PluckerFamily>(dst.begin(), dst.end()));
}

TEST_CASE("induced_map preserves incidence") {
  const Band& F2 = band(BandKind::Fq, 2);
  auto t = units_to_one_morphism(F2);
  for (const auto& f : enumerate_flags({1, 2}, 3, F2)) {
    auto g = induced_map(t, f);
    CHECK(is_valid_flag(g));
  }
}
