#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "funcrowd/activity.hpp"

using namespace funcrowd;

namespace {

Elt eval_field(const Band& B, const FormalSum& s) {
  Elt acc = B.zero();
  for (const auto& t : s.terms()) acc = B.add(acc, t);
  return acc;
}

BandMatrix field_mat_mul(const BandMatrix& a, const BandMatrix& b) {
  const Band& B = *a.b;
  BandMatrix out{&B, a.n, std::vector<Elt>(a.n * a.n, B.zero())};
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      Elt s = B.zero();
      for (int k = 0; k < a.n; ++k) s = B.add(s, B.mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = s;
    }
  return out;
}

// Plucker family of the row space of a full-rank r x n matrix; nullopt when
// rank deficient.
std::optional<PluckerFamily> row_space_point(const BandMatrix& m, int r, int n) {
  const Band& B = *m.b;
  PluckerFamily x{&B, r, n, {}};
  bool any = false;
  for (uint32_t J : subsets_colex(n, r)) {
    std::vector<int> cols;
    for (int i = 1; i <= n; ++i)
      if (J & (1u << (i - 1))) cols.push_back(i - 1);
    Elt det = B.zero();
    if (r == 1) {
      det = m.entries[cols[0]];
    } else {  // r == 2
      det = B.add(B.mul(m.entries[cols[0]], m.entries[n + cols[1]]),
                  B.neg(B.mul(m.entries[cols[1]], m.entries[n + cols[0]])));
    }
    x.coords.push_back(det);
    if (det.v != Rat(0)) any = true;
  }
  if (!any) return std::nullopt;
  return canonicalize(x);
}

PluckerFamily kpoint(int r, int n, std::initializer_list<std::string> coords) {
  const Band& K = band(BandKind::Krasner);
  PluckerFamily x{&K, r, n, {}};
  for (const auto& c : coords) x.coords.push_back(K.parse(c));
  return canonicalize(x);
}

}  // namespace

TEST_CASE("minor_formal basics") {
  const Band& K = band(BandKind::Krasner);
  auto id = BandMatrix::identity(K, 3);
  auto masks = subsets_colex(3, 2);
  for (uint32_t I : masks)
    for (uint32_t J : masks) {
      auto m = minor_formal(id, I, J);
      if (I == J) CHECK(m.terms() == std::vector<Elt>{K.one()});
      else CHECK(m.terms().empty());
    }
  CHECK(eps_shift(masks[0]) == 0);  // {1,2}
}

TEST_CASE("Cauchy-Binet for both sign conventions") {
  for (bool eps_signed : {false, true}) {
    for (int q : {2, 3}) {
      const Band& B = band(BandKind::Fq, q);
      auto sl = build_sl(B, 2);
      auto masks = subsets_colex(2, 1);
      for (const auto& a : sl.elements)
        for (const auto& b : sl.elements) {
          auto ab = field_mat_mul(a, b);
          for (uint32_t I : masks)
            for (uint32_t J : masks) {
              Elt lhs = eval_field(B, minor_formal(ab, I, J, eps_signed));
              Elt rhs = B.zero();
              for (uint32_t L : masks)
                rhs = B.add(rhs, B.mul(eval_field(B, minor_formal(a, I, L, eps_signed)),
                                       eval_field(B, minor_formal(b, L, J, eps_signed))));
              CHECK(lhs == rhs);
            }
        }
    }
    const Band& F2 = band(BandKind::Fq, 2);
    auto sl3 = build_sl(F2, 3);
    std::mt19937 rng(21);
    for (int r : {1, 2}) {
      auto masks = subsets_colex(3, r);
      for (int trial = 0; trial < 400; ++trial) {
        const auto& a = sl3.elements[rng() % sl3.elements.size()];
        const auto& b = sl3.elements[rng() % sl3.elements.size()];
        auto ab = field_mat_mul(a, b);
        for (uint32_t I : masks)
          for (uint32_t J : masks) {
            Elt lhs = eval_field(F2, minor_formal(ab, I, J, eps_signed));
            Elt rhs = F2.zero();
            for (uint32_t L : masks)
              rhs = F2.add(rhs, F2.mul(eval_field(F2, minor_formal(a, I, L, eps_signed)),
                                       eval_field(F2, minor_formal(b, L, J, eps_signed))));
            CHECK(lhs == rhs);
          }
      }
    }
  }
}

TEST_CASE("field compatibility pins the unsigned minors") {
  // over F_2 and F_3: (a,x,y) is in T iff a maps the row space of x to that
  // of y, with the image computed from an independent matrix representative
  std::mt19937 rng(23);
  for (int q : {2, 3}) {
    const Band& B = band(BandKind::Fq, q);
    for (int n = 2; n <= 3; ++n) {
      auto sl = build_sl(B, n);
      for (int r = 1; r <= 2 && r < n; ++r) {
        auto points = field_grassmannian_oracle(q, r, n);
        int ncells = r * n;
        int total = 1;
        for (int i = 0; i < ncells; ++i) total *= q;
        int a_samples = (int)sl.elements.size() > 200 ? 200 : (int)sl.elements.size();
        for (int ai = 0; ai < a_samples; ++ai) {
          const auto& a = (int)sl.elements.size() > 200
                              ? sl.elements[rng() % sl.elements.size()]
                              : sl.elements[ai];
          int m_samples = total > 100 ? 100 : total;
          for (int mi = 0; mi < m_samples; ++mi) {
            int code = total > 100 ? (int)(rng() % total) : mi;
            BandMatrix m{&B, n, std::vector<Elt>(ncells, B.zero())};  // r x n, row-major
            for (int i = 0; i < ncells; ++i) {
              m.entries[i] = Elt{Rat(code % q)};
              code /= q;
            }
            auto x = row_space_point(m, r, n);
            if (!x) continue;
            // image rows: row_i * a^T
            BandMatrix img{&B, n, std::vector<Elt>(ncells, B.zero())};
            for (int i = 0; i < r; ++i)
              for (int j = 0; j < n; ++j) {
                Elt s = B.zero();
                for (int k = 0; k < n; ++k) s = B.add(s, B.mul(m.entries[i * n + k], a.at(j, k)));
                img.entries[i * n + j] = s;
              }
            auto y = row_space_point(img, r, n);
            REQUIRE(y.has_value());
            for (const auto& cand : points)
              CHECK(activity_member(a, *x, cand) == (cand == *y));
          }
        }
      }
    }
  }
}

TEST_CASE("the eps-signed convention fails field compatibility") {
  const Band& F3 = band(BandKind::Fq, 3);
  auto a = BandMatrix::from_strings(F3, 2, {"1", "1", "0", "1"});
  PluckerFamily x{&F3, 1, 2, {F3.zero(), F3.one()}};
  PluckerFamily y{&F3, 1, 2, {F3.one(), F3.one()}};  // = a.x classically
  CHECK(activity_member(a, x, y));
  CHECK(!activity_member(a, x, y, /*eps_signed=*/true));
  // the signed variant is the plain action conjugated by diag(1,-1)
  PluckerFamily y2{&F3, 1, 2, {F3.one(), F3.parse("2")}};
  CHECK(activity_member(a, x, canonicalize(y2), /*eps_signed=*/true));
}

TEST_CASE("case study orbits over K") {
  const Band& K = band(BandKind::Krasner);
  auto shear = BandMatrix::from_strings(K, 3, {"1", "1", "0", "0", "1", "0", "0", "0", "1"});
  auto e13 = kpoint(1, 3, {"1", "0", "1"});
  auto ones1 = kpoint(1, 3, {"1", "1", "1"});
  auto orb1 = orbit(shear, e13);
  CHECK(orb1 == std::vector<PluckerFamily>{e13});
  auto orb2 = orbit(shear, ones1);
  std::set<PluckerFamily> got2(orb2.begin(), orb2.end());
  CHECK(got2 == std::set<PluckerFamily>{kpoint(1, 3, {"0", "1", "1"}), ones1});

  auto ones = BandMatrix::from_strings(K, 3, {"1", "1", "1", "1", "1", "1", "1", "1", "1"});
  auto all1 = enumerate_points(Functor::gr(1, 3), K);
  auto orb3 = orbit(ones, ones1);
  CHECK(std::set<PluckerFamily>(orb3.begin(), orb3.end()) ==
        std::set<PluckerFamily>(all1.begin(), all1.end()));
  // rank-2 point spanned by the columns of [[1,0],[0,1],[1,1]]
  auto rank2 = kpoint(2, 3, {"1", "1", "1"});
  auto all2 = enumerate_points(Functor::gr(2, 3), K);
  auto orb4 = orbit(ones, rank2);
  CHECK(std::set<PluckerFamily>(orb4.begin(), orb4.end()) ==
        std::set<PluckerFamily>(all2.begin(), all2.end()));
}

TEST_CASE("permutation orbits are singletons") {
  const Band& K = band(BandKind::Krasner);
  CHECK(permutation_orbits_singleton(K, 3, Functor::proj(2)));
  CHECK(permutation_orbits_singleton(K, 3, Functor::gr(2, 3)));
  CHECK(permutation_orbits_singleton(band(BandKind::Fq, 2), 2, Functor::proj(1)));
}

TEST_CASE("activity property reports") {
  const Band& K = band(BandKind::Krasner);
  auto repk3 = check_activity_properties(K, 3, Functor::proj(2));
  CHECK(repk3.a1);
  CHECK(!repk3.a2.has_value());  // crowd too large for the full scan
  auto repf = check_activity_properties(band(BandKind::Fpm), 2, Functor::proj(1));
  CHECK(repf.a1);
  CHECK(repf.a2.has_value());
  CHECK(repf.a3.has_value());
  auto repk2 = check_activity_properties(K, 2, Functor::proj(1));
  CHECK(repk2.a1);
  CHECK(repk2.a2.has_value());
  CHECK(repk2.a3.has_value());
}

TEST_CASE("orbit nonemptiness for SL3(K) on the complex vertices") {
  const Band& K = band(BandKind::Krasner);
  auto sl = build_sl(K, 3);
  for (int r : {1, 2}) {
    auto pts = enumerate_points(Functor::gr(r, 3), K);
    for (const auto& a : sl.elements)
      for (const auto& x : pts) CHECK(!orbit(a, x).empty());
  }
}

TEST_CASE("projection equivariance on flags over K") {
  const Band& K = band(BandKind::Krasner);
  auto sl = build_sl(K, 3);
  auto flags = enumerate_flags({1, 2}, 3, K);
  for (const auto& a : sl.elements) {
    for (const auto& x : flags) {
      for (const auto& y : flags) {
        if (!activity_member(a, x, y)) continue;
        for (std::vector<int> sub : {std::vector<int>{1}, std::vector<int>{2}}) {
          auto px = project_flag(x, sub);
          auto py = project_flag(y, sub);
          CHECK(activity_member(a, px.stages[0], py.stages[0]));
        }
      }
    }
  }
}

TEST_CASE("left multiplication activity") {
  auto f2 = build_sl(band(BandKind::Fq, 2), 2);
  auto act = left_mult_activity(f2.crowd);
  auto res = recognize_group_action(f2.crowd, act);
  REQUIRE(res.ok);
  auto grp = group_from_crowd(f2.crowd);
  for (int a = 0; a < f2.crowd.size; ++a)
    for (int b = 0; b < f2.crowd.size; ++b) CHECK(res.theta[a][b] == grp.table.mul[a][b]);

  auto free3 = free_crowd(3);
  auto actf = left_mult_activity(free3);
  for (int x = 1; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(!actf.member(0, x, y));

  auto k2 = build_sl(band(BandKind::Krasner), 2);
  auto resk = recognize_group_action(k2.crowd, left_mult_activity(k2.crowd));
  CHECK(!resk.ok);
}

TEST_CASE("monomial K matrices recover the symmetric group action") {
  const Band& K = band(BandKind::Krasner);
  auto mono = monomial_subcrowd(K, 3);
  std::vector<FlagPoint> verts;
  for (int r : {1, 2})
    for (const auto& p : enumerate_points(Functor::gr(r, 3), K)) verts.push_back(FlagPoint{{p}});
  auto elems = mono.elements;
  SetActivity act;
  act.g_size = mono.crowd.size;
  act.x_size = (int)verts.size();
  act.member = [elems, verts](int a, int x, int y) {
    return activity_member(elems[a], verts[x], verts[y]);
  };
  auto res = recognize_group_action(mono.crowd, act);
  CHECK(res.ok);
  // the action permutes each Grassmannian stratum faithfully
  std::set<std::vector<int>> images;
  for (int a = 0; a < act.g_size; ++a) images.insert(res.theta[a]);
  CHECK(images.size() == 6);
}

TEST_CASE("SL2(K) on P1(K) is not a group action") {
  const Band& K = band(BandKind::Krasner);
  auto sl = build_sl(K, 2);
  auto pts = enumerate_points(Functor::proj(1), K);
  auto elems = sl.elements;
  SetActivity act;
  act.g_size = sl.crowd.size;
  act.x_size = (int)pts.size();
  act.member = [elems, pts](int a, int x, int y) {
    return activity_member(elems[a], pts[x], pts[y]);
  };
  auto res = recognize_group_action(sl.crowd, act);
  CHECK(!res.ok);
}

TEST_CASE("activity_member input validation") {
  const Band& K = band(BandKind::Krasner);
  auto a = BandMatrix::identity(K, 3);
  auto x = kpoint(1, 3, {"1", "0", "0"});
  auto y2 = kpoint(2, 3, {"1", "0", "0"});
  CHECK_THROWS(activity_member(a, x, y2));
  auto xf3 = PluckerFamily{&band(BandKind::Fq, 3), 1, 3,
                           {band(BandKind::Fq, 3).one(), band(BandKind::Fq, 3).zero(),
                            band(BandKind::Fq, 3).zero()}};
  CHECK_THROWS(activity_member(a, x, xf3));
}
