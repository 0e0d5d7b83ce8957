#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "funcrowd/band.hpp"

using namespace funcrowd;

namespace {

FormalSum sum_of(const Band& B, std::initializer_list<std::string> elems) {
  FormalSum s;
  for (const auto& e : elems) s.add(B.parse(e));
  return s;
}

std::vector<const Band*> finite_bands() {
  return {&band(BandKind::Krasner), &band(BandKind::Fpm), &band(BandKind::Fq, 2),
          &band(BandKind::Fq, 3),   &band(BandKind::Fq, 4), &band(BandKind::Fq, 5),
          &band(BandKind::Fq, 7),   &band(BandKind::Fq, 8), &band(BandKind::Fq, 9)};
}

}  // namespace

TEST_CASE("make_band basics") {
  const Band& K = band(BandKind::Krasner);
  CHECK(K.universe().size() == 2);
  CHECK(K.units().size() == 1);
  const Band& F = band(BandKind::Fpm);
  CHECK(F.universe().size() == 3);
  CHECK(F.units().size() == 2);
  const Band& F4 = band(BandKind::Fq, 4);
  CHECK(F4.universe().size() == 4);
  CHECK(F4.units().size() == 3);
  CHECK_THROWS(band(BandKind::Fq, 6));
  CHECK_THROWS(band(BandKind::Fq, 11));
}

TEST_CASE("mul") {
  const Band& K = band(BandKind::Krasner);
  CHECK(K.mul(K.one(), K.one()) == K.one());
  const Band& F = band(BandKind::Fpm);
  CHECK(F.mul(F.parse("-1"), F.parse("-1")) == F.one());
  const Band& T = band(BandKind::Tropical);
  CHECK(T.mul(T.parse("2"), T.parse("3/2")) == T.parse("3"));
  for (const Band* B : finite_bands()) {
    for (const auto& x : B->universe()) {
      CHECK(B->mul(B->zero(), x) == B->zero());
      CHECK(B->mul(B->one(), x) == x);
      for (const auto& y : B->universe()) {
        CHECK(B->mul(x, y) == B->mul(y, x));
        for (const auto& z : B->universe())
          CHECK(B->mul(B->mul(x, y), z) == B->mul(x, B->mul(y, z)));
      }
    }
  }
}

TEST_CASE("neg") {
  const Band& F = band(BandKind::Fpm);
  CHECK(F.neg(F.one()) == F.parse("-1"));
  const Band& K = band(BandKind::Krasner);
  CHECK(K.neg(K.one()) == K.one());
  const Band& T = band(BandKind::Tropical);
  CHECK(T.neg(T.parse("5")) == T.parse("5"));
  FormalSum s;  // {5, 5} is null: max attained twice
  s.add(T.parse("5"));
  s.add(T.neg(T.parse("5")));
  CHECK(T.is_null(s));
}

TEST_CASE("is_null per band rule") {
  const Band& K = band(BandKind::Krasner);
  CHECK(K.is_null(sum_of(K, {"1", "1"})));
  CHECK(!K.is_null(sum_of(K, {"1"})));
  CHECK(K.is_null(sum_of(K, {})));
  const Band& F = band(BandKind::Fpm);
  CHECK(F.is_null(sum_of(F, {"1", "-1"})));
  CHECK(!F.is_null(sum_of(F, {"1", "1"})));
  const Band& T = band(BandKind::Tropical);
  CHECK(T.is_null(sum_of(T, {"3", "3", "2"})));
  CHECK(!T.is_null(sum_of(T, {"3", "2"})));
  const Band& F5 = band(BandKind::Fq, 5);
  CHECK(F5.is_null(sum_of(F5, {"2", "3"})));
}

TEST_CASE("unique additive inverse on every finite band") {
  for (const Band* B : finite_bands()) {
    for (const auto& a : B->universe()) {
      int inverses = 0;
      for (const auto& b : B->universe()) {
        FormalSum s;
        s.add(a);
        s.add(b);
        if (B->is_null(s)) {
          ++inverses;
          CHECK(b == B->neg(a));
        }
      }
      CHECK(inverses == 1);
      CHECK(B->neg(B->neg(a)) == a);
    }
  }
}

TEST_CASE("negation involution on tropical samples") {
  std::mt19937 rng(7);
  const Band& T = band(BandKind::Tropical);
  for (int i = 0; i < 100; ++i) {
    Elt e{Rat(rng() % 1000, 1 + rng() % 50)};
    CHECK(T.neg(T.neg(e)) == e);
  }
}

TEST_CASE("ideal closure on samples") {
  std::mt19937 rng(11);
  auto random_sum = [&](const Band& B, int len) {
    FormalSum s;
    const auto& U = B.universe();
    for (int i = 0; i < len; ++i) s.add(U[rng() % U.size()]);
    return s;
  };
  for (const Band* B : finite_bands()) {
    int found = 0;
    for (int trial = 0; trial < 4000 && found < 1000; ++trial) {
      FormalSum s = random_sum(*B, 1 + rng() % 4);
      if (!B->is_null(s)) continue;
      ++found;
      // closed under adding another null sum
      FormalSum t;
      {
        const auto& U = B->universe();
        Elt a = U[rng() % U.size()];
        t.add(a);
        t.add(B->neg(a));
      }
      FormalSum both;
      for (const auto& e : s.terms()) both.add(e);
      for (const auto& e : t.terms()) both.add(e);
      CHECK(B->is_null(both));
      // closed under scaling by any element
      const auto& U = B->universe();
      Elt x = U[rng() % U.size()];
      FormalSum scaled;
      for (const auto& e : s.terms()) scaled.add(B->mul(x, e));
      CHECK(B->is_null(scaled));
    }
    CHECK(found >= 100);
  }
}

TEST_CASE("F_q null agrees with field sum, exhaustive small") {
  for (int q : {2, 3, 4, 5}) {
    const Band& B = band(BandKind::Fq, q);
    const auto& U = B.universe();
    // all sums of <= 4 terms
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int start) {
      FormalSum s;
      Elt acc = B.zero();
      for (int i : idx) {
        s.add(U[i]);
        acc = B.add(acc, U[i]);
      }
      CHECK(B.is_null(s) == (acc == B.zero()));
      if (idx.size() == 4) return;
      for (int i = start; i < (int)U.size(); ++i) {
        idx.push_back(i);
        rec(i);
        idx.pop_back();
      }
    };
    rec(0);
  }
}

TEST_CASE("check_morphism") {
  // t: F2 -> K
  CHECK(check_morphism(units_to_one_morphism(band(BandKind::Fq, 2))));
  // f: F3 -> K collapses units
  CHECK(check_morphism(units_to_one_morphism(band(BandKind::Fq, 3))));
  // g: F3 -> Fpm with g(2) = -1 is not a morphism: 1+1+1 null in F3 only
  const Band& F3 = band(BandKind::Fq, 3);
  const Band& F = band(BandKind::Fpm);
  BandMorphism g{&F3, &F, [&](const Elt& e) {
                   if (e.v == Rat(2)) return F.parse("-1");
                   return e;
                 }};
  CHECK(!check_morphism(g));
  for (const Band* B : {&band(BandKind::Krasner), &band(BandKind::Fpm), &band(BandKind::Fq, 4)})
    CHECK(check_morphism(identity_morphism(*B)));
}

TEST_CASE("element json strings round-trip") {
  const Band& T = band(BandKind::Tropical);
  for (std::string s : {"0", "1", "3/2", "7"}) CHECK(T.format(T.parse(s)) == s);
  const Band& F = band(BandKind::Fpm);
  CHECK(F.format(F.parse("-1")) == "-1");
}
