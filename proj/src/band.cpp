#include "funcrowd/band.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace funcrowd {

std::string rat_to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string kind_to_string(BandKind k) {
  switch (k) {
    case BandKind::Fpm: return "fpm";
    case BandKind::Krasner: return "krasner";
    case BandKind::Fq: return "fq";
    case BandKind::Tropical: return "tropical";
    case BandKind::TropicalIntegers: return "tropical_integers";
  }
  throw std::logic_error("bad kind");
}

BandKind kind_from_string(const std::string& s) {
  if (s == "fpm") return BandKind::Fpm;
  if (s == "krasner") return BandKind::Krasner;
  if (s == "fq") return BandKind::Fq;
  if (s == "tropical") return BandKind::Tropical;
  if (s == "tropical_integers") return BandKind::TropicalIntegers;
  throw std::invalid_argument("unknown band kind: " + s);
}

bool FormalSum::operator==(const FormalSum& o) const {
  auto a = terms_, b = o.terms_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

struct FieldSpec {
  int p;
  int deg;
  // coefficients of x^deg expressed in lower powers, i.e. the reduction
  // x^deg = red[0] + red[1] x + ...
  std::vector<int> red;
};

// GF(4) from x^2+x+1, GF(8) from x^3+x+1, GF(9) from x^2+1.
FieldSpec field_spec(int q) {
  switch (q) {
    case 2: return {2, 1, {}};
    case 3: return {3, 1, {}};
    case 5: return {5, 1, {}};
    case 7: return {7, 1, {}};
    case 4: return {2, 2, {1, 1}};
    case 8: return {2, 3, {1, 1, 0}};
    case 9: return {3, 2, {2, 0}};  // x^2 = -1 = 2
    default: throw std::invalid_argument("unsupported q: " + std::to_string(q));
  }
}

std::vector<int> decode(int code, int p, int deg) {
  std::vector<int> c(deg);
  for (int i = 0; i < deg; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int encode(const std::vector<int>& c, int p) {
  int code = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) code = code * p + c[i];
  return code;
}

}  // namespace

Band::Band(BandKind kind, int q) : kind_(kind), q_(q) {
  switch (kind_) {
    case BandKind::Krasner:
      universe_ = {Elt{Rat(0)}, Elt{Rat(1)}};
      break;
    case BandKind::Fpm:
      universe_ = {Elt{Rat(0)}, Elt{Rat(1)}, Elt{Rat(-1)}};
      break;
    case BandKind::Fq: {
      auto spec = field_spec(q_);
      p_ = spec.p;
      for (int c = 0; c < q_; ++c) universe_.push_back(Elt{Rat(c)});
      mul_table_.assign(q_, std::vector<int>(q_));
      add_table_.assign(q_, std::vector<int>(q_));
      neg_table_.assign(q_, 0);
      for (int a = 0; a < q_; ++a) {
        auto ca = decode(a, p_, spec.deg);
        for (int b = 0; b < q_; ++b) {
          auto cb = decode(b, p_, spec.deg);
          // addition
          std::vector<int> cs(spec.deg);
          for (int i = 0; i < spec.deg; ++i) cs[i] = (ca[i] + cb[i]) % p_;
          add_table_[a][b] = encode(cs, p_);
          // multiplication with reduction by the fixed irreducible
          std::vector<int> prod(2 * spec.deg - 1, 0);
          for (int i = 0; i < spec.deg; ++i)
            for (int j = 0; j < spec.deg; ++j)
              prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
          for (int d = (int)prod.size() - 1; d >= spec.deg; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < spec.deg; ++i)
              prod[d - spec.deg + i] = (prod[d - spec.deg + i] + c * spec.red[i]) % p_;
          }
          prod.resize(spec.deg);
          mul_table_[a][b] = encode(prod, p_);
        }
        std::vector<int> cn(spec.deg);
        for (int i = 0; i < spec.deg; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_table_[a] = encode(cn, p_);
      }
      break;
    }
    case BandKind::Tropical:
    case BandKind::TropicalIntegers:
      break;
  }
}

const Band& band(BandKind kind, int q) {
  static std::map<std::pair<BandKind, int>, Band> cache;
  if (kind != BandKind::Fq) q = 0;
  auto key = std::make_pair(kind, q);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (kind == BandKind::Fq) field_spec(q);  // validate q before caching
    it = cache.emplace(key, Band(kind, q)).first;
  }
  return it->second;
}

const Band& band_from_json_name(const std::string& kind, int q) {
  return band(kind_from_string(kind), q);
}

bool Band::contains(const Elt& e) const {
  switch (kind_) {
    case BandKind::Krasner: return e.v == Rat(0) || e.v == Rat(1);
    case BandKind::Fpm: return e.v == Rat(0) || e.v == Rat(1) || e.v == Rat(-1);
    case BandKind::Fq: return e.v.denominator() == 1 && e.v.numerator() >= 0 && e.v.numerator() < q_;
    case BandKind::Tropical: return e.v >= Rat(0);
    case BandKind::TropicalIntegers: return e.v >= Rat(0) && e.v <= Rat(1);
  }
  return false;
}

Elt Band::mul(const Elt& a, const Elt& b) const {
  switch (kind_) {
    case BandKind::Krasner:
    case BandKind::Fpm:
    case BandKind::Tropical:
    case BandKind::TropicalIntegers:
      return Elt{a.v * b.v};
    case BandKind::Fq:
      return Elt{Rat(mul_table_[a.v.numerator()][b.v.numerator()])};
  }
  throw std::logic_error("bad kind");
}

Elt Band::neg(const Elt& a) const {
  switch (kind_) {
    case BandKind::Krasner:
    case BandKind::Tropical:
    case BandKind::TropicalIntegers:
      return a;  // -1 = 1
    case BandKind::Fpm:
      return Elt{-a.v};
    case BandKind::Fq:
      return Elt{Rat(neg_table_[a.v.numerator()])};
  }
  throw std::logic_error("bad kind");
}

Elt Band::fq_add(const Elt& a, const Elt& b) const {
  return Elt{Rat(add_table_[a.v.numerator()][b.v.numerator()])};
}

Elt Band::add(const Elt& a, const Elt& b) const {
  if (kind_ != BandKind::Fq) throw std::domain_error("add is defined for field bands only");
  return fq_add(a, b);
}

bool Band::is_null(const FormalSum& s) const {
  switch (kind_) {
    case BandKind::Krasner:
      return s.size() != 1;
    case BandKind::Fpm: {
      long long pos = 0, negs = 0;
      for (const auto& t : s.terms()) (t.v == Rat(1) ? pos : negs)++;
      return pos == negs;
    }
    case BandKind::Fq: {
      Elt acc = zero();
      for (const auto& t : s.terms()) acc = fq_add(acc, t);
      return acc.v == Rat(0);
    }
    case BandKind::Tropical:
    case BandKind::TropicalIntegers: {
      if (s.size() == 0) return true;
      Rat mx(0);
      int count = 0;
      for (const auto& t : s.terms()) {
        if (t.v > mx) {
          mx = t.v;
          count = 1;
        } else if (t.v == mx) {
          count++;
        }
      }
      return count >= 2;
    }
  }
  throw std::logic_error("bad kind");
}

bool Band::is_unit(const Elt& e) const {
  switch (kind_) {
    case BandKind::Krasner: return e.v == Rat(1);
    case BandKind::Fpm: return e.v == Rat(1) || e.v == Rat(-1);
    case BandKind::Fq: return e.v != Rat(0);
    case BandKind::Tropical: return e.v > Rat(0);
    case BandKind::TropicalIntegers: return e.v == Rat(1);
  }
  return false;
}

const std::vector<Elt>& Band::universe() const {
  if (!finite()) throw std::domain_error("infinite band has no enumerable universe");
  return universe_;
}

std::vector<Elt> Band::units() const {
  if (!finite()) {
    if (kind_ == BandKind::TropicalIntegers) return {one()};
    throw std::domain_error("unit group of T is all positive rationals; not enumerable");
  }
  std::vector<Elt> u;
  for (const auto& e : universe_)
    if (is_unit(e)) u.push_back(e);
  return u;
}

Rat Band::rank(const Elt& e) const {
  if (kind_ == BandKind::Fpm) {
    if (e.v == Rat(0)) return Rat(0);
    if (e.v == Rat(1)) return Rat(1);
    return Rat(2);  // -1 last
  }
  return e.v;
}

std::string Band::format(const Elt& e) const { return rat_to_string(e.v); }

Elt Band::parse(const std::string& s) const {
  Elt e{rat_from_string(s)};
  if (!contains(e)) throw std::invalid_argument("element " + s + " not in " + name());
  return e;
}

std::string Band::name() const {
  if (kind_ == BandKind::Fq) return "F" + std::to_string(q_);
  return kind_to_string(kind_);
}

BandMorphism units_to_one_morphism(const Band& src) {
  const Band& K = band(BandKind::Krasner);
  return BandMorphism{&src, &K, [&src](const Elt& e) {
                        return e.v == Rat(0) ? Elt{Rat(0)} : Elt{Rat(1)};
                      }};
}

BandMorphism identity_morphism(const Band& b) {
  return BandMorphism{&b, &b, [](const Elt& e) { return e; }};
}

bool check_morphism(const BandMorphism& f, int max_terms) {
  const Band& S = *f.source;
  const Band& T = *f.target;
  if (!S.finite()) throw std::domain_error("check_morphism requires a finite source");
  if (f.map(S.zero()) != T.zero()) return false;
  if (f.map(S.one()) != T.one()) return false;
  for (const auto& a : S.universe())
    for (const auto& b : S.universe())
      if (f.map(S.mul(a, b)) != T.mul(f.map(a), f.map(b))) return false;
  // all multisets of <= max_terms universe elements
  const auto& U = S.universe();
  std::vector<int> idx;
  std::function<bool(int)> rec = [&](int start) -> bool {
    FormalSum s, img;
    for (int i : idx) {
      s.add(U[i]);
      img.add(f.map(U[i]));
    }
    if (S.is_null(s) && !T.is_null(img)) return false;
    if ((int)idx.size() == max_terms) return true;
    for (int i = start; i < (int)U.size(); ++i) {
      idx.push_back(i);
      if (!rec(i)) return false;
      idx.pop_back();
    }
    return true;
  };
  return rec(0);
}

}  // namespace funcrowd
