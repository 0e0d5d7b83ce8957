#include "funcrowd/points.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace funcrowd {

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Colex rank of an r-subset given as a bitmask.
int colex_rank(uint32_t mask) {
  int t = 0;
  long long r = 0;
  for (int i = 1; i <= 31 && (mask >> (i - 1)); ++i)
    if (mask & (1u << (i - 1))) r += binom(i - 1, ++t);
  return (int)r;
}

}  // namespace

const Elt& PluckerFamily::at(uint32_t mask) const { return coords[colex_rank(mask)]; }

bool PluckerFamily::has_unit() const {
  for (const auto& c : coords)
    if (b->is_unit(c)) return true;
  return false;
}

bool PluckerFamily::operator<(const PluckerFamily& o) const {
  if (r != o.r) return r < o.r;
  if (n != o.n) return n < o.n;
  return coords_less(*this, o);
}

bool coords_less(const PluckerFamily& a, const PluckerFamily& b) {
  for (size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
    Rat ra = a.b->rank(a.coords[i]), rb = a.b->rank(b.coords[i]);
    if (ra != rb) return ra < rb;
  }
  return a.coords.size() < b.coords.size();
}

PluckerFamily canonicalize(const PluckerFamily& x) {
  const Band& B = *x.b;
  if (!B.finite()) {
    // scale by the inverse of the first unit coordinate
    for (const auto& c : x.coords) {
      if (B.is_unit(c)) {
        if (c.v == Rat(1)) return x;
        PluckerFamily y = x;
        Rat inv = Rat(1) / c.v;
        for (auto& e : y.coords) e.v *= inv;
        return y;
      }
    }
    return x;
  }
  PluckerFamily best = x;
  for (const auto& u : B.units()) {
    PluckerFamily y = x;
    for (auto& e : y.coords) e = B.mul(e, u);
    if (coords_less(y, best)) best = y;
  }
  return best;
}

bool satisfies_incidence(const PluckerFamily& x, const PluckerFamily& y) {
  if (x.r > y.r) throw std::invalid_argument("satisfies_incidence: rank order violated");
  if (x.n != y.n || x.b != y.b) throw std::invalid_argument("satisfies_incidence: mismatched families");
  const Band& B = *x.b;
  int n = x.n;
  for (uint32_t J : subsets_colex(n, y.r + 1)) {
    for (uint32_t Jp : subsets_colex(n, x.r - 1)) {
      FormalSum s;
      int k = 0;
      for (int jk : mask_elems(J)) {
        if (!(Jp & (1u << (jk - 1)))) {  // collision contributes zero
          Elt term = B.mul(y.at(J & ~(1u << (jk - 1))), x.at(Jp | (1u << (jk - 1))));
          if ((k + eps_below(jk, Jp)) % 2 == 1) term = B.neg(term);
          s.add(term);
        }
        ++k;
      }
      if (!B.is_null(s)) return false;
    }
  }
  return true;
}

bool satisfies_plucker(const PluckerFamily& x) { return satisfies_incidence(x, x); }

std::vector<int> FlagPoint::type() const {
  std::vector<int> t;
  for (const auto& s : stages) t.push_back(s.r);
  return t;
}

bool FlagPoint::operator<(const FlagPoint& o) const {
  if (type() != o.type()) return type() < o.type();
  for (size_t i = 0; i < stages.size(); ++i) {
    if (stages[i] == o.stages[i]) continue;
    return coords_less(stages[i], o.stages[i]);
  }
  return false;
}

bool is_valid_flag(const FlagPoint& f) {
  for (size_t i = 0; i < f.stages.size(); ++i) {
    if (i + 1 < f.stages.size() && f.stages[i].r >= f.stages[i + 1].r) return false;
    if (!satisfies_plucker(f.stages[i])) return false;
    for (size_t j = i + 1; j < f.stages.size(); ++j)
      if (!satisfies_incidence(f.stages[i], f.stages[j])) return false;
  }
  return true;
}

FlagPoint project_flag(const FlagPoint& f, const std::vector<int>& subtype) {
  FlagPoint out;
  size_t pos = 0;
  for (int r : subtype) {
    while (pos < f.stages.size() && f.stages[pos].r != r) ++pos;
    if (pos == f.stages.size()) throw std::invalid_argument("project_flag: subtype is not a subsequence");
    out.stages.push_back(f.stages[pos]);
  }
  return out;
}

std::string Functor::to_string() const {
  switch (kind) {
    case Proj: return "Proj(" + std::to_string(n) + ")";
    case Gr: return "Gr(" + std::to_string(r) + "," + std::to_string(n) + ")";
    case Fl: {
      std::string s = "Fl(";
      for (size_t i = 0; i < rvec.size(); ++i) s += (i ? "," : "") + std::to_string(rvec[i]);
      return s + ";" + std::to_string(n) + ")";
    }
  }
  return "?";
}

namespace {

// All canonical Gr(r,n)(B) points, sorted by the band's element order.
std::vector<PluckerFamily> enumerate_gr(int r, int n, const Band& B) {
  if (!B.finite()) throw std::domain_error("enumerate_points requires a finite band");
  const auto& U = B.universe();
  int ncoords = (int)subsets_colex(n, r).size();
  std::set<PluckerFamily> out;
  PluckerFamily x{&B, r, n, std::vector<Elt>(ncoords, B.zero())};
  std::vector<int> idx(ncoords, 0);
  while (true) {
    for (int i = 0; i < ncoords; ++i) x.coords[i] = U[idx[i]];
    if (x.has_unit() && (r == 1 || satisfies_plucker(x))) out.insert(canonicalize(x));
    int i = 0;
    for (; i < ncoords; ++i) {
      if (++idx[i] < (int)U.size()) break;
      idx[i] = 0;
    }
    if (i == ncoords) break;
  }
  std::vector<PluckerFamily> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), [](const PluckerFamily& a, const PluckerFamily& b) { return coords_less(a, b); });
  return v;
}

}  // namespace

std::vector<FlagPoint> enumerate_flags(const std::vector<int>& rvec, int n, const Band& B) {
  std::vector<std::vector<PluckerFamily>> stages;
  for (int r : rvec) stages.push_back(enumerate_gr(r, n, B));
  std::vector<FlagPoint> out;
  FlagPoint cur;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == stages.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& x : stages[i]) {
      bool ok = true;
      for (const auto& prev : cur.stages)
        if (!satisfies_incidence(prev, x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.stages.push_back(x);
      rec(i + 1);
      cur.stages.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PluckerFamily> enumerate_points(const Functor& f, const Band& b) {
  switch (f.kind) {
    case Functor::Proj: return enumerate_gr(1, f.n + 1, b);
    case Functor::Gr: return enumerate_gr(f.r, f.n, b);
    case Functor::Fl: throw std::invalid_argument("use enumerate_flags for flag functors");
  }
  throw std::logic_error("bad functor");
}

PluckerFamily induced_map(const BandMorphism& f, const PluckerFamily& x) {
  PluckerFamily y{f.target, x.r, x.n, {}};
  y.coords.reserve(x.coords.size());
  for (const auto& c : x.coords) y.coords.push_back(f.map(c));
  return canonicalize(y);
}

FlagPoint induced_map(const BandMorphism& f, const FlagPoint& x) {
  FlagPoint y;
  for (const auto& s : x.stages) y.stages.push_back(induced_map(f, s));
  return y;
}

namespace {

Elt det_fq(const Band& B, const std::vector<std::vector<Elt>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Elt sum = B.zero();
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Elt>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Elt> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    Elt t = B.mul(m[0][j], det_fq(B, sub));
    if (j % 2 == 1) t = B.neg(t);
    sum = B.add(sum, t);
  }
  return sum;
}

}  // namespace

std::vector<PluckerFamily> field_grassmannian_oracle(int q, int r, int n) {
  const Band& B = band(BandKind::Fq, q);
  const auto& U = B.universe();
  auto masks = subsets_colex(n, r);
  std::set<PluckerFamily> out;
  std::vector<std::vector<Elt>> m(r, std::vector<Elt>(n, B.zero()));
  std::vector<int> idx(r * n, 0);
  while (true) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = U[idx[i * n + j]];
    PluckerFamily x{&B, r, n, {}};
    bool fullrank = false;
    for (uint32_t I : masks) {
      std::vector<std::vector<Elt>> sub(r, std::vector<Elt>(r));
      auto cols = mask_elems(I);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub[i][j] = m[i][cols[j] - 1];
      Elt d = det_fq(B, sub);
      if (d.v != Rat(0)) fullrank = true;
      x.coords.push_back(d);
    }
    if (fullrank) out.insert(canonicalize(x));
    int i = 0;
    for (; i < r * n; ++i) {
      if (++idx[i] < (int)U.size()) break;
      idx[i] = 0;
    }
    if (i == r * n) break;
  }
  std::vector<PluckerFamily> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), [](const PluckerFamily& a, const PluckerFamily& b) { return coords_less(a, b); });
  return v;
}

std::string point_to_string(const PluckerFamily& x) {
  std::string s = "[";
  for (size_t i = 0; i < x.coords.size(); ++i) s += (i ? "," : "") + x.b->format(x.coords[i]);
  return s + "]";
}

}  // namespace funcrowd
