#include "funcrowd/crowd.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <random>
#include <stdexcept>

namespace funcrowd {

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Integer arithmetic for Fpm viewed inside Z.
struct RingZ {
  long long zero() const { return 0; }
  long long one() const { return 1; }
  long long add(long long x, long long y) const { return x + y; }
  long long mul(long long x, long long y) const { return x * y; }
  long long neg(long long x) const { return -x; }
};

// Table arithmetic for F_q on element codes.
struct RingF {
  int q = 0;
  std::array<int, 81> mul_t{}, add_t{};
  std::array<int, 9> neg_t{};
  explicit RingF(const Band& B) : q(B.q()) {
    for (int x = 0; x < q; ++x) {
      Elt ex{Rat(x)};
      neg_t[x] = (int)B.neg(ex).v.numerator();
      for (int y = 0; y < q; ++y) {
        Elt ey{Rat(y)};
        mul_t[x * q + y] = (int)B.mul(ex, ey).v.numerator();
        add_t[x * q + y] = (int)B.add(ex, ey).v.numerator();
      }
    }
  }
  int zero() const { return 0; }
  int one() const { return 1; }
  int add(int x, int y) const { return add_t[x * q + y]; }
  int mul(int x, int y) const { return mul_t[x * q + y]; }
  int neg(int x) const { return neg_t[x]; }
};

template <class Ring, class T>
void mat_mul(const Ring& R, const T* a, const T* b, T* out, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T s = R.zero();
      for (int k = 0; k < n; ++k) s = R.add(s, R.mul(a[i * n + k], b[k * n + j]));
      out[i * n + j] = s;
    }
}

template <class Ring, class T>
bool triple_is_identity(const Ring& R, const T* a, const T* b, const T* c, int n) {
  for (int i = 0; i < n; ++i) {
    T abi[3];
    for (int k = 0; k < n; ++k) {
      T s = R.zero();
      for (int m = 0; m < n; ++m) s = R.add(s, R.mul(a[i * n + m], b[m * n + k]));
      abi[k] = s;
    }
    for (int j = 0; j < n; ++j) {
      T s = R.zero();
      for (int k = 0; k < n; ++k) s = R.add(s, R.mul(abi[k], c[k * n + j]));
      if (s != (i == j ? R.one() : R.zero())) return false;
    }
  }
  return true;
}

// Transposed cofactor matrix; inverse when det = 1. n <= 3.
template <class Ring, class T>
void adjugate(const Ring& R, const T* a, T* out, int n) {
  if (n == 1) {
    out[0] = R.one();
    return;
  }
  if (n == 2) {
    out[0] = a[3];
    out[1] = R.neg(a[1]);
    out[2] = R.neg(a[2]);
    out[3] = a[0];
    return;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cofactor of (i,j), transposed into (j,i)
      out[j * 3 + i] =
          R.add(R.mul(a[r0 * 3 + c0], a[r1 * 3 + c1]), R.neg(R.mul(a[r0 * 3 + c1], a[r1 * 3 + c0])));
    }
}

std::vector<BandMatrix> enumerate_sl_elements(const Band& B, int n) {
  std::vector<BandMatrix> out;
  const auto& U = B.universe();
  BandMatrix m{&B, n, std::vector<Elt>(n * n, B.zero())};
  std::vector<size_t> idx(n * n, 0);
  while (true) {
    for (int i = 0; i < n * n; ++i) m.entries[i] = U[idx[i]];
    if (sl_member(m)) out.push_back(m);
    int pos = 0;
    while (pos < n * n && ++idx[pos] == U.size()) idx[pos++] = 0;
    if (pos == n * n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BandMatrix BandMatrix::identity(const Band& B, int n) {
  BandMatrix m{&B, n, std::vector<Elt>(n * n, B.zero())};
  for (int i = 0; i < n; ++i) m.at(i, i) = B.one();
  return m;
}

BandMatrix BandMatrix::from_strings(const Band& B, int n, std::initializer_list<std::string> rows) {
  BandMatrix m{&B, n, {}};
  for (const auto& e : rows) m.entries.push_back(B.parse(e));
  if ((int)m.entries.size() != n * n) throw std::invalid_argument("from_strings: wrong entry count");
  return m;
}

bool BandMatrix::operator<(const BandMatrix& o) const {
  if (n != o.n) return n < o.n;
  for (int i = 0; i < n * n; ++i) {
    if (entries[i] == o.entries[i]) continue;
    return b->elt_less(entries[i], o.entries[i]);
  }
  return false;
}

std::string BandMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < n; ++j) {
      if (j) s += ",";
      s += b->format(at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

FormalSum det_formal(const BandMatrix& a) {
  FormalSum s;
  for (const auto& p : permutations_of(a.n)) {
    Elt m = a.b->one();
    for (int i = 0; i < a.n; ++i) m = a.b->mul(m, a.at(i, p[i]));
    s.add(perm_sign(p) > 0 ? m : a.b->neg(m));
  }
  return s;
}

bool sl_member(const BandMatrix& a) {
  FormalSum s = det_formal(a);
  s.add(a.b->neg(a.b->one()));
  return a.b->is_null(s);
}

bool sl_law_formal(const BandMatrix& a, const BandMatrix& b, const BandMatrix& c) {
  const Band& B = *a.b;
  int n = a.n;
  const BandMatrix* rot[3][3] = {{&a, &b, &c}, {&c, &a, &b}, {&b, &c, &a}};
  for (auto& r : rot) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FormalSum s;
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            s.add(B.mul(B.mul(r[0]->at(i, k), r[1]->at(k, l)), r[2]->at(l, j)));
        if (i == j) s.add(B.neg(B.one()));
        if (!B.is_null(s)) return false;
      }
  }
  return true;
}

Sl2TReport sl2T_member(const BandMatrix& m) {
  if (m.n != 2) throw std::invalid_argument("sl2T_member: need n = 2");
  Sl2TReport rep;
  rep.member = sl_member(m);
  Rat ad = m.at(0, 0).v * m.at(1, 1).v, bc = m.at(0, 1).v * m.at(1, 0).v, one(1);
  if (ad <= bc && bc == one) rep.branch = 1;
  else if (bc <= ad && ad == one) rep.branch = 2;
  else if (one <= ad && ad == bc) rep.branch = 3;
  return rep;
}

std::vector<int> Crowd::complete(int a, int b) const {
  if (completions) return completions(a, b);
  std::vector<int> out;
  for (int c = 0; c < size; ++c)
    if (law(a, b, c)) out.push_back(c);
  return out;
}

int SLCrowd::index_of(const BandMatrix& m) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), m);
  if (it == elements.end() || !(*it == m)) return -1;
  return (int)(it - elements.begin());
}

namespace {

// Fast paths per band family. Each builds law/completions on element indices.

template <class Ring, class T>
void attach_ring_law(SLCrowd& sl, const Ring& R, std::function<T(const Elt&)> code) {
  int n = sl.n;
  auto codes = std::make_shared<std::vector<std::array<T, 9>>>();
  for (const auto& m : sl.elements) {
    std::array<T, 9> a{};
    for (int i = 0; i < n * n; ++i) a[i] = code(m.entries[i]);
    codes->push_back(a);
  }
  // law(a,b,c) iff abc = 1 as matrices over the ring; cyclic rotations agree
  sl.crowd.law = [codes, R, n](int a, int b, int c) {
    return triple_is_identity(R, (*codes)[a].data(), (*codes)[b].data(), (*codes)[c].data(), n);
  };
  // entries fit in 4 bits after a +1 offset; out-of-range entries can only
  // come from inverses outside the band, which are correctly absent
  auto pack = [n](const T* m) -> int64_t {
    int64_t key = 0;
    for (int i = 0; i < n * n; ++i) {
      int64_t v = (int64_t)m[i] + 1;
      if (v < 0 || v > 15) return -1;
      key = key << 4 | v;
    }
    return key;
  };
  auto index = std::make_shared<std::unordered_map<int64_t, int>>();
  for (int i = 0; i < (int)codes->size(); ++i) (*index)[pack((*codes)[i].data())] = i;
  sl.crowd.completions = [codes, index, pack, R, n](int a, int b) -> std::vector<int> {
    T ab[9], inv[9];
    mat_mul(R, (*codes)[a].data(), (*codes)[b].data(), ab, n);
    adjugate(R, ab, inv, n);
    int64_t key = pack(inv);
    if (key < 0) return {};
    auto it = index->find(key);
    if (it == index->end()) return {};
    return {it->second};
  };
}

void attach_krasner_law(SLCrowd& sl) {
  int n = sl.n;
  // row masks: bit j of row[i] set iff entry (i,j) is 1
  auto rows = std::make_shared<std::vector<std::array<uint8_t, 4>>>();
  for (const auto& m : sl.elements) {
    std::array<uint8_t, 4> r{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m.at(i, j).v != Rat(0)) r[i] |= uint8_t(1u << j);
    rows->push_back(r);
  }
  // condition per rotation (x,y,z): with N = xyz as a count matrix,
  // N_{ii} >= 1 and N_{ij} != 1 off the diagonal
  sl.crowd.law = [rows, n](int ia, int ib, int ic) {
    const auto& A = (*rows)[ia];
    const auto& B = (*rows)[ib];
    const auto& C = (*rows)[ic];
    const std::array<uint8_t, 4>* rot[3][3] = {{&A, &B, &C}, {&C, &A, &B}, {&B, &C, &A}};
    for (auto& r : rot) {
      int xy[4][4];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int cnt = 0;
          for (int k = 0; k < n; ++k)
            if ((*r[0])[i] & (1u << k)) cnt += ((*r[1])[k] >> j) & 1;
          xy[i][j] = cnt;
        }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int cnt = 0;
          for (int k = 0; k < n; ++k)
            if ((*r[2])[k] & (1u << j)) cnt += xy[i][k];
          if (i == j ? cnt < 1 : cnt == 1) return false;
        }
    }
    return true;
  };
}

}  // namespace

SLCrowd build_sl(const Band& B, int n) {
  if (!B.finite()) throw std::invalid_argument("build_sl: infinite band; use membership checks");
  if (n < 1 || n > 3) throw std::invalid_argument("build_sl: n out of range");
  SLCrowd sl;
  sl.b = &B;
  sl.n = n;
  sl.elements = enumerate_sl_elements(B, n);
  sl.crowd.size = (int)sl.elements.size();
  sl.crowd.identity = sl.index_of(BandMatrix::identity(B, n));
  for (const auto& m : sl.elements) sl.crowd.labels.push_back(m.to_string());
  if (B.kind() == BandKind::Fpm) {
    attach_ring_law<RingZ, long long>(sl, RingZ{},
                                      [](const Elt& e) { return (long long)e.v.numerator(); });
  } else if (B.kind() == BandKind::Fq) {
    attach_ring_law<RingF, int>(sl, RingF(B), [](const Elt& e) { return (int)e.v.numerator(); });
  } else if (B.kind() == BandKind::Krasner) {
    attach_krasner_law(sl);
  } else {
    auto elems = std::make_shared<std::vector<BandMatrix>>(sl.elements);
    sl.crowd.law = [elems](int a, int b, int c) {
      return sl_law_formal((*elems)[a], (*elems)[b], (*elems)[c]);
    };
  }
  return sl;
}

SLCrowd monomial_subcrowd(const Band& B, int n) {
  if (!B.finite()) throw std::invalid_argument("monomial_subcrowd: infinite band");
  if (n < 1 || n > 4) throw std::invalid_argument("monomial_subcrowd: n out of range");
  SLCrowd sl;
  sl.b = &B;
  sl.n = n;
  const auto units = B.units();
  for (const auto& p : permutations_of(n)) {
    std::vector<size_t> idx(n, 0);
    while (true) {
      BandMatrix m{&B, n, std::vector<Elt>(n * n, B.zero())};
      for (int i = 0; i < n; ++i) m.at(p[i], i) = units[idx[i]];
      if (sl_member(m)) sl.elements.push_back(m);
      int pos = 0;
      while (pos < n && ++idx[pos] == units.size()) idx[pos++] = 0;
      if (pos == n) break;
    }
  }
  std::sort(sl.elements.begin(), sl.elements.end());
  sl.crowd.size = (int)sl.elements.size();
  sl.crowd.identity = sl.index_of(BandMatrix::identity(B, n));
  for (const auto& m : sl.elements) sl.crowd.labels.push_back(m.to_string());
  auto elems = std::make_shared<std::vector<BandMatrix>>(sl.elements);
  sl.crowd.law = [elems](int a, int b, int c) {
    return sl_law_formal((*elems)[a], (*elems)[b], (*elems)[c]);
  };
  return sl;
}

Crowd free_crowd(int size) {
  Crowd g;
  g.size = size;
  g.identity = 0;
  g.law = [](int a, int b, int c) { return a == 0 && b == 0 && c == 0; };
  for (int i = 0; i < size; ++i) g.labels.push_back(i == 0 ? "1" : "x" + std::to_string(i));
  return g;
}

CrowdAxiomReport check_crowd_axioms(const Crowd& g, bool with_optional, int optional_size_limit) {
  CrowdAxiomReport rep;
  int e = g.identity;
  rep.c1 = rep.c2 = rep.c3 = true;
  bool c1s = true, c2s = true, c3s = true;
  for (int a = 0; a < g.size; ++a) {
    if (g.law(a, e, e) != (a == e)) {
      rep.c1 = false;
      if (!rep.counterexample) rep.counterexample = {a, e, e};
    }
    if (g.law(e, a, e) != (a == e) || g.law(e, e, a) != (a == e)) c1s = false;
  }
  for (int a = 0; a < g.size; ++a) {
    for (int b = 0; b < g.size; ++b) {
      bool ab1 = g.law(a, b, e);
      if (ab1 && !g.law(b, a, e)) {
        rep.c2 = false;
        if (!rep.counterexample) rep.counterexample = {a, b, e};
      }
      bool all_eq = g.law(b, e, a) == ab1 && g.law(e, a, b) == ab1 && g.law(b, a, e) == ab1 &&
                    g.law(a, e, b) == ab1 && g.law(e, b, a) == ab1;
      if (!all_eq) c2s = false;
    }
  }
  for (int a = 0; a < g.size && rep.c3; ++a) {
    for (int b = 0; b < g.size && rep.c3; ++b) {
      for (int c : g.complete(a, b)) {
        if (!g.law(c, a, b) || !g.law(b, c, a)) {
          rep.c3 = false;
          c3s = false;
          if (!rep.counterexample) rep.counterexample = {a, b, c};
          break;
        }
      }
    }
  }
  rep.star_equivalent = (rep.c1 && rep.c2 && rep.c3) == (c1s && c2s && c3s);
  if (!with_optional) return rep;
  bool c4 = true;
  for (int a = 0; a < g.size && c4; ++a) {
    bool has = false;
    for (int b = 0; b < g.size && !has; ++b) has = g.law(a, b, e);
    c4 = has;
  }
  rep.c4 = c4;
  if (g.size > optional_size_limit) return rep;
  std::vector<std::set<int>> inv(g.size);
  for (int a = 0; a < g.size; ++a) inv[a] = inverse_set(g, a);
  bool c5 = true, c6 = true;
  for (int a = 0; a < g.size; ++a) {
    for (int b = 0; b < g.size; ++b) {
      for (int c : g.complete(a, b)) {
        if (!g.law(b, a, c)) c6 = false;
        for (int ia : inv[a])
          for (int ib : inv[b])
            for (int ic : inv[c])
              if (!g.law(ic, ib, ia)) c5 = false;
      }
    }
  }
  rep.c5 = c5;
  rep.c6 = c6;
  return rep;
}

std::set<int> inverse_set(const Crowd& g, int a) {
  std::set<int> out;
  for (int b = 0; b < g.size; ++b)
    if (g.law(a, b, g.identity)) out.insert(b);
  return out;
}

std::set<int> product_set(const Crowd& g, int a, int b) {
  std::set<int> out;
  for (int d : g.complete(a, b)) {
    auto di = inverse_set(g, d);
    out.insert(di.begin(), di.end());
  }
  return out;
}

GroupFromCrowdResult group_from_crowd(const Crowd& g, int exhaustive_limit, int samples) {
  GroupFromCrowdResult res;
  std::vector<std::vector<int>> mul(g.size, std::vector<int>(g.size, -1));
  std::vector<int> inv(g.size, -1);
  for (int a = 0; a < g.size; ++a) {
    auto ia = inverse_set(g, a);
    if (ia.size() != 1) {
      res.witness = {a, -1, -1};
      res.reason = "inverse not a singleton";
      return res;
    }
    inv[a] = *ia.begin();
  }
  for (int a = 0; a < g.size; ++a) {
    for (int b = 0; b < g.size; ++b) {
      auto ab = product_set(g, a, b);
      if (ab.size() != 1) {
        res.witness = {a, b, -1};
        res.reason = "product not a singleton";
        return res;
      }
      mul[a][b] = *ab.begin();
    }
  }
  // condition (2): ad = ec for d in bc, e in ab; then group axioms and the
  // round-trip of the induced law, exhaustive or sampled by size
  std::mt19937 rng(12345);
  auto each_triple = [&](auto&& body) {
    if (g.size <= exhaustive_limit) {
      for (int a = 0; a < g.size; ++a)
        for (int b = 0; b < g.size; ++b)
          for (int c = 0; c < g.size; ++c)
            if (!body(a, b, c)) return false;
      return true;
    }
    for (int s = 0; s < samples; ++s) {
      int a = rng() % g.size, b = rng() % g.size, c = rng() % g.size;
      if (!body(a, b, c)) return false;
    }
    return true;
  };
  if (!each_triple([&](int a, int b, int c) {
        if (mul[a][mul[b][c]] != mul[mul[a][b]][c]) {
          res.witness = {a, b, c};
          res.reason = "ad != ec";
          return false;
        }
        return true;
      }))
    return res;
  for (int a = 0; a < g.size; ++a) {
    if (mul[a][g.identity] != a || mul[g.identity][a] != a || mul[a][inv[a]] != g.identity) {
      res.witness = {a, -1, -1};
      res.reason = "group axioms fail";
      return res;
    }
  }
  if (!each_triple([&](int a, int b, int c) {
        bool in_law = g.law(a, b, c);
        bool via_table = mul[mul[a][b]][c] == g.identity;
        if (in_law != via_table) {
          res.witness = {a, b, c};
          res.reason = "induced law differs from R";
          return false;
        }
        return true;
      }))
    return res;
  res.ok = true;
  res.table = GroupTable{std::move(mul), std::move(inv)};
  return res;
}

}  // namespace funcrowd
