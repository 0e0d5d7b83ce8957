#include "funcrowd/activity.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace funcrowd {

namespace {

std::vector<int> mask_list(uint32_t m) {
  std::vector<int> out;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

// all (I,J)-minors of a for r-subsets, indexed by colex position
std::vector<std::vector<FormalSum>> all_minors(const BandMatrix& a, int r, bool eps_signed) {
  auto masks = subsets_colex(a.n, r);
  std::vector<std::vector<FormalSum>> out(masks.size(), std::vector<FormalSum>(masks.size()));
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = 0; j < masks.size(); ++j)
      out[i][j] = minor_formal(a, masks[i], masks[j], eps_signed);
  return out;
}

bool stage_member(const std::vector<std::vector<FormalSum>>& minors, const PluckerFamily& x,
                  const PluckerFamily& y, const Elt& w) {
  const Band& B = *x.b;
  size_t ncoords = x.coords.size();
  for (size_t i = 0; i < ncoords; ++i) {
    FormalSum s;
    for (size_t j = 0; j < ncoords; ++j)
      for (const auto& t : minors[i][j].terms()) s.add(B.mul(t, x.coords[j]));
    s.add(B.neg(B.mul(w, y.coords[i])));
    if (!B.is_null(s)) return false;
  }
  return true;
}

}  // namespace

FormalSum minor_formal(const BandMatrix& a, uint32_t I, uint32_t J, bool eps_signed) {
  auto rows = mask_list(I), cols = mask_list(J);
  if (rows.size() != cols.size()) throw std::invalid_argument("minor_formal: rank mismatch");
  int r = (int)rows.size();
  const Band& B = *a.b;
  bool flip = eps_signed && ((eps_shift(I) + eps_shift(J)) % 2 != 0);
  FormalSum s;
  std::vector<int> p(r);
  for (int i = 0; i < r; ++i) p[i] = i;
  do {
    int sign = 1;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (p[i] > p[j]) sign = -sign;
    Elt m = B.one();
    for (int i = 0; i < r; ++i) m = B.mul(m, a.at(rows[i] - 1, cols[p[i]] - 1));
    s.add((sign > 0) != flip ? m : B.neg(m));
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

bool activity_member(const BandMatrix& a, const PluckerFamily& x, const PluckerFamily& y,
                     bool eps_signed) {
  if (x.b != y.b || x.b != a.b || x.n != a.n || x.r != y.r || x.n != y.n)
    throw std::invalid_argument("activity_member: mismatched inputs");
  auto minors = all_minors(a, x.r, eps_signed);
  for (const auto& w : x.b->units())
    if (stage_member(minors, x, y, w)) return true;
  return false;
}

bool activity_member(const BandMatrix& a, const FlagPoint& x, const FlagPoint& y) {
  if (x.type() != y.type()) return false;
  for (size_t s = 0; s < x.stages.size(); ++s)
    if (!activity_member(a, x.stages[s], y.stages[s])) return false;
  return true;
}

std::vector<PluckerFamily> orbit(const BandMatrix& a, const PluckerFamily& x) {
  std::vector<PluckerFamily> out;
  for (const auto& y : enumerate_points(Functor::gr(x.r, x.n), *x.b))
    if (activity_member(a, x, y)) out.push_back(y);
  return out;
}

std::vector<FlagPoint> orbit(const BandMatrix& a, const FlagPoint& x) {
  std::vector<FlagPoint> out;
  for (const auto& y : enumerate_flags(x.type(), x.stages[0].n, *x.stages[0].b))
    if (activity_member(a, x, y)) out.push_back(y);
  return out;
}

ActivityPropertyReport check_activity_properties(const Band& B, int n, const Functor& f,
                                                 int full_size_limit) {
  ActivityPropertyReport rep;
  auto sl = build_sl(B, n);
  auto X = enumerate_points(f, B);
  int nx = (int)X.size(), ng = sl.crowd.size;
  auto member = [&](int a, int x, int y) {
    return activity_member(sl.elements[a], X[x], X[y]);
  };
  rep.a1 = true;
  int id = sl.crowd.identity;
  for (int x = 0; x < nx && rep.a1; ++x)
    for (int y = 0; y < nx; ++y)
      if (member(id, x, y) != (x == y)) {
        rep.a1 = false;
        rep.witness = "A1: " + point_to_string(X[x]) + " -> " + point_to_string(X[y]);
        break;
      }
  if (ng > full_size_limit) return rep;
  // cache the full membership relation
  std::vector<std::vector<std::vector<bool>>> T(
      ng, std::vector<std::vector<bool>>(nx, std::vector<bool>(nx)));
  for (int a = 0; a < ng; ++a)
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < nx; ++y) T[a][x][y] = member(a, x, y);
  bool a2 = true;
  for (int a = 0; a < ng && a2; ++a)
    for (int b = 0; b < ng && a2; ++b) {
      if (!sl.crowd.law(a, b, id)) continue;
      for (int x = 0; x < nx && a2; ++x)
        for (int y = 0; y < nx; ++y)
          if (T[a][x][y] != T[b][y][x]) {
            a2 = false;
            rep.witness = "A2: a=" + sl.crowd.labels[a] + " b=" + sl.crowd.labels[b];
            break;
          }
    }
  rep.a2 = a2;
  bool a3 = true;
  for (int a = 0; a < ng && a3; ++a)
    for (int b = 0; b < ng && a3; ++b)
      for (int c : sl.crowd.complete(a, b)) {
        for (int x = 0; x < nx; ++x) {
          // x must lie in a.(b.(c.x))
          bool hit = false;
          for (int u = 0; u < nx && !hit; ++u)
            for (int v = 0; v < nx && !hit; ++v)
              hit = T[c][x][u] && T[b][u][v] && T[a][v][x];
          if (!hit) {
            a3 = false;
            rep.witness = "A3: a=" + sl.crowd.labels[a] + " b=" + sl.crowd.labels[b] +
                          " c=" + sl.crowd.labels[c] + " x=" + point_to_string(X[x]);
            break;
          }
        }
        if (!a3) break;
      }
  rep.a3 = a3;
  return rep;
}

bool permutation_orbits_singleton(const Band& B, int n, const Functor& f) {
  auto X = enumerate_points(f, B);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  bool trivial_units = B.units().size() == 1;
  do {
    BandMatrix a{&B, n, std::vector<Elt>(n * n, B.zero())};
    for (int j = 0; j < n; ++j) a.at(perm[j], j) = B.one();
    for (const auto& x : X) {
      auto orb = orbit(a, x);
      if (orb.size() != 1) return false;
      // supports must permute: sigma(I) is in the image support iff I is in
      // the source support
      auto masks = subsets_colex(x.n, x.r);
      PluckerFamily want = x;
      for (size_t i = 0; i < masks.size(); ++i) {
        uint32_t img = 0;
        for (int e : mask_list(masks[i])) img |= 1u << perm[e - 1];
        size_t pos = std::find(masks.begin(), masks.end(), img) - masks.begin();
        want.coords[pos] = x.coords[i];
      }
      auto support = [](const PluckerFamily& p) {
        std::vector<bool> s;
        for (const auto& c : p.coords) s.push_back(c.v != Rat(0));
        return s;
      };
      if (support(orb[0]) != support(want)) return false;
      if (trivial_units && !(orb[0] == canonicalize(want))) return false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

SetActivity left_mult_activity(const Crowd& g) {
  SetActivity act;
  act.g_size = g.size;
  act.x_size = g.size;
  auto shared = std::make_shared<Crowd>(g);
  act.member = [shared](int a, int b, int c) {
    for (int d : inverse_set(*shared, c))
      if (shared->law(a, b, d)) return true;
    return false;
  };
  return act;
}

GroupActionResult recognize_group_action(const Crowd& g, const SetActivity& act) {
  GroupActionResult res;
  auto grp = group_from_crowd(g);
  if (!grp.ok) {
    res.reason = "not a group: " + grp.reason;
    return res;
  }
  std::vector<std::vector<int>> theta(g.size, std::vector<int>(act.x_size, -1));
  for (int a = 0; a < g.size; ++a) {
    for (int x = 0; x < act.x_size; ++x) {
      for (int y = 0; y < act.x_size; ++y) {
        if (!act.member(a, x, y)) continue;
        if (theta[a][x] != -1) {
          res.reason = "orbit not a singleton";
          return res;
        }
        theta[a][x] = y;
      }
      if (theta[a][x] == -1) {
        res.reason = "empty orbit";
        return res;
      }
    }
  }
  for (int x = 0; x < act.x_size; ++x)
    if (theta[g.identity][x] != x) {
      res.reason = "A1 fails";
      return res;
    }
  // A3 on the crowd law, then compatibility with the group table
  for (int a = 0; a < g.size; ++a)
    for (int b = 0; b < g.size; ++b)
      for (int c : g.complete(a, b))
        for (int x = 0; x < act.x_size; ++x)
          if (theta[a][theta[b][theta[c][x]]] != x) {
            res.reason = "A3 fails";
            return res;
          }
  for (int a = 0; a < g.size; ++a)
    for (int b = 0; b < g.size; ++b)
      for (int x = 0; x < act.x_size; ++x)
        if (theta[grp.table.mul[a][b]][x] != theta[a][theta[b][x]]) {
          res.reason = "not compatible with the group law";
          return res;
        }
  res.ok = true;
  res.theta = std::move(theta);
  return res;
}

}  // namespace funcrowd
