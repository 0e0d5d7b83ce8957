#include "funcrowd/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace funcrowd {

namespace {

// ---- incidence graph utilities ----
// vertices 0..P-1 are points, P..P+L-1 are lines

std::vector<std::vector<int>> adjacency(const IncidenceGeometry& g) {
  std::vector<std::vector<int>> adj(g.num_points + g.num_lines);
  for (auto [p, l] : g.flags) {
    if (p < 0 || p >= g.num_points || l < 0 || l >= g.num_lines)
      throw std::invalid_argument("flag out of range");
    adj[p].push_back(g.num_points + l);
    adj[g.num_points + l].push_back(p);
  }
  return adj;
}

std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

// shortest cycle through src; min over all src is the girth
int girth_from(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1), parent(adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  int best = -1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        q.push(v);
      } else if (v != parent[u]) {
        int len = dist[u] + dist[v] + 1;
        if (best < 0 || len < best) best = len;
      }
    }
  }
  return best;
}

// ---- F_q linear algebra on homogeneous coordinates ----

Elt finv(const Band& F, const Elt& a) {
  for (const auto& u : F.universe())
    if (F.mul(a, u) == F.one()) return u;
  throw std::invalid_argument("not invertible");
}

bool is_zero_vec(const std::vector<Elt>& v) {
  return std::all_of(v.begin(), v.end(), [](const Elt& e) { return e.v == Rat(0); });
}

std::vector<Elt> normalize(const Band& F, std::vector<Elt> v) {
  for (const auto& e : v)
    if (e.v != Rat(0)) {
      Elt s = finv(F, e);
      for (auto& x : v) x = F.mul(x, s);
      return v;
    }
  throw std::invalid_argument("zero vector");
}

std::vector<Elt> lincomb(const Band& F, const Elt& a, const std::vector<Elt>& u, const Elt& b,
                         const std::vector<Elt>& v) {
  std::vector<Elt> out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = F.add(F.mul(a, u[i]), F.mul(b, v[i]));
  return out;
}

std::vector<std::vector<Elt>> projective_points(const Band& F, int dim) {
  std::set<std::vector<Elt>> seen;
  std::vector<std::vector<Elt>> out;
  std::vector<Elt> v(dim, F.zero());
  const auto& U = F.universe();
  std::vector<size_t> odo(dim, 0);
  while (true) {
    for (int i = 0; i < dim; ++i) v[i] = U[odo[i]];
    if (!is_zero_vec(v)) {
      auto n = normalize(F, v);
      if (seen.insert(n).second) out.push_back(n);
    }
    int i = dim - 1;
    while (i >= 0 && ++odo[i] == U.size()) odo[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// all points on the line through two distinct projective points, as sorted
// indices into pts
std::vector<int> line_through(const Band& F, const std::vector<std::vector<Elt>>& pts,
                              const std::map<std::vector<Elt>, int>& index, int i, int j) {
  std::set<int> s;
  for (const auto& a : F.universe())
    for (const auto& b : F.universe()) {
      auto w = lincomb(F, a, pts[i], b, pts[j]);
      if (!is_zero_vec(w)) s.insert(index.at(normalize(F, w)));
    }
  return {s.begin(), s.end()};
}

std::map<std::vector<Elt>, int> index_of(const std::vector<std::vector<Elt>>& pts) {
  std::map<std::vector<Elt>, int> m;
  for (size_t i = 0; i < pts.size(); ++i) m[pts[i]] = (int)i;
  return m;
}

Elt det3(const Band& F, const std::vector<Elt>& a, const std::vector<Elt>& b,
         const std::vector<Elt>& c) {
  auto term = [&](int i, int j, int k) { return F.mul(a[i], F.mul(b[j], c[k])); };
  Elt pos = F.add(F.add(term(0, 1, 2), term(1, 2, 0)), term(2, 0, 1));
  Elt negt = F.add(F.add(term(0, 2, 1), term(1, 0, 2)), term(2, 1, 0));
  return F.add(pos, F.neg(negt));
}

}  // namespace

PolygonCertificate verify_polygon(const IncidenceGeometry& g) {
  if (g.num_points == 0 || g.num_lines == 0)
    throw std::invalid_argument("verify_polygon: empty geometry");
  auto adj = adjacency(g);
  int n_vert = (int)adj.size();
  PolygonCertificate cert;
  int diameter = 0;
  for (int s = 0; s < n_vert; ++s) {
    auto dist = bfs_dist(adj, s);
    for (int d : dist) {
      if (d < 0) throw std::invalid_argument("verify_polygon: disconnected incidence graph");
      diameter = std::max(diameter, d);
    }
    int c = girth_from(adj, s);
    if (c > 0 && (cert.girth == 0 || c < cert.girth)) cert.girth = c;
  }
  cert.diameter = diameter;
  cert.ok = cert.girth > 0 && cert.girth == 2 * diameter;
  cert.gonality = cert.ok ? diameter : 0;
  // per-side degrees
  int pdeg = -1, ldeg = -1;
  bool pconst = true, lconst = true;
  int min_deg = n_vert;
  for (int v = 0; v < n_vert; ++v) {
    int d = (int)adj[v].size();
    min_deg = std::min(min_deg, d);
    if (v < g.num_points) {
      if (pdeg < 0) pdeg = d;
      pconst = pconst && d == pdeg;
    } else {
      if (ldeg < 0) ldeg = d;
      lconst = lconst && d == ldeg;
    }
  }
  cert.has_order = pconst && lconst;
  if (cert.has_order) {
    cert.s = ldeg - 1;
    cert.t = pdeg - 1;
  }
  cert.thick = min_deg >= 3;
  if (cert.ok && cert.thick && cert.gonality != 3 && cert.gonality != 4 && cert.gonality != 6 &&
      cert.gonality != 8)
    cert.warnings.push_back("thick polygon with gonality outside {3,4,6,8}");
  if (!cert.ok)
    cert.warnings.push_back("not a generalized polygon: girth " + std::to_string(cert.girth) +
                            ", diameter " + std::to_string(cert.diameter));
  return cert;
}

IncidenceGeometry ordinary_ngon(int n) {
  if (n < 2) throw std::invalid_argument("ordinary_ngon: n < 2");
  IncidenceGeometry g;
  g.num_points = n;
  g.num_lines = n;
  for (int i = 0; i < n; ++i) {
    g.flags.emplace_back(i, i);
    g.flags.emplace_back((i + 1) % n, i);
  }
  return g;
}

IncidenceGeometry double_geometry(const IncidenceGeometry& g) {
  IncidenceGeometry d;
  d.num_points = g.num_points + g.num_lines;
  d.num_lines = (int)g.flags.size();
  for (int f = 0; f < (int)g.flags.size(); ++f) {
    d.flags.emplace_back(g.flags[f].first, f);
    d.flags.emplace_back(g.num_points + g.flags[f].second, f);
  }
  return d;
}

IncidenceGeometry complete_graph_geometry(int m) {
  if (m < 3) throw std::invalid_argument("complete_graph_geometry: m < 3");
  IncidenceGeometry g;
  g.num_points = m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      g.flags.emplace_back(i, g.num_lines);
      g.flags.emplace_back(j, g.num_lines);
      ++g.num_lines;
    }
  return g;
}

int ProjectiveSpaceModel::point_index(const std::vector<Elt>& coords) const {
  const Band& F = band(BandKind::Fq, q);
  auto n = normalize(F, coords);
  auto it = std::lower_bound(points.begin(), points.end(), n);
  if (it == points.end() || *it != n) throw std::invalid_argument("unknown point");
  return (int)(it - points.begin());
}

IncidenceGeometry ProjectiveSpaceModel::point_line_geometry() const {
  IncidenceGeometry g;
  g.num_points = (int)points.size();
  g.num_lines = (int)lines.size();
  for (int l = 0; l < g.num_lines; ++l)
    for (int p : lines[l]) g.flags.emplace_back(p, l);
  return g;
}

ProjectiveSpaceModel pg_model(int q, int d) {
  if ((q != 2 && q != 3 && q != 4 && q != 5) || (d != 2 && d != 3))
    throw std::invalid_argument("pg_model: unsupported (q, d)");
  const Band& F = band(BandKind::Fq, q);
  ProjectiveSpaceModel m;
  m.q = q;
  m.d = d;
  m.points = projective_points(F, d + 1);
  auto index = index_of(m.points);
  std::set<std::vector<int>> lines;
  for (size_t i = 0; i < m.points.size(); ++i)
    for (size_t j = i + 1; j < m.points.size(); ++j)
      lines.insert(line_through(F, m.points, index, (int)i, (int)j));
  m.lines.assign(lines.begin(), lines.end());
  if (d == 3) {
    // planes = spans of a line and a point off it
    std::set<std::vector<int>> planes;
    for (const auto& l : m.lines)
      for (size_t p = 0; p < m.points.size(); ++p) {
        if (std::binary_search(l.begin(), l.end(), (int)p)) continue;
        std::set<int> span;
        for (int x : l) {
          auto seg = line_through(F, m.points, index, x, (int)p);
          span.insert(seg.begin(), seg.end());
        }
        planes.insert(std::vector<int>(span.begin(), span.end()));
      }
    m.planes.assign(planes.begin(), planes.end());
  }
  return m;
}

std::vector<std::vector<Elt>> conic_oval(int q) {
  const Band& F = band(BandKind::Fq, q);
  std::vector<std::vector<Elt>> out;
  for (const auto& t : F.universe()) out.push_back({F.one(), t, F.mul(t, t)});
  out.push_back({F.zero(), F.zero(), F.one()});
  return out;
}

bool is_oval(int q, const std::vector<std::vector<Elt>>& S) {
  const Band& F = band(BandKind::Fq, q);
  if ((int)S.size() != q + 1) return false;
  std::set<std::vector<Elt>> distinct;
  for (const auto& p : S) distinct.insert(normalize(F, p));
  if ((int)distinct.size() != q + 1) return false;
  for (size_t i = 0; i < S.size(); ++i)
    for (size_t j = i + 1; j < S.size(); ++j)
      for (size_t k = j + 1; k < S.size(); ++k)
        if (det3(F, S[i], S[j], S[k]).v == Rat(0)) return false;
  return true;
}

IncidenceGeometry t2_of_oval(int q, const std::vector<std::vector<Elt>>& O) {
  if (q > 4) throw std::invalid_argument("t2_of_oval: q > 4");
  if (!is_oval(q, O)) throw std::invalid_argument("t2_of_oval: not an oval");
  const Band& F = band(BandKind::Fq, q);
  auto pg2 = pg_model(q, 2);
  auto pg3 = pg_model(q, 3);

  // embed the oval and its P^2 ambient in the hyperplane X0 = 0 of P^3
  auto embed = [&](const std::vector<Elt>& p2) {
    std::vector<Elt> p3{F.zero()};
    p3.insert(p3.end(), p2.begin(), p2.end());
    return pg3.point_index(p3);
  };
  std::vector<int> oval3;  // oval point indices in P^3
  std::set<int> oval_set;
  for (const auto& p : O) {
    oval3.push_back(embed(p));
    oval_set.insert(oval3.back());
  }

  // tangent line at each oval point: the unique line of the hyperplane
  // through it meeting the oval exactly once
  std::vector<std::vector<int>> tangent(O.size());
  for (size_t i = 0; i < O.size(); ++i) {
    int oi2 = pg2.point_index(O[i]);
    std::set<int> oval2;
    for (const auto& p : O) oval2.insert(pg2.point_index(p));
    for (const auto& l : pg2.lines) {
      if (!std::binary_search(l.begin(), l.end(), oi2)) continue;
      int hits = 0;
      for (int p : l) hits += oval2.count(p);
      if (hits == 1) {
        for (int p : l) tangent[i].push_back(embed(pg2.points[p]));
        std::sort(tangent[i].begin(), tangent[i].end());
        break;
      }
    }
    if (tangent[i].empty()) throw std::logic_error("t2_of_oval: tangent not found");
  }

  auto in_hyperplane = [&](int p) { return pg3.points[p][0].v == Rat(0); };

  IncidenceGeometry g;
  // points: 0 = infinity; then affine points of P^3; then tangent planes
  std::vector<int> affine;
  for (size_t p = 0; p < pg3.points.size(); ++p)
    if (!in_hyperplane((int)p)) affine.push_back((int)p);
  std::map<int, int> affine_id;
  g.point_labels.push_back("inf");
  for (int p : affine) {
    affine_id[p] = (int)g.point_labels.size();
    g.point_labels.push_back("aff" + std::to_string(p));
  }
  std::vector<std::pair<int, size_t>> tangent_planes;  // (plane idx, oval idx)
  std::map<int, int> plane_id;
  for (int pi = 0; pi < (int)pg3.planes.size(); ++pi) {
    const auto& pl = pg3.planes[pi];
    bool has_affine = std::any_of(pl.begin(), pl.end(), [&](int p) { return !in_hyperplane(p); });
    if (!has_affine) continue;
    for (size_t oi = 0; oi < O.size(); ++oi)
      if (std::includes(pl.begin(), pl.end(), tangent[oi].begin(), tangent[oi].end())) {
        plane_id[pi] = (int)g.point_labels.size();
        tangent_planes.emplace_back(pi, oi);
        g.point_labels.push_back("pl" + std::to_string(pi));
        break;
      }
  }
  g.num_points = (int)g.point_labels.size();

  // lines: the oval points, then the lines of P^3 meeting the hyperplane in
  // exactly one point which lies on the oval
  for (size_t oi = 0; oi < O.size(); ++oi) {
    g.line_labels.push_back("oval" + std::to_string(oi));
    g.flags.emplace_back(0, g.num_lines);
    for (size_t ti = 0; ti < tangent_planes.size(); ++ti)
      if (tangent_planes[ti].second == oi)
        g.flags.emplace_back(plane_id.at(tangent_planes[ti].first), g.num_lines);
    ++g.num_lines;
  }
  for (const auto& l : pg3.lines) {
    std::vector<int> hpts;
    for (int p : l)
      if (in_hyperplane(p)) hpts.push_back(p);
    if (hpts.size() != 1 || !oval_set.count(hpts[0])) continue;
    for (int p : l)
      if (!in_hyperplane(p)) g.flags.emplace_back(affine_id.at(p), g.num_lines);
    for (const auto& [pi, oi] : tangent_planes)
      if (std::includes(pg3.planes[pi].begin(), pg3.planes[pi].end(), l.begin(), l.end()))
        g.flags.emplace_back(plane_id.at(pi), g.num_lines);
    g.line_labels.push_back("sec");
    ++g.num_lines;
  }
  return g;
}

IncidenceGeometry q4q_quadric(int q) {
  if (q != 2 && q != 3) throw std::invalid_argument("q4q_quadric: q not in {2,3}");
  const Band& F = band(BandKind::Fq, q);
  auto all = projective_points(F, 5);
  auto on_quadric = [&](const std::vector<Elt>& x) {
    Elt s = F.add(F.add(F.mul(x[0], x[1]), F.mul(x[2], x[3])), F.mul(x[4], x[4]));
    return s.v == Rat(0);
  };
  std::vector<std::vector<Elt>> qpts;
  for (const auto& p : all)
    if (on_quadric(p)) qpts.push_back(p);
  std::map<std::vector<Elt>, int> qindex = index_of(qpts);
  std::set<std::vector<int>> qlines;
  for (size_t i = 0; i < qpts.size(); ++i)
    for (size_t j = i + 1; j < qpts.size(); ++j) {
      std::set<int> line;
      bool inside = true;
      for (const auto& a : F.universe())
        for (const auto& b : F.universe()) {
          auto w = lincomb(F, a, qpts[i], b, qpts[j]);
          if (is_zero_vec(w)) continue;
          auto nw = normalize(F, w);
          if (!on_quadric(nw)) {
            inside = false;
            break;
          }
          line.insert(qindex.at(nw));
        }
      if (inside) qlines.insert(std::vector<int>(line.begin(), line.end()));
    }
  IncidenceGeometry g;
  g.num_points = (int)qpts.size();
  for (const auto& l : qlines) {
    for (int p : l) g.flags.emplace_back(p, g.num_lines);
    ++g.num_lines;
  }
  return g;
}

bool incidence_isomorphic(const IncidenceGeometry& a, const IncidenceGeometry& b) {
  if (a.num_points != b.num_points || a.num_lines != b.num_lines ||
      a.flags.size() != b.flags.size())
    return false;
  auto adja = adjacency(a), adjb = adjacency(b);
  int n = (int)adja.size();
  std::vector<std::set<int>> sa(n), sb(n);
  for (int v = 0; v < n; ++v) {
    sa[v] = {adja[v].begin(), adja[v].end()};
    sb[v] = {adjb[v].begin(), adjb[v].end()};
  }
  // BFS order on a for tight pruning
  std::vector<int> order = [&] {
    std::vector<int> out;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::queue<int> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        out.push_back(u);
        for (int v : adja[u])
          if (!seen[v]) {
            seen[v] = true;
            q.push(v);
          }
      }
    }
    return out;
  }();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> rec = [&](size_t k) {
    if (k == order.size()) return true;
    int v = order[k];
    bool v_is_point = v < a.num_points;
    for (int c = 0; c < n; ++c) {
      if (used[c] || (c < b.num_points) != v_is_point) continue;
      if (sb[c].size() != sa[v].size()) continue;
      bool ok = true;
      for (int u : adja[v])
        if (map[u] != -1 && !sb[c].count(map[u])) {
          ok = false;
          break;
        }
      if (ok) {
        // mapped neighbors of c must be neighbors of v
        for (size_t k2 = 0; k2 < k && ok; ++k2) {
          int w = order[k2];
          if (sb[c].count(map[w]) != sa[v].count(w)) ok = false;
        }
      }
      if (!ok) continue;
      map[v] = c;
      used[c] = true;
      if (rec(k + 1)) return true;
      map[v] = -1;
      used[c] = false;
    }
    return false;
  };
  return rec(0);
}

bool pairs_in_ordinary_subgon(const IncidenceGeometry& g, int n) {
  auto adj = adjacency(g);
  int nv = (int)adj.size();
  int len = 2 * n;
  std::vector<std::vector<bool>> covered(nv, std::vector<bool>(nv, false));
  std::vector<int> path;
  std::vector<bool> on_path(nv, false);
  std::function<void(int, int)> dfs = [&](int start, int u) {
    if ((int)path.size() == len) {
      for (int w : adj[u])
        if (w == start)
          for (int x : path)
            for (int y : path) covered[x][y] = true;
      return;
    }
    for (int w : adj[u]) {
      if (on_path[w] || w < start) continue;
      on_path[w] = true;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (int s = 0; s < nv; ++s) {
    path = {s};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    dfs(s, s);
  }
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nv; ++y)
      if (!covered[x][y]) return false;
  return true;
}

}  // namespace funcrowd
