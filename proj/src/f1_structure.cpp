#include "funcrowd/f1_structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace funcrowd {

namespace {

// ---- incidence index on a projective space model ----

struct ModelIndex {
  std::vector<std::vector<int>> point_lines;
  std::vector<std::vector<int>> pair_line;      // -1 when equal
  std::vector<std::vector<int>> planes_with_line;
  std::vector<std::vector<int>> lines_in_plane;
};

const ModelIndex& model_index(const ProjectiveSpaceModel& m) {
  static std::map<const ProjectiveSpaceModel*, ModelIndex> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&m);
  if (it != cache.end()) return it->second;
  ModelIndex ix;
  int np = (int)m.points.size();
  ix.point_lines.resize(np);
  ix.pair_line.assign(np, std::vector<int>(np, -1));
  for (int l = 0; l < (int)m.lines.size(); ++l) {
    for (int p : m.lines[l]) ix.point_lines[p].push_back(l);
    for (int p : m.lines[l])
      for (int q : m.lines[l])
        if (p != q) ix.pair_line[p][q] = l;
  }
  ix.planes_with_line.resize(m.lines.size());
  ix.lines_in_plane.resize(m.planes.size());
  for (int pi = 0; pi < (int)m.planes.size(); ++pi)
    for (int l = 0; l < (int)m.lines.size(); ++l)
      if (std::includes(m.planes[pi].begin(), m.planes[pi].end(), m.lines[l].begin(),
                        m.lines[l].end())) {
        ix.planes_with_line[l].push_back(pi);
        ix.lines_in_plane[pi].push_back(l);
      }
  return cache[&m] = std::move(ix);
}

int line_class_mask(const ProjectiveSpaceModel& m, const std::vector<int>& classes, int l) {
  int mask = 0;
  for (int p : m.lines[l]) mask |= 1 << classes[p];
  return mask;
}

std::vector<std::pair<int, int>> all_edges(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) e.emplace_back(i, j);
  return e;
}

// match the uncovered edges to distinct monochromatic lines
bool cover_edges(const std::vector<std::pair<int, int>>& need,
                 const std::vector<std::vector<int>>& candidates, std::vector<int>& pick) {
  pick.assign(need.size(), -1);
  std::set<int> used;
  std::function<bool(size_t)> rec = [&](size_t k) {
    if (k == need.size()) return true;
    for (int l : candidates[k]) {
      if (used.count(l)) continue;
      used.insert(l);
      pick[k] = l;
      if (rec(k + 1)) return true;
      used.erase(l);
      pick[k] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

ValidationResult validate_structure(const F1Structure& s) {
  ValidationResult res;
  const auto& m = *s.space;
  if ((int)s.point_classes.size() != (int)m.points.size())
    throw std::invalid_argument("validate_structure: class vector size mismatch");
  std::vector<int> sizes(s.m, 0);
  for (int c : s.point_classes) {
    if (c < 0 || c >= s.m) throw std::invalid_argument("validate_structure: class out of range");
    sizes[c]++;
  }
  for (int c = 0; c < s.m; ++c)
    if (sizes[c] == 0) {
      res.diagnostic = "EmptyClass(" + std::to_string(c) + ")";
      return res;
    }
  std::vector<int> masks(m.lines.size());
  for (int l = 0; l < (int)m.lines.size(); ++l) {
    masks[l] = line_class_mask(m, s.point_classes, l);
    if (std::popcount((unsigned)masks[l]) > 2) {
      res.diagnostic = "LineMeetsThreeClasses(" + std::to_string(l) + ")";
      return res;
    }
  }
  auto edges = all_edges(s.m);
  if (!s.line_labels.empty()) {
    std::set<std::pair<int, int>> covered;
    for (int l = 0; l < (int)m.lines.size(); ++l) {
      auto it = s.line_labels.find(l);
      if (it == s.line_labels.end()) {
        res.diagnostic = "MissingLabel(" + std::to_string(l) + ")";
        return res;
      }
      auto [u, v] = it->second;
      if (u < 0 || v < 0 || u >= s.m || v >= s.m || u >= v) {
        res.diagnostic = "BadLabel(" + std::to_string(l) + ")";
        return res;
      }
      if ((masks[l] & ~((1 << u) | (1 << v))) != 0) {
        res.diagnostic = "LabelMismatch(" + std::to_string(l) + ")";
        return res;
      }
      covered.insert(it->second);
    }
    for (auto e : edges)
      if (!covered.count(e)) {
        res.diagnostic =
            "EdgeUncovered(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
        return res;
      }
    res.ok = true;
    res.labels = s.line_labels;
    return res;
  }
  // completion: 2-class lines are forced
  std::set<std::pair<int, int>> covered;
  for (int l = 0; l < (int)m.lines.size(); ++l)
    if (std::popcount((unsigned)masks[l]) == 2) {
      int u = std::countr_zero((unsigned)masks[l]);
      int v = std::countr_zero((unsigned)(masks[l] & (masks[l] - 1)));
      res.labels[l] = {std::min(u, v), std::max(u, v)};
      covered.insert(res.labels[l]);
    }
  std::vector<std::pair<int, int>> need;
  for (auto e : edges)
    if (!covered.count(e)) need.push_back(e);
  std::vector<std::vector<int>> candidates(need.size());
  for (size_t k = 0; k < need.size(); ++k)
    for (int l = 0; l < (int)m.lines.size(); ++l)
      if (std::popcount((unsigned)masks[l]) == 1) {
        int c = std::countr_zero((unsigned)masks[l]);
        if (c == need[k].first || c == need[k].second) candidates[k].push_back(l);
      }
  std::vector<int> pick;
  if (!cover_edges(need, candidates, pick)) {
    res.diagnostic = "EdgeUncovered(" + std::to_string(need[0].first) + "," +
                     std::to_string(need[0].second) + ")";
    return res;
  }
  for (size_t k = 0; k < need.size(); ++k) res.labels[pick[k]] = need[k];
  // remaining monochromatic lines take any incident edge
  for (int l = 0; l < (int)m.lines.size(); ++l)
    if (!res.labels.count(l)) {
      int c = std::countr_zero((unsigned)masks[l]);
      res.labels[l] = {std::min(c, (c + 1) % s.m), std::max(c, (c + 1) % s.m)};
    }
  res.ok = true;
  return res;
}

std::string plane_type_name(PlaneTypeKind k) {
  switch (k) {
    case PlaneTypeKind::I: return "I";
    case PlaneTypeKind::Itilde: return "I~";
    case PlaneTypeKind::II: return "II";
    case PlaneTypeKind::IItilde: return "II~";
    default: return "None";
  }
}

namespace {

// Type I relative to L: L carries exactly the two classes other than the
// single class filling the complement of L.
bool is_type_I_at(const F1Structure& s, int L) {
  const auto& m = *s.space;
  int off_mask = 0, on_mask = 0;
  for (int p = 0; p < (int)m.points.size(); ++p) {
    bool on = std::binary_search(m.lines[L].begin(), m.lines[L].end(), p);
    (on ? on_mask : off_mask) |= 1 << s.point_classes[p];
  }
  return std::popcount((unsigned)off_mask) == 1 && std::popcount((unsigned)on_mask) == 2 &&
         (on_mask & off_mask) == 0;
}

// pencil structure: a point whose class is a singleton and whose pencil
// splits into two monochromatic sides with at least min_side lines each
int pencil_point(const F1Structure& s, int min_side) {
  const auto& m = *s.space;
  const auto& ix = model_index(m);
  std::vector<int> sizes(s.m, 0);
  for (int c : s.point_classes) sizes[c]++;
  for (int a = 0; a < (int)m.points.size(); ++a) {
    if (sizes[s.point_classes[a]] != 1) continue;
    std::map<int, int> side_count;
    bool ok = true;
    for (int l : ix.point_lines[a]) {
      int cls = -1;
      for (int p : m.lines[l]) {
        if (p == a) continue;
        if (cls < 0)
          cls = s.point_classes[p];
        else if (cls != s.point_classes[p]) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      side_count[cls]++;
    }
    if (!ok || side_count.size() != 2) continue;
    bool big = true;
    for (auto [cls, n] : side_count) big = big && n >= min_side;
    if (big) return a;
  }
  return -1;
}

}  // namespace

PlaneType classify_plane_type(const F1Structure& s, int U) {
  if (s.m != 3 || s.space->d != 2)
    throw std::invalid_argument("classify_plane_type: not a plane structure");
  if (!validate_structure(s).ok)
    throw std::invalid_argument("classify_plane_type: invalid structure");
  PlaneType t;
  t.base_line = U;
  if (is_type_I_at(s, U)) {
    t.kind = PlaneTypeKind::I;
    t.special_line = U;
    return t;
  }
  for (int V = 0; V < (int)s.space->lines.size(); ++V)
    if (V != U && is_type_I_at(s, V)) {
      t.kind = PlaneTypeKind::Itilde;
      t.special_line = V;
      return t;
    }
  int a = pencil_point(s, 2);
  if (a >= 0) {
    t.special_point = a;
    bool on_U = std::binary_search(s.space->lines[U].begin(), s.space->lines[U].end(), a);
    t.kind = on_U ? PlaneTypeKind::II : PlaneTypeKind::IItilde;
    return t;
  }
  return t;
}

std::vector<int> canonical_relabel(const std::vector<int>& classes, int m) {
  std::vector<int> rename(m, -1);
  int next = 0;
  std::vector<int> out(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) {
    if (rename[classes[i]] < 0) rename[classes[i]] = next++;
    out[i] = rename[classes[i]];
  }
  return out;
}

// ---- exhaustive search ----

namespace {

std::vector<int> search_order(const ProjectiveSpaceModel& m) {
  const auto& ix = model_index(m);
  int np = (int)m.points.size();
  std::vector<bool> picked(np, false);
  std::vector<int> order;
  order.push_back(0);
  picked[0] = true;
  while ((int)order.size() < np) {
    int best = -1, best_score = -1;
    for (int p = 0; p < np; ++p) {
      if (picked[p]) continue;
      int score = 0;
      for (int l : ix.point_lines[p]) {
        int k = 0;
        for (int q : m.lines[l]) k += picked[q];
        score += k * k;
      }
      if (score > best_score) {
        best_score = score;
        best = p;
      }
    }
    order.push_back(best);
    picked[best] = true;
  }
  return order;
}

struct Searcher {
  const ProjectiveSpaceModel* model;
  int m;
  std::vector<int> order;

  // enumerate canonical class assignments obeying the two-classes-per-line
  // constraint, starting from a fixed prefix (in order-space)
  void dfs(std::vector<int>& cls, std::vector<int>& line_mask, int depth, int used,
           int stop_depth, const std::function<void(const std::vector<int>&, int)>& leaf) const {
    if (depth == stop_depth) {
      leaf(cls, used);
      return;
    }
    const auto& ix = model_index(*model);
    int p = order[depth];
    int max_c = std::min(used, m - 1);
    for (int c = 0; c <= max_c; ++c) {
      bool ok = true;
      for (int l : ix.point_lines[p])
        if (std::popcount((unsigned)(line_mask[l] | (1 << c))) > 2) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<int> saved;
      for (int l : ix.point_lines[p]) {
        saved.push_back(line_mask[l]);
        line_mask[l] |= 1 << c;
      }
      cls[p] = c;
      dfs(cls, line_mask, depth + 1, used + (c == used), stop_depth, leaf);
      cls[p] = -1;
      for (size_t k = 0; k < ix.point_lines[p].size(); ++k)
        line_mask[ix.point_lines[p][k]] = saved[k];
    }
  }

  // all complete assignments extending the canonical search, sharded for
  // deterministic parallel processing
  std::vector<std::vector<int>> run(int jobs) const {
    int np = (int)model->points.size();
    int prefix_len = std::min(np, 6);
    // collect shards: canonical prefixes that survive pruning
    std::vector<std::pair<std::vector<int>, int>> shards;  // (classes, used)
    {
      std::vector<int> cls(np, -1), line_mask(model->lines.size(), 0);
      dfs(cls, line_mask, 0, 0, prefix_len,
          [&](const std::vector<int>& c, int used) { shards.emplace_back(c, used); });
    }
    std::vector<std::vector<std::vector<int>>> results(shards.size());
    auto work = [&](int tid) {
      for (size_t si = tid; si < shards.size(); si += jobs) {
        std::vector<int> cls = shards[si].first;
        std::vector<int> line_mask(model->lines.size(), 0);
        const auto& ix = model_index(*model);
        for (int p = 0; p < np; ++p)
          if (cls[p] >= 0)
            for (int l : ix.point_lines[p]) line_mask[l] |= 1 << cls[p];
        dfs(cls, line_mask, prefix_len, shards[si].second, np,
            [&](const std::vector<int>& c, int used) {
              if (used == m) results[si].push_back(c);
            });
      }
    };
    if (jobs <= 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t);
      for (auto& t : threads) t.join();
    }
    std::vector<std::vector<int>> out;
    for (auto& r : results)
      for (auto& c : r) out.push_back(canonical_relabel(c, m));
    return out;
  }
};

}  // namespace

const ProjectiveSpaceModel& plane_model(int q) {
  static std::map<int, ProjectiveSpaceModel> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, pg_model(q, 2)).first;
  return it->second;
}

const ProjectiveSpaceModel& p3_model(int q) {
  static std::map<int, ProjectiveSpaceModel> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, pg_model(q, 3)).first;
  return it->second;
}

PlaneReport enumerate_plane_epis(int q) {
  if (q != 2 && q != 3) throw std::invalid_argument("enumerate_plane_epis: q not in {2,3}");
  const auto& model = plane_model(q);
  model_index(model);
  Searcher sr{&model, 3, search_order(model)};
  PlaneReport rep;
  rep.q = q;
  for (auto& cls : sr.run(1)) {
    F1Structure s{&model, 3, cls, {}};
    if (!validate_structure(s).ok) continue;
    rep.valid++;
    bool a = false;
    for (int L = 0; L < (int)model.lines.size() && !a; ++L) a = is_type_I_at(s, L);
    bool b = pencil_point(s, 1) >= 0;
    if (a) rep.class_a++;
    if (b) rep.class_b++;
    if (a && b) rep.both++;
    if (!a && !b) rep.unmatched++;
    rep.structures.push_back(cls);
  }
  return rep;
}

// ---- case matching on P^3 ----

namespace {

bool on_line(const ProjectiveSpaceModel& m, int l, int p) {
  return std::binary_search(m.lines[l].begin(), m.lines[l].end(), p);
}

std::optional<CaseMatch> match_E(const F1Structure& s, int U, int X, int Y, int Z, int W) {
  const auto& m = *s.space;
  const auto& ix = model_index(m);
  int pi_c = -1;
  for (int pi : ix.planes_with_line[U]) {
    bool all_W = true;
    for (int p : m.planes[pi])
      if (!on_line(m, U, p) && s.point_classes[p] != W) all_W = false;
    if (all_W) continue;
    if (pi_c >= 0) return std::nullopt;  // two non-D planes
    // the exceptional plane: exactly one point outside X and Y, in class Z
    int c_point = -1;
    for (int p : m.planes[pi]) {
      if (on_line(m, U, p)) continue;
      int cl = s.point_classes[p];
      if (cl == X || cl == Y) continue;
      if (cl != Z || c_point >= 0) return std::nullopt;
      c_point = p;
    }
    if (c_point < 0) return std::nullopt;
    pi_c = pi;
  }
  if (pi_c < 0) return std::nullopt;
  CaseMatch cm;
  cm.c = P3Case::E;
  cm.U = U;
  cm.pi_c = pi_c;
  return cm;
}

std::optional<CaseMatch> match_F(const F1Structure& s, int U, int X, int Y, int Z, int W) {
  const auto& m = *s.space;
  const auto& ix = model_index(m);
  // the transversal: Z and W together must form a line disjoint from U
  std::vector<int> zw;
  for (int p = 0; p < (int)m.points.size(); ++p)
    if (s.point_classes[p] == Z || s.point_classes[p] == W) zw.push_back(p);
  int u_hat = -1;
  if (zw.size() >= 2) u_hat = ix.pair_line[zw[0]][zw[1]];
  if (u_hat < 0 || m.lines[u_hat] != zw) return std::nullopt;
  for (int p : zw)
    if (on_line(m, U, p)) return std::nullopt;
  bool hasZ = false, hasW = false;
  for (int p : zw) {
    hasZ = hasZ || s.point_classes[p] == Z;
    hasW = hasW || s.point_classes[p] == W;
  }
  if (!hasZ || !hasW) return std::nullopt;
  // transversal uniqueness and class inheritance
  for (int p = 0; p < (int)m.points.size(); ++p) {
    if (on_line(m, U, p) || on_line(m, u_hat, p)) continue;
    int count = 0;
    for (int l : ix.point_lines[p]) {
      bool meets_U = false, meets_hat = false;
      for (int x : m.lines[l]) {
        meets_U = meets_U || on_line(m, U, x);
        meets_hat = meets_hat || on_line(m, u_hat, x);
      }
      if (meets_U && meets_hat) ++count;
    }
    if (count != 1) return std::nullopt;
  }
  for (int l = 0; l < (int)m.lines.size(); ++l) {
    int upt = -1, hatpt = -1;
    for (int x : m.lines[l]) {
      if (on_line(m, U, x)) upt = x;
      if (on_line(m, u_hat, x)) hatpt = x;
    }
    if (upt < 0 || hatpt < 0 || l == U || l == u_hat) continue;
    for (int x : m.lines[l])
      if (x != hatpt && s.point_classes[x] != s.point_classes[upt]) return std::nullopt;
  }
  CaseMatch cm;
  cm.c = P3Case::F;
  cm.U = U;
  cm.u_hat = u_hat;
  return cm;
}

}  // namespace

std::optional<CaseMatch> try_match_case(const F1Structure& s, P3Case which) {
  const auto& m = *s.space;
  for (int U = 0; U < (int)m.lines.size(); ++U) {
    int on_mask = 0;
    std::vector<int> on_count(s.m, 0);
    for (int p : m.lines[U]) {
      on_mask |= 1 << s.point_classes[p];
      on_count[s.point_classes[p]]++;
    }
    if (std::popcount((unsigned)on_mask) != 2) continue;
    int X = std::countr_zero((unsigned)on_mask);
    int Y = std::countr_zero((unsigned)(on_mask & (on_mask - 1)));
    std::vector<int> rest;
    for (int c = 0; c < s.m; ++c)
      if (c != X && c != Y) rest.push_back(c);
    for (int flip = 0; flip < 2; ++flip) {
      int Z = rest[flip], W = rest[1 - flip];
      auto r = which == P3Case::E ? match_E(s, U, X, Y, Z, W) : match_F(s, U, X, Y, Z, W);
      if (r) {
        r->strong = on_count[X] >= 2 && on_count[Y] >= 2;
        return r;
      }
    }
  }
  return std::nullopt;
}

CaseMatch match_case(const F1Structure& s) {
  if (auto e = try_match_case(s, P3Case::E)) return *e;
  if (auto f = try_match_case(s, P3Case::F)) return *f;
  return CaseMatch{};
}

P3Report enumerate_p3_epis(int q, int jobs) {
  if (q != 2) throw std::invalid_argument("enumerate_p3_epis: only q = 2 is exhaustive");
  if (jobs < 1) jobs = 1;
  const auto& model = p3_model(q);
  model_index(model);
  Searcher sr{&model, 4, search_order(model)};
  P3Report rep;
  rep.q = q;
  for (auto& cls : sr.run(jobs)) {
    F1Structure s{&model, 4, cls, {}};
    if (!validate_structure(s).ok) continue;
    rep.valid++;
    bool e = try_match_case(s, P3Case::E).has_value();
    bool f = try_match_case(s, P3Case::F).has_value();
    if (e) rep.case_E++;
    if (f) rep.case_F++;
    if (e && f) rep.both++;
    if (!e && !f) {
      rep.unmatched++;
      rep.unmatched_structures.push_back(cls);
    }
    rep.structures.push_back(cls);
  }
  return rep;
}

bool dimension_check(const F1Structure& s) {
  const auto& m = *s.space;
  auto val = validate_structure(s);
  if (!val.ok) return false;
  for (int l = 0; l < (int)m.lines.size(); ++l) {
    int mask = line_class_mask(m, s.point_classes, l);
    int n = std::popcount((unsigned)mask);
    if (n > 2) return false;
    if (n < 2 && !val.labels.count(l)) return false;
  }
  for (const auto& plane : m.planes) {
    std::set<int> cl;
    for (int p : plane) cl.insert(s.point_classes[p]);
    if ((int)cl.size() != 3) return false;
  }
  std::set<int> all(s.point_classes.begin(), s.point_classes.end());
  return (int)all.size() == s.m;
}

std::set<std::vector<int>> generate_case_E_templates(const ProjectiveSpaceModel& space) {
  const auto& ix = model_index(space);
  std::set<std::vector<int>> out;
  int np = (int)space.points.size();
  for (int U = 0; U < (int)space.lines.size(); ++U) {
    const auto& upts = space.lines[U];
    int k = (int)upts.size();
    for (int amask = 1; amask < (1 << k) - 1; ++amask) {
      for (int pi : ix.planes_with_line[U]) {
        for (int c : space.planes[pi]) {
          if (on_line(space, U, c)) continue;
          std::vector<int> cls(np, 3);  // default: class D
          for (int i = 0; i < k; ++i) cls[upts[i]] = (amask >> i) & 1;
          cls[c] = 2;
          // within the special plane, points inherit the class of the U
          // point on their line through c
          for (int l : ix.point_lines[c]) {
            if (!std::binary_search(ix.lines_in_plane[pi].begin(), ix.lines_in_plane[pi].end(),
                                    l))
              continue;
            int u = -1;
            for (int x : space.lines[l])
              if (on_line(space, U, x)) u = x;
            for (int x : space.lines[l])
              if (x != c && x != u) cls[x] = cls[u];
          }
          out.insert(canonical_relabel(cls, 4));
        }
      }
    }
  }
  return out;
}

std::set<std::vector<int>> generate_case_F_templates(const ProjectiveSpaceModel& space) {
  const auto& ix = model_index(space);
  std::set<std::vector<int>> out;
  int np = (int)space.points.size();
  for (int U = 0; U < (int)space.lines.size(); ++U)
    for (int Uh = 0; Uh < (int)space.lines.size(); ++Uh) {
      if (U == Uh) continue;
      bool skew = true;
      for (int p : space.lines[Uh]) skew = skew && !on_line(space, U, p);
      if (!skew) continue;
      const auto& upts = space.lines[U];
      const auto& hpts = space.lines[Uh];
      int k = (int)upts.size();
      for (int amask = 1; amask < (1 << k) - 1; ++amask)
        for (int cmask = 1; cmask < (1 << k) - 1; ++cmask) {
          std::vector<int> cls(np, -1);
          for (int i = 0; i < k; ++i) cls[upts[i]] = (amask >> i) & 1;
          for (int i = 0; i < k; ++i) cls[hpts[i]] = 2 + ((cmask >> i) & 1);
          for (int p = 0; p < np; ++p) {
            if (cls[p] >= 0) continue;
            // the unique transversal through p fixes its class
            for (int l : ix.point_lines[p]) {
              int u = -1;
              bool meets_hat = false;
              for (int x : space.lines[l]) {
                if (on_line(space, U, x)) u = x;
                meets_hat = meets_hat || on_line(space, Uh, x);
              }
              if (u >= 0 && meets_hat) {
                cls[p] = cls[u];
                break;
              }
            }
          }
          out.insert(canonical_relabel(cls, 4));
        }
    }
  return out;
}

}  // namespace funcrowd
