#include "funcrowd/flag_complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "funcrowd/activity.hpp"
#include "funcrowd/matroid.hpp"

namespace funcrowd {

namespace {

std::vector<std::vector<int>> all_types(int n) {
  std::vector<std::vector<int>> out;
  for (uint32_t m = 1; m < (1u << (n - 1)); ++m) {
    std::vector<int> type;
    for (int r = 1; r < n; ++r)
      if (m & (1u << (r - 1))) type.push_back(r);
    out.push_back(type);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> proper_subtypes(const std::vector<int>& type) {
  std::vector<std::vector<int>> out;
  for (uint32_t m = 1; m + 1 < (1u << type.size()); ++m) {
    std::vector<int> sub;
    for (size_t i = 0; i < type.size(); ++i)
      if (m & (1u << i)) sub.push_back(type[i]);
    out.push_back(sub);
  }
  return out;
}

bool single_support(const PluckerFamily& x) {
  int nz = 0;
  for (const auto& c : x.coords)
    if (c.v != Rat(0)) ++nz;
  return nz == 1;
}

}  // namespace

size_t SimplicialComplex::count(int dim) const {
  size_t total = 0;
  for (const auto& [type, pts] : simplices)
    if ((int)type.size() == dim + 1) total += pts.size();
  return total;
}

std::vector<FlagPoint> SimplicialComplex::all_of_dim(int dim) const {
  std::vector<FlagPoint> out;
  for (const auto& [type, pts] : simplices)
    if ((int)type.size() == dim + 1) out.insert(out.end(), pts.begin(), pts.end());
  return out;
}

bool SimplicialComplex::contains(const FlagPoint& f) const {
  auto it = simplices.find(f.type());
  if (it == simplices.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), f);
}

SimplicialComplex build_delta(const Band& B, int n) {
  if (!B.finite()) throw std::invalid_argument("build_delta: infinite band");
  if (n < 2 || n > 4) throw std::invalid_argument("build_delta: n out of range");
  SimplicialComplex c;
  c.b = &B;
  c.n = n;
  for (const auto& type : all_types(n)) {
    auto flags = enumerate_flags(type, n, B);
    std::sort(flags.begin(), flags.end());
    c.simplices[type] = std::move(flags);
  }
  return c;
}

SimplicialComplex build_gamma(const Band& B, int n) {
  SimplicialComplex c = build_delta(B, n);
  for (auto& [type, pts] : c.simplices) {
    std::vector<FlagPoint> kept;
    for (const auto& f : pts) {
      bool ok = true;
      for (const auto& stage : f.stages) ok = ok && single_support(stage);
      // equivalently: all products x_{r,I} x_{r,J} with I != J vanish
      for (const auto& stage : f.stages)
        for (size_t i = 0; i < stage.coords.size() && ok; ++i)
          for (size_t j = i + 1; j < stage.coords.size(); ++j)
            if (B.mul(stage.coords[i], stage.coords[j]).v != Rat(0)) {
              ok = false;
              break;
            }
      if (ok) kept.push_back(f);
    }
    pts = std::move(kept);
  }
  return c;
}

bool is_closed_under_faces(const SimplicialComplex& c) {
  for (const auto& [type, pts] : c.simplices) {
    if (type.size() < 2) continue;
    for (const auto& sub : proper_subtypes(type))
      for (const auto& f : pts)
        if (!c.contains(project_flag(f, sub))) return false;
  }
  return true;
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super) {
  for (const auto& [type, pts] : sub.simplices)
    for (const auto& f : pts)
      if (!super.contains(f)) return false;
  return true;
}

SimplicialComplex map_complex(const BandMorphism& f, const SimplicialComplex& c) {
  SimplicialComplex out;
  out.b = f.target;
  out.n = c.n;
  for (const auto& [type, pts] : c.simplices) {
    std::vector<FlagPoint> img;
    for (const auto& x : pts) img.push_back(induced_map(f, x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    out.simplices[type] = std::move(img);
  }
  return out;
}

bool induced_map_commutes_with_faces(const BandMorphism& f, const SimplicialComplex& c) {
  for (const auto& [type, pts] : c.simplices) {
    if (type.size() < 2) continue;
    for (const auto& sub : proper_subtypes(type))
      for (const auto& x : pts)
        if (!(project_flag(induced_map(f, x), sub) == induced_map(f, project_flag(x, sub))))
          return false;
  }
  return true;
}

bool commuting_square_with_support(int q, int n) {
  const Band& Fq = band(BandKind::Fq, q);
  auto t = units_to_one_morphism(Fq);
  std::vector<int> full;
  for (int r = 1; r < n; ++r) full.push_back(r);
  for (const auto& chamber : enumerate_flags(full, n, Fq)) {
    auto img = induced_map(t, chamber);
    for (size_t s = 0; s < chamber.stages.size(); ++s) {
      // the support matroid of the F_q stage must be the basis set of the
      // image stage over K
      auto mu = support_matroid(chamber.stages[s]);
      auto direct = support_matroid(img.stages[s]);
      if (!(mu == direct)) return false;
    }
  }
  return true;
}

std::vector<std::pair<FlagPoint, std::vector<FlagPoint>>> complex_activity(
    const SimplicialComplex& c, const BandMatrix& a, const std::vector<int>& type) {
  auto it = c.simplices.find(type);
  if (it == c.simplices.end()) throw std::invalid_argument("complex_activity: unknown type");
  std::vector<std::pair<FlagPoint, std::vector<FlagPoint>>> out;
  for (const auto& x : it->second) out.emplace_back(x, orbit(a, x));
  return out;
}

}  // namespace funcrowd
