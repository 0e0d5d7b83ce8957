#include "funcrowd/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace funcrowd {

bool MatroidByBases::operator<(const MatroidByBases& o) const {
  if (n != o.n) return n < o.n;
  if (r != o.r) return r < o.r;
  return bases < o.bases;
}

bool is_matroid(int n, int r, const std::set<uint32_t>& bases) {
  if (bases.empty()) throw std::invalid_argument("is_matroid: empty basis family");
  for (uint32_t b : bases)
    if (std::popcount(b) != r || b >= (1u << n)) throw std::invalid_argument("is_matroid: bad basis");
  for (uint32_t b1 : bases) {
    for (uint32_t b2 : bases) {
      uint32_t only1 = b1 & ~b2;
      for (int x = 1; x <= n; ++x) {
        if (!(only1 & (1u << (x - 1)))) continue;
        bool exchanged = false;
        uint32_t removed = b1 & ~(1u << (x - 1));
        for (int y = 1; y <= n && !exchanged; ++y)
          if ((b2 & ~b1) & (1u << (y - 1)))
            exchanged = bases.count(removed | (1u << (y - 1))) > 0;
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

int rank_function(const MatroidByBases& m, uint32_t subset) {
  int best = 0;
  for (uint32_t b : m.bases) best = std::max(best, std::popcount(subset & b));
  return best;
}

bool is_quotient(const MatroidByBases& m1, const MatroidByBases& m2) {
  if (m1.n != m2.n) throw std::invalid_argument("is_quotient: ground-set mismatch");
  uint32_t full = (1u << m1.n) - 1;
  for (uint32_t b = 0; b <= full; ++b) {
    for (uint32_t a = b;; a = (a - 1) & b) {  // all subsets a of b
      if (rank_function(m1, b) - rank_function(m1, a) < rank_function(m2, b) - rank_function(m2, a))
        return false;
      if (a == 0) break;
    }
  }
  return true;
}

MatroidByBases support_matroid(const PluckerFamily& x) {
  MatroidByBases m{x.n, x.r, {}};
  auto masks = subsets_colex(x.n, x.r);
  for (size_t i = 0; i < masks.size(); ++i)
    if (x.coords[i].v != Rat(0)) m.bases.insert(masks[i]);
  return m;
}

GrKBijectionReport grK_bijection_check(int r, int n) {
  if (n > 5) throw std::invalid_argument("grK_bijection_check: n too large");
  const Band& K = band(BandKind::Krasner);
  std::set<std::set<uint32_t>> supports;
  for (const auto& x : enumerate_points(Functor::gr(r, n), K)) supports.insert(support_matroid(x).bases);
  // brute force over all nonempty families of r-subsets
  auto masks = subsets_colex(n, r);
  std::set<std::set<uint32_t>> matroids;
  for (uint64_t pick = 1; pick < (1ull << masks.size()); ++pick) {
    std::set<uint32_t> bases;
    for (size_t i = 0; i < masks.size(); ++i)
      if (pick & (1ull << i)) bases.insert(masks[i]);
    if (is_matroid(n, r, bases)) matroids.insert(bases);
  }
  return GrKBijectionReport{r, n, supports.size(), matroids.size(), supports == matroids};
}

}  // namespace funcrowd
