#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "funcrowd/points.hpp"

namespace funcrowd {

/// A matroid given by its bases, each an r-subset bitmask of {1..n}.
struct MatroidByBases {
  int n = 0;
  int r = 0;
  std::set<uint32_t> bases;

  bool operator==(const MatroidByBases&) const = default;
  bool operator<(const MatroidByBases& o) const;
};

/// Basis-exchange check by direct double loop.
bool is_matroid(int n, int r, const std::set<uint32_t>& bases);

/// max |A cap B| over bases B.
int rank_function(const MatroidByBases& m, uint32_t subset);

/// True iff m2 is a quotient of m1: r1(B) - r1(A) >= r2(B) - r2(A) for all
/// A subseteq B subseteq E. Exhaustive over subset pairs.
bool is_quotient(const MatroidByBases& m1, const MatroidByBases& m2);

/// Support of a Gr(r,n)(K) point as a basis family.
MatroidByBases support_matroid(const PluckerFamily& x);

struct GrKBijectionReport {
  int r = 0;
  int n = 0;
  size_t point_count = 0;
  size_t matroid_count = 0;
  bool equal = false;
};

/// Compares {supports of Gr(r,n)(K) points} with {families passing
/// is_matroid}, both exhaustive.
GrKBijectionReport grK_bijection_check(int r, int n);

}  // namespace funcrowd
