#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "funcrowd/band.hpp"
#include "funcrowd/subsets.hpp"

namespace funcrowd {

/// A point of Gr(r,n)(B): coordinates indexed by r-subsets of {1..n} in
/// colex order, stored in canonical form (the lexicographically least
/// unit scaling under the band's element order). Proj(n) points are the
/// special case r = 1 on ground set {1..n+1}.
struct PluckerFamily {
  const Band* b = nullptr;
  int r = 0;
  int n = 0;
  std::vector<Elt> coords;  // indexed parallel to subsets_colex(n, r)

  const Elt& at(uint32_t mask) const;
  bool has_unit() const;

  bool operator==(const PluckerFamily& o) const = default;
  bool operator<(const PluckerFamily& o) const;
};

/// Lexicographically least representative over all unit scalings.
PluckerFamily canonicalize(const PluckerFamily& x);

/// Compares coordinate sequences by the band's element order.
bool coords_less(const PluckerFamily& a, const PluckerFamily& b);

bool satisfies_plucker(const PluckerFamily& x);

/// Incidence relations between stages of ranks x.r <= y.r (same n, band).
bool satisfies_incidence(const PluckerFamily& x, const PluckerFamily& y);

/// A flag: one Plucker family per rank in the strictly increasing type.
struct FlagPoint {
  std::vector<PluckerFamily> stages;  // stage ranks strictly increasing

  std::vector<int> type() const;
  bool operator==(const FlagPoint& o) const = default;
  bool operator<(const FlagPoint& o) const;
};

bool is_valid_flag(const FlagPoint& f);

/// Drops the stages whose ranks are not in subtype. subtype must be a
/// subsequence of the flag's type.
FlagPoint project_flag(const FlagPoint& f, const std::vector<int>& subtype);

struct Functor {
  enum Kind { Proj, Gr, Fl } kind;
  int n = 0;                  // ground-set size (Proj(n) uses ground set n+1)
  int r = 0;                  // Gr only
  std::vector<int> rvec;      // Fl only

  static Functor proj(int n) { return {Proj, n, 1, {}}; }
  static Functor gr(int r, int n) { return {Gr, n, r, {}}; }
  static Functor fl(std::vector<int> rvec, int n) { return {Fl, n, 0, std::move(rvec)}; }

  int ground_size() const { return kind == Proj ? n + 1 : n; }
  std::string to_string() const;
};

/// All canonical points of the functor over a finite band, sorted.
std::vector<PluckerFamily> enumerate_points(const Functor& f, const Band& b);
std::vector<FlagPoint> enumerate_flags(const std::vector<int>& rvec, int n, const Band& b);

/// Coordinate-wise image under a band morphism, re-canonicalized.
PluckerFamily induced_map(const BandMorphism& f, const PluckerFamily& x);
FlagPoint induced_map(const BandMorphism& f, const FlagPoint& x);

/// Plucker families of all r-dimensional row spaces of full-rank r x n
/// matrices over F_q, canonicalized and deduplicated. Independent of the
/// enumerate_points path.
std::vector<PluckerFamily> field_grassmannian_oracle(int q, int r, int n);

std::string point_to_string(const PluckerFamily& x);

}  // namespace funcrowd
