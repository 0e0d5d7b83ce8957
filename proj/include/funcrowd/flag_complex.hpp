#pragma once

#include <map>
#include <utility>
#include <vector>

#include "funcrowd/crowd.hpp"
#include "funcrowd/points.hpp"

namespace funcrowd {

/// Simplices grouped by type; a simplex of type (r_1..r_s) has dimension s-1.
struct SimplicialComplex {
  const Band* b = nullptr;
  int n = 0;
  std::map<std::vector<int>, std::vector<FlagPoint>> simplices;

  size_t count(int dim) const;
  std::vector<FlagPoint> all_of_dim(int dim) const;
  bool contains(const FlagPoint& f) const;
};

/// All flag points over all types 0 < r_1 < ... < r_s < n.
SimplicialComplex build_delta(const Band& B, int n);

/// The subcomplex of flags whose every stage has single-support coordinates.
SimplicialComplex build_gamma(const Band& B, int n);

/// Every projection of every stored simplex is stored.
bool is_closed_under_faces(const SimplicialComplex& c);

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super);

/// Image complex under the induced simplicial map of a band morphism.
SimplicialComplex map_complex(const BandMorphism& f, const SimplicialComplex& c);

/// Faces commute with the induced map on every simplex of c.
bool induced_map_commutes_with_faces(const BandMorphism& f, const SimplicialComplex& c);

/// t_*: Delta_n(F_q) -> Delta_n(K) agrees stage-wise with the support map on
/// every chamber (full flags).
bool commuting_square_with_support(int q, int n);

/// Orbit of every simplex of the given type under a.
std::vector<std::pair<FlagPoint, std::vector<FlagPoint>>> complex_activity(
    const SimplicialComplex& c, const BandMatrix& a, const std::vector<int>& type);

}  // namespace funcrowd
