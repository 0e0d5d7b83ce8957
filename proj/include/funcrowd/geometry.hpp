#pragma once

#include <string>
#include <utility>
#include <vector>

#include "funcrowd/band.hpp"

namespace funcrowd {

/// A finite point-line geometry given by its flags (incident point-line
/// pairs). Labels are optional and only used for reporting.
struct IncidenceGeometry {
  int num_points = 0;
  int num_lines = 0;
  std::vector<std::pair<int, int>> flags;
  std::vector<std::string> point_labels;
  std::vector<std::string> line_labels;
};

/// Result of the girth/diameter recognition on the incidence graph.
struct PolygonCertificate {
  bool ok = false;  // weak generalized polygon iff diameter == girth/2
  int gonality = 0;
  int girth = 0;
  int diameter = 0;
  bool has_order = false;  // degrees constant per side
  int s = 0;               // points per line - 1
  int t = 0;               // lines per point - 1
  bool thick = false;      // every degree >= 3
  std::vector<std::string> warnings;
};

/// Throws std::invalid_argument if the incidence graph is disconnected or
/// empty.
PolygonCertificate verify_polygon(const IncidenceGeometry& g);

/// Cycle with n points and n lines. Requires n >= 2.
IncidenceGeometry ordinary_ngon(int n);

/// Points and lines become points; flags become lines.
IncidenceGeometry double_geometry(const IncidenceGeometry& g);

/// m points; lines are the 2-element subsets. Requires m >= 3.
IncidenceGeometry complete_graph_geometry(int m);

/// Projective space over F_q in dimension d with normalized homogeneous
/// coordinates. Subspaces are stored as sorted lists of point indices.
struct ProjectiveSpaceModel {
  int q = 0;
  int d = 0;
  std::vector<std::vector<Elt>> points;
  std::vector<std::vector<int>> lines;
  std::vector<std::vector<int>> planes;  // d = 3 only

  int point_index(const std::vector<Elt>& coords) const;
  IncidenceGeometry point_line_geometry() const;
};

/// Requires q in {2,3,4,5} and d in {2,3}.
ProjectiveSpaceModel pg_model(int q, int d);

/// The conic {(1,t,t^2)} plus (0,0,1) in P^2(F_q).
std::vector<std::vector<Elt>> conic_oval(int q);

/// q+1 points of P^2(F_q), no three collinear.
bool is_oval(int q, const std::vector<std::vector<Elt>>& S);

/// Tits quadrangle T_2(O) in P^3(F_q) from an oval in the hyperplane X0=0.
/// Requires q <= 4 and is_oval(q, O).
IncidenceGeometry t2_of_oval(int q, const std::vector<std::vector<Elt>>& O);

/// The parabolic quadric X0X1 + X2X3 + X4^2 = 0 in P^4(F_q) with its fully
/// contained lines. Requires q in {2,3}.
IncidenceGeometry q4q_quadric(int q);

/// Bipartite isomorphism of incidence graphs, points to points and lines to
/// lines.
bool incidence_isomorphic(const IncidenceGeometry& a, const IncidenceGeometry& b);

/// Every pair of vertices of the incidence graph lies on a common 2n-cycle
/// (an ordinary sub-n-gon).
bool pairs_in_ordinary_subgon(const IncidenceGeometry& g, int n);

}  // namespace funcrowd
