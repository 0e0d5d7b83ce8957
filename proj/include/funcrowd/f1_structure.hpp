#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "funcrowd/geometry.hpp"

namespace funcrowd {

/// A surjection of a projective space onto the complete graph K(m), encoded
/// by the class of every point plus (optionally) an edge label per line.
struct F1Structure {
  const ProjectiveSpaceModel* space = nullptr;
  int m = 0;
  std::vector<int> point_classes;                  // point index -> 0..m-1
  std::map<int, std::pair<int, int>> line_labels;  // line index -> edge {u<v}
};

struct ValidationResult {
  bool ok = false;
  std::string diagnostic;  // EmptyClass / LineMeetsThreeClasses(l) / EdgeUncovered(u,v)
  std::map<int, std::pair<int, int>> labels;  // a completed labelling when ok
};

/// Checks the invariants; when line labels are absent, completes them:
/// 2-class lines are forced, monochromatic lines are matched to the
/// remaining uncovered edges.
ValidationResult validate_structure(const F1Structure& s);

enum class PlaneTypeKind { I, Itilde, II, IItilde, None };
std::string plane_type_name(PlaneTypeKind k);

struct PlaneType {
  PlaneTypeKind kind = PlaneTypeKind::None;
  int base_line = -1;
  int special_line = -1;   // V for I-tilde, or the base line itself for I
  int special_point = -1;  // the singleton-class point for II / II-tilde
};

/// The type of a valid plane structure relative to the line U.
PlaneType classify_plane_type(const F1Structure& s, int U);

/// Classes are renamed in order of least member point index.
std::vector<int> canonical_relabel(const std::vector<int>& classes, int m);

struct PlaneReport {
  int q = 0;
  long long valid = 0;
  long long class_a = 0;
  long long class_b = 0;
  long long both = 0;
  long long unmatched = 0;
  std::vector<std::vector<int>> structures;  // canonical class vectors
};

/// Exhaustive classification of the epimorphisms P^2(F_q) -> K(3).
/// Requires q in {2,3}.
PlaneReport enumerate_plane_epis(int q);

enum class P3Case { E, F, None };

struct CaseMatch {
  P3Case c = P3Case::None;
  int U = -1;
  int pi_c = -1;       // Type-II plane for case E
  int u_hat = -1;      // transversal line for case F
  bool strong = false; // both |U cap A| >= 2 and |U cap B| >= 2 also hold
};

/// Matches a valid P^3 structure to case E or F of the classification, over
/// all base lines and class-role assignments.
CaseMatch match_case(const F1Structure& s);

/// Tests one specific case only.
std::optional<CaseMatch> try_match_case(const F1Structure& s, P3Case which);

struct P3Report {
  int q = 0;
  long long valid = 0;
  long long case_E = 0;
  long long case_F = 0;
  long long both = 0;
  long long unmatched = 0;
  std::vector<std::vector<int>> structures;
  std::vector<std::vector<int>> unmatched_structures;
};

/// Exhaustive classification of the epimorphisms P^3(F_2) -> K(4). The
/// search is sharded by the classes of a point prefix; the result is
/// independent of the number of worker threads.
P3Report enumerate_p3_epis(int q, int jobs = 1);

/// Image of every line is an edge, of every plane a triangle, of the space
/// the whole K(4).
bool dimension_check(const F1Structure& s);

/// Constructive case templates as canonical class vectors.
std::set<std::vector<int>> generate_case_E_templates(const ProjectiveSpaceModel& space);
std::set<std::vector<int>> generate_case_F_templates(const ProjectiveSpaceModel& space);

/// The shared P^3(F_2) model (built once).
const ProjectiveSpaceModel& p3_model(int q);
const ProjectiveSpaceModel& plane_model(int q);

}  // namespace funcrowd
