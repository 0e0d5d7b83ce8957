#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "funcrowd/crowd.hpp"
#include "funcrowd/points.hpp"

namespace funcrowd {

/// (I,J)-minor of a as a formal sum of monomials (zero monomials discarded).
/// The default is the plain subdeterminant, which is the convention validated
/// against the classical action over fields; eps_signed multiplies by
/// (-1)^{eps(I)+eps(J)} with eps(I) = sum_t (i_t - t).
FormalSum minor_formal(const BandMatrix& a, uint32_t I, uint32_t J, bool eps_signed = false);

/// (a,x,y) in T: some unit scaling w makes sum_J a_{I,J} x_J - w y_I null for
/// every I, stage-wise for flags.
bool activity_member(const BandMatrix& a, const PluckerFamily& x, const PluckerFamily& y,
                     bool eps_signed = false);
bool activity_member(const BandMatrix& a, const FlagPoint& x, const FlagPoint& y);

/// a.x over all candidate points; finite bands only.
std::vector<PluckerFamily> orbit(const BandMatrix& a, const PluckerFamily& x);
std::vector<FlagPoint> orbit(const BandMatrix& a, const FlagPoint& x);

struct ActivityPropertyReport {
  bool a1 = false;
  std::optional<bool> a2, a3;  // skipped above the crowd size limit
  std::string witness;
};

/// A1 always; A2/A3 exhaustive when the crowd is small enough.
ActivityPropertyReport check_activity_properties(const Band& B, int n, const Functor& f,
                                                 int full_size_limit = 64);

/// Every monomial matrix a_sigma has singleton orbits that permute supports.
bool permutation_orbits_singleton(const Band& B, int n, const Functor& f);

/// Activity on abstract element indices.
struct SetActivity {
  int g_size = 0;
  int x_size = 0;
  std::function<bool(int, int, int)> member;  // (a, x, y)
};

/// a.b = {c : some d in c^{-1} has (a,b,d) in R}.
SetActivity left_mult_activity(const Crowd& g);

struct GroupActionResult {
  bool ok = false;
  std::vector<std::vector<int>> theta;  // [a][x]
  std::string reason;
};

/// For a crowd that is a group: checks A1, A3 and singleton orbits, extracts
/// theta and verifies theta(ab,x) = theta(a,theta(b,x)) exhaustively.
GroupActionResult recognize_group_action(const Crowd& g, const SetActivity& act);

}  // namespace funcrowd
