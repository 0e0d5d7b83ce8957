#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "funcrowd/band.hpp"

namespace funcrowd {

struct BandMatrix {
  const Band* b = nullptr;
  int n = 0;
  std::vector<Elt> entries;  // row-major

  static BandMatrix identity(const Band& B, int n);
  static BandMatrix from_strings(const Band& B, int n, std::initializer_list<std::string> rows);

  Elt& at(int i, int j) { return entries[i * n + j]; }
  const Elt& at(int i, int j) const { return entries[i * n + j]; }

  bool operator==(const BandMatrix& o) const { return n == o.n && entries == o.entries; }
  bool operator<(const BandMatrix& o) const;
  std::string to_string() const;
};

/// Signed formal sum over all permutations; zero monomials discarded.
FormalSum det_formal(const BandMatrix& a);

/// det(a) - 1 is null.
bool sl_member(const BandMatrix& a);

/// The SL_n colaw: for every cyclic rotation (x,y,z) of (a,b,c) and all i,j,
/// the sum over k,l of x_{i,k} y_{k,l} z_{l,j} minus delta_{i,j} is null.
bool sl_law_formal(const BandMatrix& a, const BandMatrix& b, const BandMatrix& c);

struct Sl2TReport {
  bool member = false;  // det - 1 null over T
  int branch = 0;       // 1: ad <= bc = 1; 2: bc <= ad = 1; 3: 1 <= ad = bc; 0: none
};

/// Closed-form membership for SL_2 over the tropical band, cross-checked
/// against the null-set condition.
Sl2TReport sl2T_member(const BandMatrix& a);

/// Abstract finite crowd on element indices 0..size-1.
struct Crowd {
  int size = 0;
  int identity = 0;
  std::function<bool(int, int, int)> law;
  // all c with (a,b,c) in R; brute force over the law when unset
  std::function<std::vector<int>(int, int)> completions;
  std::vector<std::string> labels;

  std::vector<int> complete(int a, int b) const;
};

struct SLCrowd {
  const Band* b = nullptr;
  int n = 0;
  std::vector<BandMatrix> elements;  // sorted
  Crowd crowd;

  int index_of(const BandMatrix& m) const;  // -1 when absent
};

/// Enumerates SL_n(B) for a finite band; n <= 3.
SLCrowd build_sl(const Band& B, int n);

/// Matrices with one nonzero entry per row and column and det - 1 null; n <= 4.
SLCrowd monomial_subcrowd(const Band& B, int n);

/// (X, *, {(*,*,*)}).
Crowd free_crowd(int size);

struct CrowdAxiomReport {
  bool c1 = false, c2 = false, c3 = false;
  bool star_equivalent = false;  // C1*-C3* hold iff C1-C3 do
  std::optional<bool> c4, c5, c6;
  std::optional<std::array<int, 3>> counterexample;
};

/// C1-C3 exhaustive; C4-C6 computed when with_optional (C5/C6 skipped above
/// the size limit).
CrowdAxiomReport check_crowd_axioms(const Crowd& g, bool with_optional = true,
                                    int optional_size_limit = 256);

std::set<int> inverse_set(const Crowd& g, int a);
std::set<int> product_set(const Crowd& g, int a, int b);

struct GroupTable {
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
};

struct GroupFromCrowdResult {
  bool ok = false;
  GroupTable table;
  std::array<int, 3> witness{-1, -1, -1};
  std::string reason;
};

/// Verifies that inverses and products are singletons and that ad = ec
/// whenever d in bc, e in ab; on success returns the group table, checks the
/// group axioms, and round-trips the induced law against R. Triple-quantified
/// checks are sampled when size exceeds exhaustive_limit.
GroupFromCrowdResult group_from_crowd(const Crowd& g, int exhaustive_limit = 64,
                                      int samples = 200000);

}  // namespace funcrowd
