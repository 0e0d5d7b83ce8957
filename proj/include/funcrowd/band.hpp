#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace funcrowd {

using Rat = boost::rational<long long>;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

enum class BandKind {
  Fpm,               // regular partial field {0,1,-1}
  Krasner,           // {0,1}
  Fq,                // finite field, q <= 9
  Tropical,          // nonnegative rationals, max-times
  TropicalIntegers,  // [0,1] subsemiring of Tropical
};

std::string kind_to_string(BandKind k);
BandKind kind_from_string(const std::string& s);

/// An element of a band. Finite-band elements are stored as integer codes
/// (F_q: 0..q-1, with nonprime fields coded by the coefficient vector of the
/// residue polynomial in base p); tropical elements as exact rationals.
/// Fpm uses values 0, 1, -1 directly.
struct Elt {
  Rat v{0};

  bool operator==(const Elt&) const = default;
  bool operator<(const Elt& o) const { return v < o.v; }
};

/// A finite multiset of nonzero band elements. Zero terms are discarded on
/// insertion; the empty sum is null in every band.
class FormalSum {
 public:
  FormalSum() = default;
  void add(const Elt& e) {
    if (e.v != Rat(0)) terms_.push_back(e);
  }
  const std::vector<Elt>& terms() const { return terms_; }
  bool operator==(const FormalSum& o) const;
  size_t size() const { return terms_.size(); }

 private:
  std::vector<Elt> terms_;
};

/// One of the five built-in bands. All instances are immutable singletons
/// obtained through band(); every operation is pure.
class Band {
 public:
  BandKind kind() const { return kind_; }
  int q() const { return q_; }

  Elt zero() const { return Elt{Rat(0)}; }
  Elt one() const { return Elt{Rat(1)}; }

  bool contains(const Elt& e) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  bool is_null(const FormalSum& s) const;
  bool is_unit(const Elt& e) const;

  /// Field addition; F_q only.
  Elt add(const Elt& a, const Elt& b) const;

  /// Finite bands only.
  const std::vector<Elt>& universe() const;
  std::vector<Elt> units() const;
  bool finite() const { return kind_ == BandKind::Fpm || kind_ == BandKind::Krasner || kind_ == BandKind::Fq; }

  /// Position in the fixed element order 0 < 1 < -1 < ... used for
  /// canonical forms. Tropical elements are ordered by value.
  Rat rank(const Elt& e) const;
  bool elt_less(const Elt& a, const Elt& b) const { return rank(a) < rank(b); }

  std::string format(const Elt& e) const;
  Elt parse(const std::string& s) const;

  std::string name() const;

 private:
  friend const Band& band(BandKind, int);
  Band(BandKind kind, int q);

  Elt fq_add(const Elt& a, const Elt& b) const;

  BandKind kind_;
  int q_ = 0;
  int p_ = 0;  // characteristic, F_q only
  std::vector<Elt> universe_;
  std::vector<std::vector<int>> mul_table_;  // F_q only
  std::vector<std::vector<int>> add_table_;  // F_q only
  std::vector<int> neg_table_;               // F_q only
};

/// Returns the unique instance of the requested band. For Fq, q must be a
/// prime power <= 9. Throws std::invalid_argument otherwise.
const Band& band(BandKind kind, int q = 0);
const Band& band_from_json_name(const std::string& kind, int q = 0);

/// An element-wise map between two bands.
struct BandMorphism {
  const Band* source;
  const Band* target;
  std::function<Elt(const Elt&)> map;
};

/// The unique morphism t: F_q -> K collapsing all units to 1.
BandMorphism units_to_one_morphism(const Band& src);
BandMorphism identity_morphism(const Band& b);

/// True iff f maps 0 to 0, 1 to 1, is multiplicative, and maps every null
/// sum of at most max_terms source elements to a null sum. Requires a
/// finite source.
bool check_morphism(const BandMorphism& f, int max_terms = 4);

}  // namespace funcrowd
