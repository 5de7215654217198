#pragma once

#include <cstddef>
#include <vector>

#include "sgr/semigroup.hpp"

namespace sgr {

// A graded fractional ideal of R = k[H], stored as its exponent set
// E = union of (g_i + H) via the minimal generators g_1 < ... < g_r.
// Since every homogeneous component of k[H] is at most one-dimensional,
// graded ideals are exactly such exponent sets and the field never enters.
// Two ideals are equal iff their canonical generator lists are equal.
class FractionalIdeal {
 public:
  // Canonicalizes: duplicates and any g with g - g' in H for another
  // generator g' are removed, and the rest is sorted ascending.
  FractionalIdeal(NumericalSemigroup h, std::vector<Int> generators);

  const NumericalSemigroup& semigroup() const { return h_; }
  const std::vector<Int>& min_generators() const { return gens_; }

  // Membership in the exponent set E.
  bool contains(Int e) const {
    for (Int g : gens_) {
      if (g > e) return false;
      if (h_.contains(e - g)) return true;
    }
    return false;
  }

  bool integral() const {
    for (Int g : gens_) {
      if (!h_.contains(g)) return false;
    }
    return true;
  }

  // Minimal number of generators (graded Nakayama: the monomial minimal
  // generators realize mu).
  std::size_t mu() const { return gens_.size(); }

  FractionalIdeal shifted(Int m) const;

  friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
    return a.h_ == b.h_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const FractionalIdeal& a, const FractionalIdeal& b) {
    return !(a == b);
  }

 private:
  NumericalSemigroup h_;
  std::vector<Int> gens_;
};

// Invariants of the Artinian quotient R/I for an integral proper ideal I.
struct QuotientProfile {
  Int a_invariant = 0;              // max(H \ E), the top nonzero degree
  std::vector<Int> socle_degrees;   // h in H\E with h + a_j in E for all gens a_j of H
  std::size_t cm_type = 0;          // #socle_degrees
  bool gorenstein = false;          // cm_type == 1
};

// Free-function constructors and operations.
FractionalIdeal ideal_from_generators(NumericalSemigroup h,
                                      std::vector<Int> generators);
FractionalIdeal unit_ideal(NumericalSemigroup h);

// R :_R t^m = the integral ideal with exponent set {h in H | h + m in H}.
FractionalIdeal colon_into_ring(const NumericalSemigroup& h, Int m);

// X : Y = {z | z + E_Y is contained in E_X}.
FractionalIdeal colon(const FractionalIdeal& x, const FractionalIdeal& y);

FractionalIdeal shift(const FractionalIdeal& i, Int m);

QuotientProfile quotient_profile(const FractionalIdeal& i);

inline std::size_t mu(const FractionalIdeal& i) { return i.mu(); }

}  // namespace sgr
