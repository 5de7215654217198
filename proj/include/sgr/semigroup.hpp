#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sgr/errors.hpp"

namespace sgr {

using Int = std::int64_t;

// A numerical semigroup H: an additively closed subset of the non-negative
// integers containing 0 with finite complement. Instances are immutable and
// cheap to copy (shared internal state), so they can be handed around by
// value and shared between threads freely.
class NumericalSemigroup {
 public:
  // Accepts any non-empty list of positive integers with overall gcd 1.
  // Duplicates are tolerated; the input is deduplicated and sorted before
  // the minimality reduction.
  static NumericalSemigroup from_generators(std::vector<Int> generators);

  const std::vector<Int>& generators() const { return d_->generators; }
  const std::vector<Int>& minimal_generators() const {
    return d_->minimal_generators;
  }
  Int min_generator() const { return d_->minimal_generators.front(); }
  Int max_generator() const { return d_->minimal_generators.back(); }

  // max(Z \ H); equals -1 exactly when H = N.
  Int frobenius() const { return d_->frobenius; }
  // frobenius + 1; least n with [n, inf) contained in H.
  Int conductor() const { return d_->conductor; }
  const std::vector<Int>& gaps() const { return d_->gaps; }

  // #{n in H | n < c(H)} == #gaps. Equivalent to k[H] being Gorenstein.
  bool symmetric() const { return d_->symmetric; }

  bool contains(Int n) const {
    if (n < 0) return false;
    if (n >= d_->conductor) return true;
    return d_->member_below_conductor[static_cast<std::size_t>(n)];
  }

  // For each residue r mod n, the least member of H congruent to r,
  // indexed by residue. Requires n > 0 and n in H.
  std::vector<Int> apery_set(Int n) const;

  // The pseudo-Frobenius numbers of H; their count is the type of k[H].
  // For H = N this is {-1}.
  std::vector<Int> pseudo_frobenius() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.d_ == b.d_ || a.minimal_generators() == b.minimal_generators();
  }
  friend bool operator!=(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return !(a == b);
  }

 private:
  struct Data {
    std::vector<Int> generators;
    std::vector<Int> minimal_generators;
    Int frobenius = -1;
    Int conductor = 0;
    std::vector<Int> gaps;
    bool symmetric = false;
    std::vector<bool> member_below_conductor;  // size == conductor
  };

  explicit NumericalSemigroup(std::shared_ptr<const Data> d)
      : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

// Free-function aliases for the member operations.
NumericalSemigroup make_semigroup(std::vector<Int> generators);
inline bool contains(const NumericalSemigroup& h, Int n) {
  return h.contains(n);
}
inline std::vector<Int> apery_set(const NumericalSemigroup& h, Int n) {
  return h.apery_set(n);
}
inline bool is_symmetric(const NumericalSemigroup& h) { return h.symmetric(); }

}  // namespace sgr
