#include "sgr/ideal.hpp"

#include <algorithm>
#include <string>

namespace sgr {

namespace {

// Reduce an ascending list of exponents to the minimal generators of the
// exponent set it spans: e is redundant iff e - g in H for some kept g < e.
// A redundancy witness can always be taken among the kept elements, so
// filtering against the kept list alone is exact.
std::vector<Int> reduce_to_minimal(const NumericalSemigroup& h,
                                   std::vector<Int> exps) {
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Int> kept;
  for (Int e : exps) {
    bool redundant = false;
    for (Int g : kept) {
      if (h.contains(e - g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(e);
  }
  return kept;
}

}  // namespace

FractionalIdeal::FractionalIdeal(NumericalSemigroup h,
                                 std::vector<Int> generators)
    : h_(std::move(h)) {
  if (generators.empty()) throw EmptyGenerators();
  gens_ = reduce_to_minimal(h_, std::move(generators));
}

FractionalIdeal FractionalIdeal::shifted(Int m) const {
  std::vector<Int> shifted_gens = gens_;
  for (Int& g : shifted_gens) g += m;
  return FractionalIdeal(h_, std::move(shifted_gens));
}

FractionalIdeal ideal_from_generators(NumericalSemigroup h,
                                      std::vector<Int> generators) {
  return FractionalIdeal(std::move(h), std::move(generators));
}

FractionalIdeal unit_ideal(NumericalSemigroup h) {
  return FractionalIdeal(std::move(h), {0});
}

FractionalIdeal shift(const FractionalIdeal& i, Int m) { return i.shifted(m); }

FractionalIdeal colon_into_ring(const NumericalSemigroup& h, Int m) {
  if (m < 1) {
    throw PreconditionViolated("colon_into_ring requires m >= 1, got " +
                               std::to_string(m));
  }
  // Every h >= c(H) lies in the result, so the window below is cofinal.
  const Int top = h.conductor() + h.max_generator();
  std::vector<Int> exps;
  for (Int n = 0; n <= top; ++n) {
    if (h.contains(n) && h.contains(n + m)) exps.push_back(n);
  }
  for (Int n = h.conductor(); n <= top; ++n) {
    if (!std::binary_search(exps.begin(), exps.end(), n)) {
      throw InternalCheckFailure("colon_into_ring window is not cofinal");
    }
  }
  return FractionalIdeal(h, std::move(exps));
}

FractionalIdeal colon(const FractionalIdeal& x, const FractionalIdeal& y) {
  if (x.semigroup() != y.semigroup()) throw MixedSemigroups();
  const NumericalSemigroup& h = x.semigroup();
  const Int x_min = x.min_generators().front();
  const Int y_min = y.min_generators().front();
  // Any z in X:Y satisfies z + y_min >= min(E_X); every z with
  // z >= min(E_X) + c(H) - y_min qualifies outright.
  const Int lo = x_min - y_min;
  const Int certain = x_min + h.conductor() - y_min;
  // Minimal generators z of X:Y satisfy z - certain < min(H \ {0}), since
  // everything at or above `certain` is in X:Y already.
  const Int top = certain + h.max_generator();
  std::vector<Int> exps;
  for (Int z = lo; z <= top; ++z) {
    bool in = true;
    for (Int yg : y.min_generators()) {
      if (!x.contains(z + yg)) {
        in = false;
        break;
      }
    }
    if (in) exps.push_back(z);
  }
  for (Int z = certain; z <= top; ++z) {
    if (!std::binary_search(exps.begin(), exps.end(), z)) {
      throw InternalCheckFailure("colon window is not cofinal");
    }
  }
  return FractionalIdeal(h, std::move(exps));
}

QuotientProfile quotient_profile(const FractionalIdeal& i) {
  if (!i.integral()) {
    throw NotIntegral("quotient_profile requires an integral ideal");
  }
  const NumericalSemigroup& h = i.semigroup();
  // H \ E lies below g_1 + c(H): beyond that, n - g_1 >= c(H) is in H.
  const Int top = i.min_generators().front() + h.conductor();
  std::vector<Int> support;
  for (Int n = 0; n < top; ++n) {
    if (h.contains(n) && !i.contains(n)) support.push_back(n);
  }
  if (support.empty()) throw UnitIdeal();

  QuotientProfile profile;
  profile.a_invariant = support.back();
  for (Int n : support) {
    bool socle = true;
    for (Int g : h.minimal_generators()) {
      if (!i.contains(n + g)) {
        socle = false;
        break;
      }
    }
    if (socle) profile.socle_degrees.push_back(n);
  }
  profile.cm_type = profile.socle_degrees.size();
  profile.gorenstein = profile.cm_type == 1;

  if (!h.contains(profile.a_invariant)) {
    throw InternalCheckFailure("a(R/I) fell outside H");
  }
  if (!std::binary_search(profile.socle_degrees.begin(),
                          profile.socle_degrees.end(), profile.a_invariant)) {
    throw InternalCheckFailure("top degree of R/I is not in the socle");
  }
  return profile;
}

}  // namespace sgr
