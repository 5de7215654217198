#pragma once

#include <cstddef>
#include <vector>

#include "sgr/ideal.hpp"
#include "sgr/semigroup.hpp"

namespace sgr {

// Brute-force enumeration used to verify the catalog without trusting any
// of the closed-form machinery. Shared code is limited to semigroup
// membership and canonical ideal forms.

// Number of elements of the divisibility poset {h in H | h <= bound}; the
// enumeration below is exponential in this quantity.
std::size_t poset_size(const NumericalSemigroup& h, Int bound);

// Every semigroup ideal E of H with E containing H /\ (bound, inf), i.e.
// whose complement T = H \ E lives inside the finite divisibility poset.
// Includes the unit ideal and principal ideals; canonical forms, sorted
// lexicographically by generator list.
std::vector<FractionalIdeal> enumerate_semigroup_ideals(
    const NumericalSemigroup& h, Int bound);

// The subset of the above with Gorenstein quotient (socle dimension 1) and
// mu >= 2. Answers exactly the bounded question; callers choose the bound.
// No symmetry assumption is made.
std::vector<FractionalIdeal> enumerate_gorenstein_ideals(
    const NumericalSemigroup& h, Int bound);

struct VerificationReport {
  NumericalSemigroup semigroup;
  Int bound = 0;
  std::vector<FractionalIdeal> oracle_ideals;
  std::vector<FractionalIdeal> formula_ideals;
  std::size_t oracle_count = 0;
  std::size_t formula_count = 0;
  Int conductor = 0;
  bool pass = false;
  std::vector<FractionalIdeal> only_in_oracle;   // mismatches
  std::vector<FractionalIdeal> only_in_formula;  // mismatches
};

// Enumerates with bound = 2a + slack (a(R/I) <= 2a is the sharp cutoff for
// catalog members) and compares against build_catalog as sets. Slack > 0
// re-checks that nothing new appears above the theoretical cutoff.
VerificationReport verify_theorem(const NumericalSemigroup& h, Int slack = 0);

}  // namespace sgr
