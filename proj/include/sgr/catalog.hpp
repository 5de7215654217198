#pragma once

#include <cstddef>
#include <vector>

#include "sgr/ideal.hpp"
#include "sgr/semigroup.hpp"

namespace sgr {

// Which half of the catalog an entry belongs to: below entries satisfy
// a(R/I) = a - m, above entries a(R/I) = a + m, where m is the indexing gap.
enum class Side { below, above };

struct CatalogEntry {
  Int gap;               // the m in N \ H indexing the entry
  Side side;
  FractionalIdeal ideal;
  Int a_quotient;        // a(R/I)
  std::size_t mu;        // mu_R(I)
};

// The complete catalog of non-principal graded ideals I of R = k[H] with
// Gorenstein quotient: for each gap m ascending, R :_R t^m and then
// t^m (R :_R t^m). Requires H symmetric; empty for H = N. Entry invariants
// (Gorenstein quotient, mu >= 2, a-invariant laws, pairwise distinctness,
// total count = conductor) are verified during construction.
std::vector<CatalogEntry> build_catalog(const NumericalSemigroup& h);

// The entry whose ideal is t^{a - a(R/I)} I: an involution exchanging the
// below and above halves at the same gap.
const CatalogEntry& partner(const std::vector<CatalogEntry>& catalog,
                            const CatalogEntry& entry);

// Inverse of m -> R :_R t^m on the below half: computes R : I, checks the
// result is (1, t^m) with m a gap, and returns m.
Int recover_gap(const NumericalSemigroup& h, const FractionalIdeal& i);

// Groups catalog entries by shift-equivalence (graded-module isomorphism):
// exactly conductor/2 classes, each one below/above pair at the same gap.
std::vector<std::vector<CatalogEntry>> iso_classes(
    const std::vector<CatalogEntry>& catalog);

}  // namespace sgr
