#include "sgr/catalog.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace sgr {

namespace {

bool same_up_to_shift(const FractionalIdeal& a, const FractionalIdeal& b,
                      Int* shift_out) {
  const auto& ga = a.min_generators();
  const auto& gb = b.min_generators();
  if (ga.size() != gb.size()) return false;
  const Int ell = gb.front() - ga.front();
  for (std::size_t k = 0; k < ga.size(); ++k) {
    if (ga[k] + ell != gb[k]) return false;
  }
  if (shift_out != nullptr) *shift_out = ell;
  return true;
}

}  // namespace

std::vector<CatalogEntry> build_catalog(const NumericalSemigroup& h) {
  if (!h.symmetric()) {
    throw NotSymmetric("the catalog is defined for symmetric semigroups only");
  }
  const Int a = h.frobenius();
  std::vector<CatalogEntry> entries;
  entries.reserve(2 * h.gaps().size());
  for (Int m : h.gaps()) {
    FractionalIdeal below = colon_into_ring(h, m);
    FractionalIdeal above = below.shifted(m);
    for (Side side : {Side::below, Side::above}) {
      const FractionalIdeal& ideal = side == Side::below ? below : above;
      const QuotientProfile profile = quotient_profile(ideal);
      const Int expected_a = side == Side::below ? a - m : a + m;
      if (profile.a_invariant != expected_a) {
        throw InternalCheckFailure(
            "a(R/I) = " + std::to_string(profile.a_invariant) +
            " violates the a -+ m law at gap " + std::to_string(m));
      }
      if (!profile.gorenstein) {
        throw InternalCheckFailure("non-Gorenstein quotient at gap " +
                                   std::to_string(m));
      }
      if (ideal.mu() < 2) {
        throw InternalCheckFailure("principal catalog ideal at gap " +
                                   std::to_string(m));
      }
      if (!h.contains(profile.a_invariant) || profile.a_invariant == a ||
          h.contains(std::abs(a - profile.a_invariant))) {
        throw InternalCheckFailure("a(R/I) invariants violated at gap " +
                                   std::to_string(m));
      }
      entries.push_back(
          {m, side, ideal, profile.a_invariant, ideal.mu()});
    }
  }

  std::map<std::vector<Int>, std::size_t> seen;
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    auto [it, inserted] =
        seen.emplace(entries[idx].ideal.min_generators(), idx);
    if (!inserted) {
      throw InternalCheckFailure(
          "catalog entries " + std::to_string(it->second) + " and " +
          std::to_string(idx) + " coincide");
    }
  }
  if (static_cast<Int>(entries.size()) != h.conductor()) {
    throw InternalCheckFailure("catalog size " +
                               std::to_string(entries.size()) +
                               " differs from the conductor " +
                               std::to_string(h.conductor()));
  }
  return entries;
}

const CatalogEntry& partner(const std::vector<CatalogEntry>& catalog,
                            const CatalogEntry& entry) {
  const auto in_catalog =
      std::any_of(catalog.begin(), catalog.end(), [&](const CatalogEntry& e) {
        return e.ideal == entry.ideal;
      });
  if (!in_catalog) {
    throw NotInCatalog("entry's ideal does not occur in the catalog");
  }
  const Int a = entry.ideal.semigroup().frobenius();
  const FractionalIdeal target = entry.ideal.shifted(a - entry.a_quotient);
  for (const CatalogEntry& e : catalog) {
    if (e.ideal == target) {
      if (e.a_quotient != 2 * a - entry.a_quotient || e.gap != entry.gap ||
          e.side == entry.side) {
        throw InternalCheckFailure("partner invariants violated at gap " +
                                   std::to_string(entry.gap));
      }
      return e;
    }
  }
  throw InternalCheckFailure("partner ideal missing from the catalog");
}

Int recover_gap(const NumericalSemigroup& h, const FractionalIdeal& i) {
  if (!h.symmetric()) {
    throw NotSymmetric("recover_gap is defined over symmetric semigroups");
  }
  if (!i.integral()) {
    throw NotIntegral("recover_gap requires an integral ideal");
  }
  if (i.mu() < 2) {
    throw PreconditionViolated("recover_gap requires mu >= 2");
  }
  const QuotientProfile profile = quotient_profile(i);
  if (!profile.gorenstein || profile.a_invariant >= h.frobenius()) {
    throw PreconditionViolated(
        "recover_gap requires a Gorenstein quotient with a(R/I) < a(R)");
  }
  const FractionalIdeal dual = colon(unit_ideal(h), i);
  const auto& gens = dual.min_generators();
  if (gens.size() != 2 || gens[0] != 0 || h.contains(gens[1]) ||
      gens[1] < 0) {
    throw PreconditionViolated("R : I is not of the form (1, t^m)");
  }
  return gens[1];
}

std::vector<std::vector<CatalogEntry>> iso_classes(
    const std::vector<CatalogEntry>& catalog) {
  std::vector<std::vector<CatalogEntry>> classes;
  std::vector<bool> used(catalog.size(), false);
  Int a = catalog.empty() ? 0 : catalog.front().ideal.semigroup().frobenius();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<CatalogEntry> cls{catalog[i]};
    for (std::size_t j = i + 1; j < catalog.size(); ++j) {
      if (used[j]) continue;
      Int ell = 0;
      if (same_up_to_shift(catalog[i].ideal, catalog[j].ideal, &ell)) {
        if (std::abs(ell) > 2 * a + 1) {
          throw InternalCheckFailure("shift-equivalence witness out of range");
        }
        used[j] = true;
        cls.push_back(catalog[j]);
      }
    }
    classes.push_back(std::move(cls));
  }

  if (!catalog.empty()) {
    const NumericalSemigroup& h = catalog.front().ideal.semigroup();
    if (static_cast<Int>(classes.size()) * 2 != h.conductor()) {
      throw InternalCheckFailure("expected conductor/2 isomorphism classes");
    }
    for (const auto& cls : classes) {
      if (cls.size() != 2 || cls[0].gap != cls[1].gap ||
          cls[0].side == cls[1].side) {
        throw InternalCheckFailure(
            "an isomorphism class is not a below/above pair at one gap");
      }
    }
  }
  return classes;
}

}  // namespace sgr
