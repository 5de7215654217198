#include "sgr/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "sgr/catalog.hpp"

namespace sgr {

namespace {

// The finite divisibility poset ({h in H | h <= bound}, h <= h' iff
// h' - h in H). Complements of bounded semigroup ideals are exactly the
// down-sets of this poset, so enumerating down-sets enumerates ideals
// without omission or double counting.
struct DivisibilityPoset {
  std::vector<Int> elems;                    // ascending members of H
  std::vector<std::vector<int>> below;       // indices strictly below elems[i]
  std::vector<int> index_of;                 // value -> index, -1 otherwise

  DivisibilityPoset(const NumericalSemigroup& h, Int bound) {
    for (Int n = 0; n <= bound; ++n) {
      if (h.contains(n)) elems.push_back(n);
    }
    index_of.assign(static_cast<std::size_t>(bound) + 1, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      index_of[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
    }
    below.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (h.contains(elems[i] - elems[j])) {
          below[i].push_back(static_cast<int>(j));
        }
      }
    }
  }

  int index(Int value) const {
    if (value < 0 || value >= static_cast<Int>(index_of.size())) return -1;
    return index_of[static_cast<std::size_t>(value)];
  }
};

// Depth-first enumeration of down-sets: elements are decided in decreasing
// order, and including an element forces every element below it. Each
// down-set is produced exactly once.
template <typename Fn>
void for_each_downset(const DivisibilityPoset& poset, Fn&& emit) {
  const int n = static_cast<int>(poset.elems.size());
  std::vector<char> in_t(static_cast<std::size_t>(n), 0);
  std::vector<int> forced(static_cast<std::size_t>(n), 0);

  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos < 0) {
      emit(in_t);
      return;
    }
    const auto i = static_cast<std::size_t>(pos);
    if (forced[i] == 0) {
      in_t[i] = 0;
      self(self, pos - 1);
    }
    in_t[i] = 1;
    for (int j : poset.below[i]) ++forced[static_cast<std::size_t>(j)];
    self(self, pos - 1);
    for (int j : poset.below[i]) --forced[static_cast<std::size_t>(j)];
    in_t[i] = 0;
  };
  dfs(dfs, n - 1);
}

// Minimal generators of E = H \ T. All minimal generators lie below
// max(bound + 1, c(H)) + min_gen, past which e - min_gen is already in E.
FractionalIdeal ideal_of_complement(const NumericalSemigroup& h, Int bound,
                                    const DivisibilityPoset& poset,
                                    const std::vector<char>& in_t) {
  const Int tail = std::max(bound + 1, h.conductor());
  const Int top = tail + h.min_generator();
  std::vector<Int> exps;
  for (Int e = 0; e <= top; ++e) {
    if (!h.contains(e)) continue;
    const int idx = poset.index(e);
    if (idx >= 0 && in_t[static_cast<std::size_t>(idx)]) continue;
    exps.push_back(e);
  }
  return FractionalIdeal(h, std::move(exps));
}

// dim_k soc(R/I) computed directly on the complement T, independently of
// quotient_profile: h is socle iff h + a_j leaves T for every generator.
std::size_t socle_size(const NumericalSemigroup& h,
                       const DivisibilityPoset& poset,
                       const std::vector<char>& in_t) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < in_t.size(); ++i) {
    if (!in_t[i]) continue;
    bool socle = true;
    for (Int g : h.minimal_generators()) {
      const int idx = poset.index(poset.elems[i] + g);
      if (idx >= 0 && in_t[static_cast<std::size_t>(idx)]) {
        socle = false;
        break;
      }
    }
    if (socle) ++count;
  }
  return count;
}

void sort_by_generators(std::vector<FractionalIdeal>& ideals) {
  std::sort(ideals.begin(), ideals.end(),
            [](const FractionalIdeal& a, const FractionalIdeal& b) {
              return a.min_generators() < b.min_generators();
            });
}

}  // namespace

std::size_t poset_size(const NumericalSemigroup& h, Int bound) {
  std::size_t n = 0;
  for (Int v = 0; v <= bound; ++v) {
    if (h.contains(v)) ++n;
  }
  return n;
}

std::vector<FractionalIdeal> enumerate_semigroup_ideals(
    const NumericalSemigroup& h, Int bound) {
  if (bound < 0) {
    throw PreconditionViolated("enumeration bound must be non-negative");
  }
  const DivisibilityPoset poset(h, bound);
  std::vector<FractionalIdeal> out;
  for_each_downset(poset, [&](const std::vector<char>& in_t) {
    out.push_back(ideal_of_complement(h, bound, poset, in_t));
  });
  sort_by_generators(out);
  return out;
}

std::vector<FractionalIdeal> enumerate_gorenstein_ideals(
    const NumericalSemigroup& h, Int bound) {
  if (bound < 0) {
    throw PreconditionViolated("enumeration bound must be non-negative");
  }
  const DivisibilityPoset poset(h, bound);
  std::vector<FractionalIdeal> out;
  for_each_downset(poset, [&](const std::vector<char>& in_t) {
    if (socle_size(h, poset, in_t) != 1) return;
    FractionalIdeal ideal = ideal_of_complement(h, bound, poset, in_t);
    if (ideal.mu() >= 2) out.push_back(std::move(ideal));
  });
  sort_by_generators(out);
  return out;
}

VerificationReport verify_theorem(const NumericalSemigroup& h, Int slack) {
  if (!h.symmetric()) {
    throw NotSymmetric("verify_theorem requires a symmetric semigroup");
  }
  if (slack < 0) {
    throw PreconditionViolated("slack must be non-negative");
  }
  VerificationReport report{h, 0, {}, {}, 0, 0, 0, false, {}, {}};
  report.bound = std::max<Int>(0, 2 * h.frobenius() + slack);
  report.conductor = h.conductor();
  report.oracle_ideals = enumerate_gorenstein_ideals(h, report.bound);
  for (const CatalogEntry& entry : build_catalog(h)) {
    report.formula_ideals.push_back(entry.ideal);
  }
  sort_by_generators(report.formula_ideals);
  report.oracle_count = report.oracle_ideals.size();
  report.formula_count = report.formula_ideals.size();

  std::set_difference(
      report.oracle_ideals.begin(), report.oracle_ideals.end(),
      report.formula_ideals.begin(), report.formula_ideals.end(),
      std::back_inserter(report.only_in_oracle),
      [](const FractionalIdeal& a, const FractionalIdeal& b) {
        return a.min_generators() < b.min_generators();
      });
  std::set_difference(
      report.formula_ideals.begin(), report.formula_ideals.end(),
      report.oracle_ideals.begin(), report.oracle_ideals.end(),
      std::back_inserter(report.only_in_formula),
      [](const FractionalIdeal& a, const FractionalIdeal& b) {
        return a.min_generators() < b.min_generators();
      });
  report.pass = report.only_in_oracle.empty() &&
                report.only_in_formula.empty() &&
                static_cast<Int>(report.oracle_count) == report.conductor;
  return report;
}

}  // namespace sgr
