#include "sgr/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace sgr {

namespace {

// Additive membership sieve over [0, bound].
std::vector<bool> sieve_members(const std::vector<Int>& gens, Int bound) {
  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  member[0] = true;
  for (Int n = 1; n <= bound; ++n) {
    for (Int g : gens) {
      if (g > n) break;
      if (member[static_cast<std::size_t>(n - g)]) {
        member[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return member;
}

Int largest_miss(const std::vector<bool>& member) {
  for (Int n = static_cast<Int>(member.size()) - 1; n >= 0; --n) {
    if (!member[static_cast<std::size_t>(n)]) return n;
  }
  return -1;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(
    std::vector<Int> generators) {
  if (generators.empty()) throw EmptyGenerators();
  for (Int g : generators) {
    if (g <= 0) throw NonPositiveGenerator(g);
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  Int g = 0;
  for (Int a : generators) g = std::gcd(g, a);
  if (g != 1) throw GcdNotOne(g);

  auto data = std::make_shared<Data>();
  data->generators = generators;

  // A generator is redundant iff it is a sum of smaller generators, so a
  // single ascending DP pass identifies the minimal system.
  const Int max_gen = generators.back();
  {
    std::vector<bool> reach(static_cast<std::size_t>(max_gen) + 1, false);
    reach[0] = true;
    for (Int cand : generators) {
      if (reach[static_cast<std::size_t>(cand)]) continue;  // redundant
      data->minimal_generators.push_back(cand);
      for (Int n = cand; n <= max_gen; ++n) {
        if (!reach[static_cast<std::size_t>(n)] &&
            reach[static_cast<std::size_t>(n - cand)]) {
          reach[static_cast<std::size_t>(n)] = true;
        }
      }
    }
  }

  const std::vector<Int>& min_gens = data->minimal_generators;
  const Int min_gen = min_gens.front();

  // Sieve window: min_gen*max_gen + max_gen covers f(<a,b>) = ab - a - b for
  // two generators, and the conductor is certified by a run of min_gen
  // consecutive members. If certification fails (it should not), the window
  // doubles until it succeeds.
  constexpr Int kSieveLimit = Int{1} << 30;
  if (min_gen > (kSieveLimit - max_gen) / max_gen) {
    throw SieveOverflow("sieve bound " + std::to_string(min_gen) + "*" +
                        std::to_string(max_gen) + " + " +
                        std::to_string(max_gen) + " exceeds the supported " +
                        "range; this tool targets desk-scale semigroups");
  }
  Int bound = min_gen * max_gen + max_gen;
  std::vector<bool> member;
  Int frob = 0;
  for (;;) {
    member = sieve_members(min_gens, bound);
    frob = largest_miss(member);
    if (frob + min_gen <= bound) break;  // run certifies [frob+1, inf) in H
    if (bound > kSieveLimit / 2) {
      throw SieveOverflow("membership sieve did not stabilize below " +
                          std::to_string(kSieveLimit));
    }
    bound *= 2;
  }

  data->frobenius = frob;
  data->conductor = frob + 1;
  for (Int n = 0; n <= frob; ++n) {
    if (!member[static_cast<std::size_t>(n)]) data->gaps.push_back(n);
  }
  data->member_below_conductor.assign(
      member.begin(), member.begin() + static_cast<std::size_t>(frob + 1));

  // Symmetry by the counting definition, cross-checked against the pointwise
  // form: for every z in [0, f], exactly one of z, f - z lies in H.
  const Int members_below_c = data->conductor - static_cast<Int>(data->gaps.size());
  const bool counting = members_below_c == static_cast<Int>(data->gaps.size());
  bool pointwise = true;
  for (Int z = 0; z <= frob; ++z) {
    const bool in_low = member[static_cast<std::size_t>(z)];
    const bool in_high = member[static_cast<std::size_t>(frob - z)];
    if (in_low == in_high) {
      pointwise = false;
      break;
    }
  }
  if (counting != pointwise) {
    throw InternalCheckFailure(
        "symmetry test disagreement between counting and pointwise forms");
  }
  data->symmetric = counting;

  return NumericalSemigroup(std::move(data));
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n <= 0 || !contains(n)) throw NotAMember(n);
  std::vector<Int> least(static_cast<std::size_t>(n), -1);
  Int filled = 0;
  for (Int h = 0; filled < n; ++h) {
    if (!contains(h)) continue;
    auto& slot = least[static_cast<std::size_t>(h % n)];
    if (slot < 0) {
      slot = h;
      ++filled;
    }
  }
  return least;
}

std::vector<Int> NumericalSemigroup::pseudo_frobenius() const {
  if (conductor() == 0) return {-1};  // H = N
  std::vector<Int> pf;
  for (Int x : gaps()) {
    bool all_in = true;
    for (Int g : minimal_generators()) {
      if (!contains(x + g)) {
        all_in = false;
        break;
      }
    }
    if (all_in) pf.push_back(x);
  }
  return pf;
}

NumericalSemigroup make_semigroup(std::vector<Int> generators) {
  return NumericalSemigroup::from_generators(std::move(generators));
}

}  // namespace sgr
