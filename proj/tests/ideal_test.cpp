#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "sgr/errors.hpp"
#include "sgr/ideal.hpp"
#include "sgr/semigroup.hpp"
#include "test_util.hpp"

using sgr::FractionalIdeal;
using sgr::Int;
using vec = std::vector<Int>;

TEST_CASE("canonical generators") {
    auto h = sgr::make_semigroup({3, 4});
    CHECK(sgr::ideal_from_generators(h, {3, 4, 6}).min_generators() == vec{3, 4});
    CHECK(sgr::ideal_from_generators(h, {0}).min_generators() == vec{0});
    auto h467 = sgr::make_semigroup({4, 6, 7});
    CHECK(sgr::ideal_from_generators(h467, {4, 6, 7}).min_generators() ==
          vec{4, 6, 7});
    CHECK_THROWS_AS(sgr::ideal_from_generators(h, {}), sgr::EmptyGenerators);
}

TEST_CASE("canonical form is idempotent and order-insensitive") {
    auto h = sgr::make_semigroup({4, 6, 7});
    const std::vector<vec> inputs = {{9, 4, 13, 6}, {-2, 5, 3}, {0, 1, 2, 3},
                                     {10, 10, 14, 17}, {-5, -3}};
    for (const auto& gens : inputs) {
        auto ideal = sgr::ideal_from_generators(h, gens);
        auto again = sgr::ideal_from_generators(h, ideal.min_generators());
        CHECK(ideal == again);
        auto mins = ideal.min_generators();
        CHECK(std::is_sorted(mins.begin(), mins.end()));
        // pairwise differences of canonical generators avoid H
        for (Int a : mins)
            for (Int b : mins)
                if (a != b) CHECK_FALSE(h.contains(a - b));
    }
}

TEST_CASE("canonical generators match the definitional extraction") {
    auto h = sgr::make_semigroup({3, 5});
    const std::vector<vec> inputs = {{3, 5, 6, 7}, {6, 8, 9, 10, 11},
                                     {-1, 0, 4}, {2, 3, 4, 5, 6, 7}};
    for (const auto& gens : inputs) {
        CAPTURE(gens);
        auto ideal = sgr::ideal_from_generators(h, gens);
        // window of the exponent set wide enough to cover every generator
        Int lo = *std::min_element(gens.begin(), gens.end());
        Int hi = *std::max_element(gens.begin(), gens.end()) + h.conductor();
        vec window;
        for (Int e = lo; e <= hi; ++e)
            if (testutil::ideal_contains({3, 5}, gens, e)) window.push_back(e);
        CHECK(ideal.min_generators() ==
              testutil::minimal_generators_of({3, 5}, window));
    }
}

TEST_CASE("ideal membership") {
    auto h = sgr::make_semigroup({3, 4});
    auto ideal = sgr::ideal_from_generators(h, {3, 8});
    for (Int e = -5; e <= 25; ++e)
        CHECK(ideal.contains(e) == testutil::ideal_contains({3, 4}, {3, 8}, e));
    CHECK(ideal.integral());
    CHECK_FALSE(sgr::ideal_from_generators(h, {-1, 0}).integral());
    CHECK(sgr::unit_ideal(h).integral());
}

TEST_CASE("mu") {
    auto h34 = sgr::make_semigroup({3, 4});
    CHECK(sgr::ideal_from_generators(h34, {3, 8}).mu() == 2);
    CHECK(sgr::unit_ideal(h34).mu() == 1);
    auto h467 = sgr::make_semigroup({4, 6, 7});
    CHECK(sgr::ideal_from_generators(h467, {4, 6, 7}).mu() == 3);
}

TEST_CASE("colon into the ring") {
    auto h = sgr::make_semigroup({3, 4});
    CHECK(sgr::colon_into_ring(h, 2).min_generators() == vec{4, 6});
    CHECK(sgr::colon_into_ring(h, 5).min_generators() == vec{3, 4});
    auto h467 = sgr::make_semigroup({4, 6, 7});
    CHECK(sgr::colon_into_ring(h467, 9).min_generators() == vec{4, 6, 7});
    CHECK_THROWS_AS(sgr::colon_into_ring(h, 0), sgr::PreconditionViolated);
    CHECK_THROWS_AS(sgr::colon_into_ring(h, -4), sgr::PreconditionViolated);
    // m a member gives the unit ideal
    CHECK(sgr::colon_into_ring(h, 3).min_generators() == vec{0});
}

TEST_CASE("colon into the ring matches a definitional window scan") {
    const std::vector<vec> inputs = {{3, 4}, {3, 5}, {4, 6, 7}, {3, 4, 5},
                                     {5, 6, 7, 8}};
    for (const auto& gens : inputs) {
        auto h = sgr::make_semigroup(gens);
        Int top = h.conductor() + h.max_generator() + 10;
        auto members = testutil::combo_members(gens, top + h.frobenius() + 2);
        for (Int m = 1; m <= h.frobenius() + 1; ++m) {
            CAPTURE(gens);
            CAPTURE(m);
            vec window;
            for (Int e = 0; e <= top; ++e)
                if (members.count(e) && members.count(e + m)) window.push_back(e);
            CHECK(sgr::colon_into_ring(h, m).min_generators() ==
                  testutil::minimal_generators_of(gens, window));
        }
    }
}

TEST_CASE("shift") {
    auto h = sgr::make_semigroup({3, 4});
    auto ideal = sgr::ideal_from_generators(h, {3, 8});
    CHECK(sgr::shift(ideal, 1).min_generators() == vec{4, 9});
    CHECK(sgr::shift(ideal, 0) == ideal);
    auto other = sgr::ideal_from_generators(h, {4, 6});
    CHECK(sgr::shift(sgr::shift(other, 7), -7) == other);
    CHECK(sgr::shift(other, 3).mu() == other.mu());
}

TEST_CASE("general colon of two ideals") {
    auto h = sgr::make_semigroup({3, 4});
    auto unit = sgr::unit_ideal(h);
    CHECK(sgr::colon(unit, sgr::ideal_from_generators(h, {3, 8}))
              .min_generators() == vec{0, 1});
    CHECK(sgr::colon(unit, unit) == unit);
    auto i46 = sgr::ideal_from_generators(h, {4, 6});
    CHECK(sgr::colon(unit, sgr::colon(unit, i46)) == i46);

    auto other = sgr::make_semigroup({2, 5});
    CHECK_THROWS_AS(
        sgr::colon(unit, sgr::unit_ideal(other)), sgr::MixedSemigroups);
}

TEST_CASE("colon matches its definition on a window") {
    auto h = sgr::make_semigroup({4, 6, 7});
    const vec hg = {4, 6, 7};
    const std::vector<std::pair<vec, vec>> cases = {
        {{0}, {4, 7}}, {{4, 6}, {6, 7}}, {{-2, 1}, {4, 6, 7}},
        {{4, 6, 7}, {4, 6, 7}}, {{7, 10}, {0, 9}}};
    for (const auto& [xg, yg] : cases) {
        CAPTURE(xg);
        CAPTURE(yg);
        auto x = sgr::ideal_from_generators(h, xg);
        auto y = sgr::ideal_from_generators(h, yg);
        auto result = sgr::colon(x, y);
        Int xmin = *std::min_element(xg.begin(), xg.end());
        Int ymin = *std::min_element(yg.begin(), yg.end());
        Int lo = xmin - ymin - 3;
        Int hi = xmin + h.conductor() + h.max_generator() + 3;
        Int ytop = hi + h.conductor() + h.max_generator() + 3;
        vec window;
        for (Int z = lo; z <= hi; ++z) {
            bool in = true;
            for (Int e = ymin; e <= ytop && in; ++e)
                if (testutil::ideal_contains(hg, yg, e) &&
                    !testutil::ideal_contains(hg, xg, z + e))
                    in = false;
            if (in) window.push_back(z);
        }
        CHECK(result.min_generators() ==
              testutil::minimal_generators_of(hg, window));
    }
}

TEST_CASE("quotient profiles") {
    auto h = sgr::make_semigroup({3, 4});

    auto p46 = sgr::quotient_profile(sgr::ideal_from_generators(h, {4, 6}));
    CHECK(p46.a_invariant == 3);
    CHECK(p46.gorenstein);

    auto pmax = sgr::quotient_profile(sgr::ideal_from_generators(h, {3, 4}));
    CHECK(pmax.a_invariant == 0);
    CHECK(pmax.socle_degrees == vec{0});
    CHECK(pmax.cm_type == 1);

    auto p68 = sgr::quotient_profile(sgr::ideal_from_generators(h, {6, 8}));
    CHECK(p68.a_invariant == 7);

    CHECK_THROWS_AS(
        sgr::quotient_profile(sgr::ideal_from_generators(h, {-1, 0})),
        sgr::NotIntegral);
    CHECK_THROWS_AS(sgr::quotient_profile(sgr::unit_ideal(h)), sgr::UnitIdeal);
}

TEST_CASE("quotient profile against a direct scan") {
    const std::vector<vec> semigroups = {{3, 4}, {4, 6, 7}, {3, 4, 5}};
    for (const auto& hg : semigroups) {
        auto h = sgr::make_semigroup(hg);
        std::vector<vec> ideals = {{h.minimal_generators()},
                                   {h.conductor() + 1, h.conductor() + 2}};
        ideals.push_back({hg[0], hg[0] + hg[1]});
        for (const auto& ig : ideals) {
            CAPTURE(hg);
            CAPTURE(ig);
            auto profile =
                sgr::quotient_profile(sgr::ideal_from_generators(h, ig));
            Int top = *std::max_element(ig.begin(), ig.end()) + h.conductor();
            auto members = testutil::combo_members(hg, top + h.max_generator());
            vec support;
            for (Int n = 0; n <= top; ++n)
                if (members.count(n) && !testutil::ideal_contains(hg, ig, n))
                    support.push_back(n);
            REQUIRE_FALSE(support.empty());
            CHECK(profile.a_invariant == support.back());
            vec socle;
            for (Int n : support) {
                bool all_in = true;
                for (Int g : h.minimal_generators())
                    if (!testutil::ideal_contains(hg, ig, n + g)) all_in = false;
                if (all_in) socle.push_back(n);
            }
            CHECK(profile.socle_degrees == socle);
            CHECK(profile.cm_type == socle.size());
            CHECK(profile.gorenstein == (socle.size() == 1));
        }
    }
}

TEST_CASE("largest missing exponent shifts along with the ideal") {
    // Note a(R/I) itself does not shift additively: it is the largest
    // *member of H* outside E, and shifting can move the top of the
    // complement onto or off gaps of H. The largest integer outside E is
    // the quantity that shifts.
    auto h = sgr::make_semigroup({3, 5});
    auto ideal = sgr::ideal_from_generators(h, {5, 9});
    auto largest_missing = [](const sgr::FractionalIdeal& i) {
        Int n = i.min_generators().front() + i.semigroup().conductor();
        while (i.contains(n)) --n;
        return n;
    };
    const Int base = largest_missing(ideal);
    CHECK(base == 7);
    CHECK(sgr::quotient_profile(ideal).a_invariant == 6);  // 7 is a gap of H
    for (Int m = -3; m <= 4; ++m) {
        if (m == 0) continue;
        auto shifted = sgr::shift(ideal, m);
        CHECK(shifted.mu() == ideal.mu());
        CHECK(shifted.min_generators() == vec{5 + m, 9 + m});
        CHECK(largest_missing(shifted) == base + m);
    }
    // The concrete failure of naive additivity: shifting by 1 raises a(R/I)
    // by 2 because 8 in H sits just past the gap 7.
    CHECK(sgr::quotient_profile(sgr::shift(ideal, 1)).a_invariant == 8);
}
