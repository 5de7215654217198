#include "sgr/gluing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgr/catalog.hpp"
#include "sgr/errors.hpp"

namespace sgr {

namespace {

bool is_minimal_generator(const NumericalSemigroup& h, Int v) {
    const auto& gens = h.minimal_generators();
    return std::find(gens.begin(), gens.end(), v) != gens.end();
}

}  // namespace

GluingSpec glue(const NumericalSemigroup& h1, const NumericalSemigroup& h2,
                Int d1, Int d2) {
    if (!h2.contains(d1)) throw D1NotInH2(d1);
    if (is_minimal_generator(h2, d1)) throw DIsMinimalGenerator(d1);
    if (!h1.contains(d2)) throw D2NotInH1(d2);
    if (is_minimal_generator(h1, d2)) throw DIsMinimalGenerator(d2);
    if (std::gcd(d1, d2) != 1) throw NotCoprime(d1, d2);

    std::vector<Int> gens;
    for (Int g : h1.minimal_generators()) gens.push_back(d1 * g);
    for (Int g : h2.minimal_generators()) gens.push_back(d2 * g);
    NumericalSemigroup glued = NumericalSemigroup::from_generators(gens);

    std::sort(gens.begin(), gens.end());
    for (Int g : glued.minimal_generators()) {
        if (!std::binary_search(gens.begin(), gens.end(), g))
            throw InternalCheckFailure("glued semigroup grew a generator outside the scaled union");
    }
    return GluingSpec{h1, h2, d1, d2, glued};
}

ThreeGenSymmetric three_gen_symmetric(Int a, Int b, Int c, Int d) {
    if (a < 2 || b < 2)
        throw PreconditionViolated("a and b must both be at least 2");
    if (std::gcd(a, b) != 1) throw NotCoprime(a, b);

    NumericalSemigroup base = NumericalSemigroup::from_generators({a, b});
    if (c <= 0) throw PreconditionViolated("c must be positive");
    if (!base.contains(c)) throw CNotInSemigroup(c);
    if (c == a || c == b) throw DIsMinimalGenerator(c);
    if (d <= 1) throw PreconditionViolated("d must exceed 1");
    if (std::gcd(c, d) != 1) throw NotCoprime(c, d);

    // Unique n in [0, a) with c = a*m + b*n; m >= 0 follows from c being a member.
    Int n = 0;
    while ((c - b * n) % a != 0) ++n;
    Int m = (c - b * n) / a;
    if (n < 0 || n >= a || m < 0 || a * m + b * n != c)
        throw InternalCheckFailure("presentation exponents out of range");

    GluingSpec spec = glue(base, NumericalSemigroup::from_generators({1}), d, c);
    const NumericalSemigroup& glued = spec.glued;

    Int a_inv = d * (a * b - a - b) + (d - 1) * c;
    Int predicted = a_inv + 1;
    if (!glued.symmetric())
        throw InternalCheckFailure("glued three-generator semigroup is not symmetric");
    if (a_inv != glued.frobenius())
        throw InternalCheckFailure("closed-form top degree disagrees with frobenius");
    if (predicted != glued.conductor())
        throw InternalCheckFailure("closed-form count disagrees with conductor");

    return ThreeGenSymmetric{a, b, c, d, m, n, a_inv, predicted, glued};
}

bool predicted_vs_actual(const ThreeGenSymmetric& spec) {
    return static_cast<std::size_t>(spec.predicted_count) ==
           build_catalog(spec.glued).size();
}

std::string presentation_string(const ThreeGenSymmetric& spec) {
    return "k[X,Y,Z]/(X^" + std::to_string(spec.b) + " - Y^" +
           std::to_string(spec.a) + ", Z^" + std::to_string(spec.d) + " - X^" +
           std::to_string(spec.presentation_m) + " Y^" +
           std::to_string(spec.presentation_n) + ")";
}

}  // namespace sgr
