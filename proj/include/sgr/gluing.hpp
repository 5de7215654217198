#pragma once

#include <string>
#include <vector>

#include "sgr/semigroup.hpp"

namespace sgr {

// H = <d1*H1, d2*H2> where d1 lies in H2 (and is not one of its minimal
// generators), d2 lies in H1 likewise, and gcd(d1, d2) = 1.
struct GluingSpec {
    NumericalSemigroup h1;
    NumericalSemigroup h2;
    Int d1;
    Int d2;
    NumericalSemigroup glued;
};

GluingSpec glue(const NumericalSemigroup& h1, const NumericalSemigroup& h2,
                Int d1, Int d2);

// The three-generator symmetric family <d*a, d*b, c>: a gluing of <a,b> with N.
// Its coordinate ring is a complete intersection k[X,Y,Z]/(X^b - Y^a, Z^d - X^m Y^n)
// where c = a*m + b*n, and the top degree of the ring is d(ab-a-b) + (d-1)c.
struct ThreeGenSymmetric {
    Int a;
    Int b;
    Int c;
    Int d;
    Int presentation_m;
    Int presentation_n;
    Int a_invariant;
    Int predicted_count;
    NumericalSemigroup glued;
};

ThreeGenSymmetric three_gen_symmetric(Int a, Int b, Int c, Int d);

// True iff the closed-form count a_invariant + 1 matches the size of the
// constructed catalog of the glued semigroup.
bool predicted_vs_actual(const ThreeGenSymmetric& spec);

std::string presentation_string(const ThreeGenSymmetric& spec);

}  // namespace sgr
