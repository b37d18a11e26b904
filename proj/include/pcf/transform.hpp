#pragma once

#include <array>

#include "pcf/field.hpp"
#include "pcf/interval.hpp"
#include "pcf/poly.hpp"

namespace pcf {

// r(P) = 4(3ac - b^2)^3 / (27 a^2 d - 9abc + 2b^3)^2, invariant under
// affine maps of the root. Throws RatioUndefinedError on zero denominator.
Rat ratio(const Poly& P);

struct Depressed {
    Poly poly;    // monic x^3 + ax + b
    Moebius map;  // sends a root of `poly` to the corresponding root of the input
};
Depressed depress(const Poly& P);

struct Boost {
    Rat D;
    Poly charpoly;  // x^3 + ex + f of g = theta^2 + D theta + 2a/3
    FieldElem g;
};
// Finds rational D with |ratio(charpoly)| >= target by bisecting toward a
// real root of f(D). P must be monic depressed irreducible, target > 1.
// With cap > target the result additionally satisfies |ratio| <= cap,
// located by bisecting the threshold crossing |ratio| = target.
Boost boost_ratio(const Poly& P, const Rat& target, const Rat& cap = 0);

struct Normalized {
    Rat c;        // |c| = (27/4)|ratio(P)|
    Moebius map;  // sends a root of x^3 - cx + c to the corresponding root of P
};
Normalized normalize_c(const Poly& P);

enum class RootLabel { beta1, beta2, beta3, unique_real };
const char* label_name(RootLabel);

// Labels a root of x^3 - cx + c by exact comparison against -3, 1, 3/2
// (c > 27/4), or unique_real (c < -27/4).
RootLabel classify_root(const Rat& c, Interval root_iv);

struct PhiStep {
    Rat C;        // 27 c^2 / (2c - 27)^2
    Moebius phi;  // x -> 3c(x - 3) / ((2c - 27) x)
    // image label of beta1, beta2, beta3 under phi
    std::array<RootLabel, 3> perm;
};
// Requires c > 27/4; throws ReducibleError at c = 27/2.
PhiStep phi_step(const Rat& c);

// x^3 - cx + c
Poly c_poly(const Rat& c);

} // namespace pcf
