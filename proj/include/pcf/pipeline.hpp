#pragma once

#include <optional>
#include <vector>

#include "pcf/cf.hpp"
#include "pcf/field.hpp"
#include "pcf/interval.hpp"
#include "pcf/poly.hpp"
#include "pcf/transform.hpp"

namespace pcf {

// (c, M): the represented number is M applied to the series limit S(c).
struct Representation {
    Rat c;
    Moebius M;
};

struct RootSelector {
    std::optional<int> index;  // ascending among real roots
    std::optional<Interval> interval;

    static RootSelector by_index(int i) { return {i, std::nullopt}; }
    static RootSelector by_interval(Interval iv) { return {std::nullopt, std::move(iv)}; }
};

// Throws ReducibleError unless P is an irreducible cubic over Q.
void check_irreducible_cubic(const Poly& P);

// Isolating interval of the selected real root. Throws SelectorError if the
// selector does not resolve to exactly one root.
Interval select_root(const Poly& P, const RootSelector& sel);

// Diagnostics from represent(): which branch fired and what the chain saw.
struct RepresentTrace {
    RootLabel label = RootLabel::unique_real;  // label of the matched root pre-phi
    int phi_steps = 0;
    Rat c0;         // normalized c before phi steps
    bool boosted = false;
    int attempts = 0;
};

// Full constructive pipeline: depress, boost the ratio if needed, normalize
// to x^3 - cx + c, classify the selected root and apply 0/1/2 phi steps.
// Guarantees |c| of the result >= max(min_abs_c, floor), floor = 29/2 for
// totally real fields and 297/40 otherwise; since a phi step pushes large c
// toward 27/4, the boost aims for a window of c0 from which every branch
// lands above the floor, retrying with a branch-specific window if needed.
Representation represent(const Poly& P, const RootSelector& sel,
                         const Rat& min_abs_c = Rat(81, 4), RepresentTrace* trace = nullptr);

// splice_moebius(M, euler_to_cf(s_series(c)))
PolyCF to_cf(const Representation& rep);

// Root of x^3 - cx + c that S(c) converges to (beta2, or the unique real root).
Interval series_root(const Rat& c, const Rat& eps);

struct VerifyReport {
    struct Row {
        long n;
        Rat err_lo, err_hi;  // certified bounds on |value(n) - root|
    };
    std::vector<Row> rows;
    bool pass = false;
    Rat tol;
    RateEstimate rate{};
    double expected_E = 0;  // 4|c|/27
    bool rate_available = false;
};

VerifyReport verify(const Representation& rep, const Poly& P, const RootSelector& sel,
                    long depth, const Rat& tol);

} // namespace pcf
