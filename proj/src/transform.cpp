#include "pcf/transform.hpp"

#include <optional>

#include "pcf/errors.hpp"
#include "pcf/roots.hpp"

namespace pcf {

Rat ratio(const Poly& P) {
    if (P.degree() != 3) throw DegreeError("ratio: degree != 3");
    const Rat &a = P[3], &b = P[2], &c = P[1], &d = P[0];
    Rat den = 27 * a * a * d - 9 * a * b * c + 2 * b * b * b;
    if (den == 0) throw RatioUndefinedError("ratio: zero denominator");
    Rat num = 3 * a * c - b * b;
    return 4 * num * num * num / (den * den);
}

Depressed depress(const Poly& P) {
    if (P.degree() != 3) throw DegreeError("depress: degree != 3");
    Poly M = P.monic();
    Rat shift = M[2] / 3;
    Poly dep = M.shifted_arg(-shift);  // roots of dep are roots of M plus shift
    return {dep, Moebius(Rat(1), -shift, Rat(0), Rat(1))};
}

Boost boost_ratio(const Poly& P, const Rat& target, const Rat& cap) {
    if (P.degree() != 3 || P.lc() != 1 || P[2] != 0)
        throw Error("boost_ratio: polynomial must be monic depressed");
    if (target <= 1) throw Error("boost_ratio: target must exceed 1");
    if (cap != 0 && cap <= target) throw Error("boost_ratio: cap must exceed target");
    const Rat &a = P[1], &b = P[0];
    if (b == 0) throw ReducibleError("boost_ratio: zero constant term");

    // e(D), f(D): coefficients of the charpoly of g = theta^2 + D theta + 2a/3.
    Poly e(std::vector<Rat>{-a * a / 3, 3 * b, a});
    Poly f(std::vector<Rat>{-(b * b + 2 * a * a * a / 27), -a * b, -2 * a * a / 3, b});

    auto ratio_at = [&](const Rat& D) -> Rat {
        Rat ev = e.eval(D), fv = f.eval(D);
        // f has no rational root when P is irreducible
        return 4 * ev * ev * ev / (27 * fv * fv);
    };
    auto make = [&](const Rat& D) {
        FieldElem th = FieldElem::theta(P);
        FieldElem g = th * th + th * D + Rat(2 * a / 3);
        Poly cp(std::vector<Rat>{f.eval(D), e.eval(D), Rat(0), Rat(1)});
        return Boost{D, cp, g};
    };

    Poly fsf = f;
    if (!is_squarefree(fsf)) fsf = divmod(f, poly_gcd(f, f.derivative())).first;
    std::optional<Rat> hit;  // |ratio| >= target
    for (const Interval& iv0 : isolate_real_roots(fsf)) {
        Interval iv = iv0;
        for (int step = 0; step < 4096 && !hit; ++step) {
            Rat D = iv.mid();
            if (rat_abs(ratio_at(D)) >= target) hit = D;
            else iv = refine_step(fsf, iv);
        }
        if (hit) break;
    }
    if (!hit) throw Error("boost_ratio: search failed");  // ratio blows up at roots of f
    if (cap == 0 || rat_abs(ratio_at(*hit)) <= cap) return make(*hit);

    // Overshot the window [target, cap]. Find a point where |ratio| < target
    // and bisect the crossing: |ratio| is continuous away from poles of f, and
    // poles lie strictly inside the >= target region, so the bisection closes
    // in on a crossing point with |ratio| = target < cap.
    std::optional<Rat> far;
    for (int k = 0; k <= 40 && !far; ++k) {
        Rat step = pow_rat(Rat(2), k) - 1;
        for (const Rat& D :
             std::vector<Rat>{Rat(*hit + step), Rat(*hit - step), step, Rat(-step)})
            if (f.eval(D) != 0 && rat_abs(ratio_at(D)) < target) {
                far = D;
                break;
            }
    }
    if (!far) throw Error("boost_ratio: no point below target found");
    Rat lo = *far, hi = *hit;
    for (int step = 0; step < 100000; ++step) {
        if (rat_abs(ratio_at(hi)) <= cap) return make(hi);
        Rat mid = (lo + hi) / 2;
        if (f.eval(mid) != 0 && rat_abs(ratio_at(mid)) >= target) hi = mid;
        else lo = mid;
    }
    throw Error("boost_ratio: window search failed");
}

Normalized normalize_c(const Poly& P) {
    Rat r = ratio(P);  // throws if undefined
    if (r == 0) throw RatioUndefinedError("normalize_c: zero ratio, boost first");
    Poly M = P.monic();
    const Rat &a2 = M[2], &a1 = M[1], &a0 = M[0];
    Rat den = 27 * a0 + 2 * a2 * a2 * a2 - 9 * a1 * a2;
    Rat lambda = (9 * a2 * a2 - 27 * a1) / den;
    FieldElem u = FieldElem::theta(M);
    FieldElem v = (u + Rat(a2 / 3)) * lambda;
    Poly cp = elem_charpoly(v);
    if (cp[2] != 0 || cp[0] != -cp[1])
        throw Error("normalize_c: charpoly not of the form x^3 - cx + c");
    Rat c = cp[0];
    if (rat_abs(c) != Rat(27) / 4 * rat_abs(r))
        throw Error("normalize_c: |c| != (27/4)|ratio|");
    // u = v/lambda - a2/3
    return {c, Moebius(1 / lambda, -a2 / 3, Rat(0), Rat(1))};
}

const char* label_name(RootLabel l) {
    switch (l) {
        case RootLabel::beta1: return "beta1";
        case RootLabel::beta2: return "beta2";
        case RootLabel::beta3: return "beta3";
        case RootLabel::unique_real: return "unique_real";
    }
    return "?";
}

Poly c_poly(const Rat& c) { return Poly(std::vector<Rat>{c, -c, Rat(0), Rat(1)}); }

RootLabel classify_root(const Rat& c, Interval iv) {
    if (rat_abs(c) <= Rat(27) / 4) throw Error("classify_root: |c| <= 27/4");
    if (c < 0) return RootLabel::unique_real;
    Poly P = c_poly(c);
    const Rat m3(-3), one(1), th(3, 2);
    for (int step = 0; step < 100000; ++step) {
        if (iv.hi < m3) return RootLabel::beta1;
        if (iv.lo > one && iv.hi < th) return RootLabel::beta2;
        if (iv.lo > th) return RootLabel::beta3;
        if (iv.is_point()) break;
        iv = refine_step(P, iv);
    }
    throw Error("classify_root: root coincides with a cut point (caller bug)");
}

PhiStep phi_step(const Rat& c) {
    if (c <= Rat(27) / 4) throw Error("phi_step: requires c > 27/4");
    if (c == Rat(27) / 2) throw ReducibleError("phi_step: c = 27/2 makes x^3-cx+c reducible");
    Rat t = 2 * c - 27;
    Rat C = 27 * c * c / (t * t);
    Moebius phi(3 * c, -9 * c, t, Rat(0));
    std::array<RootLabel, 3> perm;
    if (c < Rat(27) / 2)
        perm = {RootLabel::beta1, RootLabel::beta3, RootLabel::beta2};
    else
        perm = {RootLabel::beta3, RootLabel::beta1, RootLabel::beta2};
    return {C, phi, perm};
}

} // namespace pcf
