#include "pcf/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "pcf/errors.hpp"
#include "pcf/roots.hpp"
#include "pcf/series.hpp"

namespace pcf {

namespace {

std::vector<Int> divisors(Int n) {
    n = abs(n);
    std::vector<Int> out;
    if (n == 0) return out;
    for (Int i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            out.push_back(i);
            out.push_back(n / i);
        }
    return out;
}

// Scale to integer coefficients with positive content-free form.
Poly integer_primitive(const Poly& P) { return P.primitive() * Rat(sgn(P.lc())); }

} // namespace

void check_irreducible_cubic(const Poly& P) {
    if (P.degree() != 3) throw DegreeError("represent: polynomial must be cubic");
    Poly Z = integer_primitive(P);
    if (Z[0] == 0) throw ReducibleError("reducible: zero constant term");
    // A rational root p/q (lowest terms) has q | leading coefficient; locate
    // candidates from the isolating intervals instead of factoring Z[0].
    std::vector<Interval> real_roots = isolate_real_roots(Z);
    for (const Int& q : divisors(Z.lc().get_num())) {
        for (const Interval& iv0 : real_roots) {
            if (iv0.is_point()) throw ReducibleError("reducible: rational root found");
            Interval iv = iv0;
            Interval scaled(iv.lo * Rat(q), iv.hi * Rat(q));
            while (scaled.width() >= 1) {
                iv = refine_step(Z, iv);
                scaled = Interval(iv.lo * Rat(q), iv.hi * Rat(q));
            }
            Int lo, hi;
            mpz_cdiv_q(lo.get_mpz_t(), scaled.lo.get_num_mpz_t(), scaled.lo.get_den_mpz_t());
            mpz_fdiv_q(hi.get_mpz_t(), scaled.hi.get_num_mpz_t(), scaled.hi.get_den_mpz_t());
            for (Int p = lo; p <= hi; ++p) {
                Rat cand(p, q);
                cand.canonicalize();
                if (Z.eval(cand) == 0) throw ReducibleError("reducible: rational root found");
            }
        }
    }
}

Interval select_root(const Poly& P, const RootSelector& sel) {
    std::vector<Interval> roots = isolate_real_roots(P);
    if (sel.index) {
        int i = *sel.index;
        if (i < 0 || i >= (int)roots.size())
            throw SelectorError("selector: root index out of range (have " +
                                std::to_string(roots.size()) + " real roots)");
        return roots[i];
    }
    if (!sel.interval) throw SelectorError("selector: empty");
    const Interval& user = *sel.interval;
    auto chain = sturm_sequence(P);
    if (count_roots(chain, user.lo, user.hi) != 1)
        throw SelectorError("selector: interval does not isolate exactly one root");
    for (Interval iv : roots) {
        for (int step = 0; step < 100000; ++step) {
            if (!iv.intersects(user)) break;
            if (user.contains(iv)) return iv;
            iv = refine_step(P, iv);
        }
    }
    throw SelectorError("selector: no isolated root inside interval");
}

namespace {

// Decides whether the Moebius image of the root isolated by iv is the root
// isolated by target. The image of the root is itself an algebraic number
// distinct from target's endpoints, so refinement always decides.
enum class Fit { inside, outside };
Fit moebius_image_fit(const Moebius& M, const Poly& src, Interval iv, const Interval& target) {
    for (int step = 0; step < 100000; ++step) {
        auto img = M.apply(iv);
        if (img) {
            if (!img->intersects(target)) return Fit::outside;
            if (target.contains(*img)) return Fit::inside;
        }
        if (iv.is_point()) {
            Rat y = M.apply(iv.lo);
            return target.contains(y) ? Fit::inside : Fit::outside;
        }
        iv = refine_step(src, iv);
    }
    throw Error("moebius_image_fit: no decision");
}

} // namespace

Interval series_root(const Rat& c, const Rat& eps) {
    Poly P = c_poly(c);
    for (const Interval& iv : isolate_real_roots(P)) {
        RootLabel l = classify_root(c, iv);
        if (l == RootLabel::unique_real || l == RootLabel::beta2)
            return refine_root(P, iv, eps);
    }
    throw Error("series_root: no beta2 root found");
}

namespace {

// Dyadic rational near a double guide value.
Rat approx_rat(double x) { return Rat((long)std::llround(x * 1048576.0), 1048576); }

int phi_steps_for(RootLabel l) {
    switch (l) {
        case RootLabel::beta3: return 1;
        case RootLabel::beta1: return 2;
        default: return 0;
    }
}

} // namespace

Representation represent(const Poly& P, const RootSelector& sel, const Rat& min_abs_c,
                         RepresentTrace* trace) {
    if (min_abs_c < Rat(27, 4)) throw Error("represent: min_abs_c must be >= 27/4");
    check_irreducible_cubic(P);
    Poly Pz = integer_primitive(P);
    Interval selected = select_root(Pz, sel);
    Rat disc = discriminant_cubic(Pz);

    // Floor on the final |c|: convergence margin, and c0 > 27/2 for the
    // totally real two-step branch.
    Rat floor_c = disc > 0 ? Rat(29, 2) : Rat(297, 40);  // 27/2 + 1, (27/4)(11/10)
    Rat required = std::max(min_abs_c, floor_c);

    Depressed dep = depress(Pz);

    struct Candidate {
        Rat c;
        Moebius M;
        RootLabel label;
        int phi_steps;
        Rat c0;
        bool ok;
    };

    // Runs the chain once; `window` bounds |ratio| for the boost (cap 0 = none).
    auto build = [&](const std::optional<std::pair<Rat, Rat>>& window) -> Candidate {
        Poly work = dep.poly;  // monic x^3 + ax + b
        Moebius M = dep.map;   // work-root -> Pz-root
        if (window) {
            Boost boost = boost_ratio(work, window->first, window->second);
            // theta = M2(g): relate the boosted generator back to the root of `work`.
            Moebius M2 = moebius_relate(boost.g, FieldElem::theta(work));
            M = M * M2;
            work = boost.charpoly;
        }
        Normalized norm = normalize_c(work);
        M = M * norm.map;
        Rat c = norm.c;

        // Identify which real root of x^3 - cx + c maps onto the selected root.
        Poly Pc = c_poly(c);
        std::optional<Interval> matched;
        for (const Interval& iv : isolate_real_roots(Pc))
            if (moebius_image_fit(M, Pc, iv, selected) == Fit::inside) {
                matched = iv;
                break;
            }
        if (!matched) throw Error("represent: no root of x^3-cx+c maps to the selected root");

        RootLabel label = classify_root(c, *matched);
        Candidate cand{c, M, label, 0, c, true};
        if (label == RootLabel::beta3) {
            PhiStep step = phi_step(c);
            cand.M = cand.M * step.phi.inverse();
            cand.c = step.C;
            cand.phi_steps = 1;
        } else if (label == RootLabel::beta1) {
            if (c <= Rat(27, 2)) {  // beta1 -> gamma3 needs c > 27/2; re-boost instead
                cand.ok = false;
                return cand;
            }
            PhiStep s1 = phi_step(c);
            PhiStep s2 = phi_step(s1.C);
            cand.M = cand.M * s1.phi.inverse() * s2.phi.inverse();
            cand.c = s2.C;
            cand.phi_steps = 2;
        }
        cand.ok = rat_abs(cand.c) >= required;
        return cand;
    };

    // c0-window from which a branch with the given number of phi steps lands at
    // |c| >= m. phi(c0) = 27 c0^2/(2 c0 - 27)^2 >= m iff |2 c0 - 27| <= c0
    // sqrt(27/m), so the windows hug 27/2 (one step) resp. its phi-preimage
    // near 27/(2 - sqrt 2) (two steps). Doubles guide, the result is rechecked
    // exactly, and margins keep the guides strictly inside.
    auto window_for = [&](int steps) -> std::pair<Rat, Rat> {
        double m = required.get_d() * 1.05;
        double lo, hi;
        if (steps == 0) {
            lo = m;
            hi = 2 * m;
        } else if (steps == 1) {
            double s = std::sqrt(27.0 / m);
            lo = 27.0 / (2 + s) * 1.02;
            hi = 27.0 / (2 - s) * 0.98;
        } else {
            double s = std::sqrt(27.0 / m) * 0.95;
            double ylo = 27.0 / (2 + s), yhi = 27.0 / (2 - s);
            lo = std::max(13.6, 27.0 / (2 - std::sqrt(27.0 / yhi)) * 1.01);
            hi = 27.0 / (2 - std::sqrt(27.0 / ylo)) * 0.99;
        }
        if (!(lo < hi)) throw Error("represent: min_abs_c floor unreachable for this branch");
        return {approx_rat(lo) * 4 / 27, approx_rat(hi) * 4 / 27};
    };

    std::optional<Candidate> cand;
    int attempts = 0;
    bool boosted = false;

    // Unboosted chain first: covers fields whose natural ratio already meets
    // the floor (a phi step can even raise a small c0 past it).
    Rat r0 = ratio(dep.poly);
    if (rat_abs(r0) > 1) {
        ++attempts;
        Candidate c0 = build(std::nullopt);
        if (c0.ok) cand = c0;
    }

    if (!cand && disc < 0) {
        ++attempts;
        boosted = true;
        cand = build(std::make_pair(required * 4 / 27, Rat(0)));  // unique root: c = c0
    }
    if (!cand && required <= 22) {
        // c0 in [26, 30]: lands above 22 whichever branch fires (phi maps
        // [26, 30] into [22.3, 29.2] and phi^2 into [23.3, 43.3]).
        ++attempts;
        boosted = true;
        Candidate c1 = build(std::make_pair(Rat(104, 27), Rat(40, 9)));
        if (c1.ok) cand = c1;
    }
    if (!cand) {
        // Branch-targeted windows; the label can shift with the generator, so
        // chase it for a few rounds.
        RootLabel guess = RootLabel::beta2;
        for (int round = 0; round < 8 && !cand; ++round) {
            ++attempts;
            boosted = true;
            Candidate ck = build(window_for(phi_steps_for(guess)));
            if (ck.ok) cand = ck;
            else guess = ck.label;
        }
        if (!cand) throw Error("represent: could not reach the requested |c| floor");
    }

    Representation rep{cand->c, cand->M.canonical()};

    // Self-check: M carries the series root onto the selected root.
    Interval sroot = series_root(rep.c, Rat(1, 1000000));
    if (moebius_image_fit(rep.M, c_poly(rep.c), sroot, selected) != Fit::inside)
        throw Error("represent: self-verification failed");
    if (trace) *trace = {cand->label, cand->phi_steps, cand->c0, boosted, attempts};
    return rep;
}

PolyCF to_cf(const Representation& rep) {
    return splice_moebius(rep.M, euler_to_cf(s_series(rep.c)));
}

VerifyReport verify(const Representation& rep, const Poly& P, const RootSelector& sel,
                    long depth, const Rat& tol) {
    if (tol <= 0) throw Error("verify: tolerance must be positive");
    VerifyReport rep_out;
    rep_out.tol = tol;
    check_irreducible_cubic(P);
    Poly Pz = integer_primitive(P);
    Interval selected = select_root(Pz, sel);

    // Certify the root far below both the tolerance and the expected error at
    // full depth, so every per-depth error bound is meaningful.
    double logE = log_abs(4 * rat_abs(rep.c) / 27);
    long bits = (long)((double)depth * logE / M_LN2) + 64;
    Rat eps = tol / 1000;
    Rat shrink = pow_rat(Rat(1, 2), bits);
    if (shrink < eps) eps = shrink;
    Interval root = refine_root(Pz, selected, eps);

    PolyCF cf = to_cf(rep);
    auto cs = convergents(cf, depth);
    for (long n = 0; n <= depth; ++n) {
        if (cs[n].q == 0) continue;  // skipped convergent, limit unaffected
        Rat v = cs[n].p / cs[n].q;
        Rat e1 = rat_abs(root.lo - v), e2 = rat_abs(root.hi - v);
        Rat lo = std::min(e1, e2), hi = std::max(e1, e2);
        if (sgn(root.lo - v) != sgn(root.hi - v)) lo = 0;
        rep_out.rows.push_back({n, lo, hi});
    }
    if (rep_out.rows.empty()) throw PrecisionError("verify: no usable convergents");
    const auto& last = rep_out.rows.back();
    if (root.width() > tol / 10)
        throw PrecisionError("verify: root certification coarser than tolerance");
    rep_out.pass = last.err_hi < tol;

    rep_out.expected_E = std::exp(logE);
    long n_hi = std::min(depth, (long)60), n_lo = std::max((long)2, n_hi / 3);
    try {
        if (n_hi - n_lo < 2) throw PrecisionError("verify: depth too small for a rate fit");
        rep_out.rate = estimate_rate(cf, root, n_lo, n_hi);
        rep_out.rate_available = true;
    } catch (const PrecisionError&) {
        rep_out.rate_available = false;
    }
    return rep_out;
}

} // namespace pcf
