#include "pcf/roots.hpp"

#include <algorithm>
#include <functional>

#include "pcf/errors.hpp"

namespace pcf {

std::vector<Poly> sturm_sequence(const Poly& P) {
    std::vector<Poly> chain;
    chain.push_back(P.primitive());
    Poly d = P.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive());
    while (true) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int count_roots(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi) {
    if (lo >= hi) return 0;
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

namespace {

// Cauchy bound: all real roots lie strictly inside (-B, B).
Rat root_bound(const Poly& P) {
    Rat m(0);
    Rat l = rat_abs(P.lc());
    for (int i = 0; i < P.degree(); ++i) m = std::max(m, Rat(rat_abs(P[i]) / l));
    return m + 1;
}

} // namespace

std::vector<Interval> isolate_real_roots(const Poly& P) {
    if (P.is_zero()) throw ZeroPolyError("isolate_real_roots of zero polynomial");
    if (!is_squarefree(P)) throw SquarefreeError("isolate_real_roots: input not squarefree");
    std::vector<Interval> out;
    if (P.degree() < 1) return out;

    std::vector<Poly> chain = sturm_sequence(P);
    Rat B = root_bound(P);

    // Roots counted on half-open (lo, hi]; P(-B) != 0 by the bound.
    std::function<void(const Rat&, const Rat&)> split = [&](const Rat& lo, const Rat& hi) {
        int n = count_roots(chain, lo, hi);
        if (n == 0) return;
        if (n == 1) {
            if (P.eval(hi) == 0) {
                // Could still be a wide bracket ending exactly at the root.
                out.push_back(Interval::point(hi));
                return;
            }
            Rat l = lo, h = hi;
            int sh = sgn(P.eval(h));
            while (sgn(P.eval(l)) == 0 || sgn(P.eval(l)) == sh) {
                // Left endpoint sits on a root or on the wrong side; bisect
                // until a genuine sign-change bracket remains.
                Rat m = (l + h) / 2;
                int sm = sgn(P.eval(m));
                if (sm == 0) {
                    out.push_back(Interval::point(m));
                    return;
                }
                if (sm == sh) h = m;
                else l = m;
            }
            out.push_back(Interval(l, h));
            return;
        }
        Rat mid = (lo + hi) / 2;
        split(lo, mid);
        split(mid, hi);
    };
    split(-B, B);

    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    // Separate neighbours that share an endpoint.
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i + 1 < out.size(); ++i)
            if (out[i].intersects(out[i + 1])) {
                out[i] = refine_step(P, out[i]);
                out[i + 1] = refine_step(P, out[i + 1]);
                again = true;
            }
    }
    return out;
}

Interval refine_step(const Poly& P, const Interval& iv) {
    if (iv.is_point()) return iv;
    Rat m = iv.mid();
    int sm = sgn(P.eval(m));
    if (sm == 0) return Interval::point(m);
    int slo = sgn(P.eval(iv.lo));
    if (slo == 0 || slo == -sgn(P.eval(iv.hi))) {
        // normal bracket
        if (sm == slo) return Interval(m, iv.hi);
        return Interval(iv.lo, m);
    }
    throw BracketError("refine_step: interval does not bracket a sign change");
}

Interval refine_root(const Poly& P, Interval iv, const Rat& eps) {
    if (eps <= 0) throw Error("refine_root: eps must be positive");
    if (iv.is_point()) {
        if (P.eval(iv.lo) != 0) throw BracketError("refine_root: degenerate interval not a root");
        return iv;
    }
    if (sgn(P.eval(iv.lo)) * sgn(P.eval(iv.hi)) >= 0)
        throw BracketError("refine_root: no sign change over interval");
    while (!iv.is_point() && iv.width() > eps) iv = refine_step(P, iv);
    return iv;
}

} // namespace pcf
