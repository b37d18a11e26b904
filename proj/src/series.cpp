#include "pcf/series.hpp"

#include <numeric>

#include "pcf/errors.hpp"
#include "pcf/roots.hpp"

namespace pcf {

Rat SeriesSpec::term_ratio(long n) const {
    Rat den = ratio_den.eval(Rat(n));
    if (den == 0) throw Error("SeriesSpec: ratio_den vanishes at n");
    return ratio_num.eval(Rat(n)) / den;
}

std::vector<Rat> SeriesSpec::terms(long n) const {
    std::vector<Rat> out;
    out.reserve(n + 1);
    Rat t = t0;
    out.push_back(t);
    for (long k = 0; k < n; ++k) {
        t *= term_ratio(k);
        out.push_back(t);
    }
    return out;
}

Rat partial_sum(const SeriesSpec& spec, long n) {
    if (n < 0) throw Error("partial_sum: negative index");
    Rat sum(0);
    for (const Rat& t : spec.terms(n)) sum += t;
    return sum;
}

SeriesSpec s_series(const Rat& c) {
    if (rat_abs(c) <= Rat(27) / 4) throw DivergenceError("s_series: |c| <= 27/4");
    // t_{n+1}/t_n = 3(3n+1)(3n+2) / (2(n+1)(2n+3) c)
    Poly num(std::vector<Rat>{Rat(6), Rat(27), Rat(27)});
    Poly den(std::vector<Rat>{6 * c, 10 * c, 4 * c});
    return {Rat(1), num, den, Rat(27) / (4 * rat_abs(c))};
}

SeriesSpec trinomial_series(long k, const Rat& a, const Rat& b) {
    if (k < 3) throw Error("trinomial_series: k must be >= 3");
    if (a == 0 || b == 0) throw Error("trinomial_series: a, b must be nonzero");
    Rat km1k = pow_rat(Rat(k - 1), k - 1);
    Rat cond = km1k * pow_rat(a, k) / (pow_rat(Rat(k), k) * pow_rat(b, k - 1));
    if (rat_abs(cond) <= 1) throw DivergenceError("trinomial_series: convergence condition fails");
    Rat z = (k % 2 ? Rat(-1) : Rat(1)) * pow_rat(b, k - 1) / pow_rat(a, k);

    // t_{n+1}/t_n = z * prod_{j=1..k}(kn+j) / ((n+1) ((k-1)n+k) prod_{j=2..k-1}((k-1)n+j))
    Poly num = Poly::constant(z);
    for (long j = 1; j <= k; ++j) num = num * Poly(std::vector<Rat>{Rat(j), Rat(k)});
    Poly den(std::vector<Rat>{Rat(1), Rat(1)});
    den = den * Poly(std::vector<Rat>{Rat(k), Rat(k - 1)});
    for (long j = 2; j <= k - 1; ++j) den = den * Poly(std::vector<Rat>{Rat(j), Rat(k - 1)});
    return {-b / a, num, den, rat_abs(z) * pow_rat(Rat(k), k) / km1k};
}

PowerSeries power_series(const Rat& u, long m, long d) {
    if (u <= 0) throw Error("power_series: base must be positive");
    if (d <= 0) throw Error("power_series: d must be positive");
    if (m == 0) throw Error("power_series: zero exponent");
    if (std::gcd(m < 0 ? -m : m, d) != 1) throw Error("power_series: exponent not in lowest terms");

    // f approximates u^{-1/d}: bisect x^d - 1/u, dyadic midpoints, until
    // |z| < 1/4 with z = u f^d - 1 (well inside the |z| < 1 disc).
    Poly target = Poly(std::vector<Rat>{Rat(-1) / u}) + [&] {
        std::vector<Rat> mono((size_t)d + 1, Rat(0));
        mono[d] = 1;
        return Poly(std::move(mono));
    }();
    Rat hi(1);
    while (target.eval(hi) < 0) hi *= 2;
    Rat f, z;
    if (target.eval(hi) == 0) {
        f = hi;
        z = 0;
    } else {
        Interval iv(Rat(0), hi);
        for (int step = 0; step < 100000; ++step) {
            f = iv.mid();
            z = u * pow_rat(f, d) - 1;
            if (z == 0) break;  // u^{-1/d} rational and hit exactly
            if (rat_abs(z) < Rat(1, 4)) break;
            iv = refine_step(target, iv);
        }
    }

    return power_series_with_f(u, m, d, f);
}

PowerSeries power_series_with_f(const Rat& u, long m, long d, const Rat& f) {
    if (f <= 0) throw Error("power_series: f must be positive");
    Rat z = u * pow_rat(f, d) - 1;
    if (rat_abs(z) >= 1) throw DivergenceError("power_series: |u f^d - 1| >= 1");
    // binom(m/d, n+1)/binom(m/d, n) * z = z (m/d - n)/(n+1) = z(m - dn)/(d(n+1))
    Poly num(std::vector<Rat>{z * m, -z * d});
    Poly den(std::vector<Rat>{Rat(d), Rat(d)});
    SeriesSpec spec{pow_rat(f, -m), num, den, rat_abs(z)};
    return {f, z, m, d, spec};
}

} // namespace pcf
