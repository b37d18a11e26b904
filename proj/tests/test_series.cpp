#include <doctest.h>

#include "helpers.hpp"
#include "pcf/errors.hpp"
#include "pcf/roots.hpp"
#include "pcf/series.hpp"
#include "pcf/transform.hpp"

using namespace pcf;

namespace {

Rat binom(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("leading terms 1, 1/c, 3/c^2, 12/c^3, 55/c^4") {
    for (const Rat& c : {Rat(7), Rat(10), Rat(-54)}) {
        auto t = s_series(c).terms(4);
        REQUIRE(t.size() == 5);
        CHECK(t[0] == 1);
        CHECK(t[1] == 1 / c);
        CHECK(t[2] == 3 / (c * c));
        CHECK(t[3] == 12 / (c * c * c));
        CHECK(t[4] == 55 / (c * c * c * c));
    }
}

TEST_CASE("terms follow binom(3n,n)/((2n+1) c^n)") {
    Rat c(189);
    auto t = s_series(c).terms(30);
    for (unsigned long n = 0; n <= 30; ++n)
        CHECK(t[n] == binom(3 * n, n) / (2 * n + 1) * pow_rat(c, -(long)n));
}

TEST_CASE("term ratio limit is 27/(4|c|)") {
    SeriesSpec s = s_series(Rat(189));
    CHECK(s.limit_ratio == rat(27, 4 * 189));
    // ratios increase toward the limit
    Rat prev(0);
    for (long n = 0; n < 40; ++n) {
        Rat r = s.term_ratio(n);
        CHECK(r > prev);
        CHECK(r < s.limit_ratio);
        prev = r;
    }
}

TEST_CASE("series rejects |c| <= 27/4") {
    CHECK_THROWS_AS(s_series(rat(27, 4)), DivergenceError);
    CHECK_THROWS_AS(s_series(rat(-27, 4)), DivergenceError);
    CHECK_THROWS_AS(s_series(Rat(5)), DivergenceError);
}

TEST_CASE("partial sums of S(7)") {
    SeriesSpec s = s_series(Rat(7));
    CHECK(partial_sum(s, 0) == 1);
    CHECK(partial_sum(s, 3) == rat(425, 343));
    CHECK_THROWS_AS(partial_sum(s, -1), Error);
}

TEST_CASE("S(189) nearly solves x^3 - 189x + 189") {
    Rat v = partial_sum(s_series(Rat(189)), 40);
    Rat res = rat_abs(v * v * v - 189 * v + 189);
    CHECK(res < eps10(20));
}

TEST_CASE("for c > 27/4 the sum lies in (1, 1 + 27/(8c))") {
    Rat c(189);
    SeriesSpec s = s_series(c);
    Rat v = partial_sum(s, 60);
    CHECK(v > 1);
    // upper bound including a geometric tail estimate
    Rat t61 = s.terms(61).back();
    Rat tail = t61 / (1 - s.limit_ratio);
    CHECK(v + tail < 1 + Rat(27) / (8 * c));
}

TEST_CASE("for c < -27/4 the sum approaches the unique real root") {
    Rat c(-54);
    Poly P = c_poly(c);
    auto roots = isolate_real_roots(P);
    REQUIRE(roots.size() == 1);
    Interval root = refine_root(P, roots[0], eps10(40));
    Rat v = partial_sum(s_series(c), 40);
    CHECK(rat_abs(v - root.lo) < eps10(30));
}

TEST_CASE("error against the root decays geometrically") {
    for (const Rat& c : {Rat(189), Rat(-54)}) {
        Poly P = c_poly(c);
        auto roots = isolate_real_roots(P);
        Interval target;
        for (const Interval& iv : roots) {
            RootLabel l = classify_root(c, iv);
            if (l == RootLabel::beta2 || l == RootLabel::unique_real) target = iv;
        }
        Interval root = refine_root(P, target, eps10(60));
        SeriesSpec s = s_series(c);
        Rat limit = s.limit_ratio;
        Rat prev = rat_abs(partial_sum(s, 10) - root.lo);
        for (long n = 11; n <= 30; ++n) {
            Rat err = rat_abs(partial_sum(s, n) - root.lo);
            CHECK(err < prev * limit * rat(21, 20));
            prev = err;
        }
    }
}

TEST_CASE("trinomial series with k = 3 reproduces S(c)") {
    for (const Rat& c : {Rat(189), Rat(-54)}) {
        SeriesSpec tri = trinomial_series(3, -c, c);
        SeriesSpec s = s_series(c);
        CHECK(tri.t0 == s.t0);
        CHECK(tri.limit_ratio == s.limit_ratio);
        auto a = tri.terms(20), b = s.terms(20);
        for (int n = 0; n <= 20; ++n) CHECK(a[n] == b[n]);
    }
}

TEST_CASE("trinomial terms follow binom(kn,n) z^n/((k-1)n+1) times -b/a") {
    long k = 4;
    Rat a(-5), b(1);
    SeriesSpec s = trinomial_series(k, a, b);
    Rat z = pow_rat(b, k - 1) / pow_rat(a, k);  // k even
    auto t = s.terms(15);
    for (unsigned long n = 0; n <= 15; ++n)
        CHECK(t[n] == binom(k * n, n) / Rat((k - 1) * n + 1) * pow_rat(z, n) * (-b / a));
}

TEST_CASE("30 terms of the quartic trinomial series nail the small root") {
    // x^4 - 5x + 1 has a root near 0.2; the series converges to it
    SeriesSpec s = trinomial_series(4, Rat(-5), Rat(1));
    Rat v = partial_sum(s, 30);
    CHECK(rat_abs(pow_rat(v, 4) - 5 * v + 1) < eps10(15));
    Poly P{1, -5, 0, 0, 1};
    Interval root = refine_root(P, Interval(rat(1, 5), rat(21, 100)), eps10(25));
    CHECK(rat_abs(v - root.lo) < eps10(15));
}

TEST_CASE("trinomial series validation") {
    CHECK_THROWS_AS(trinomial_series(4, Rat(1), Rat(1)), DivergenceError);  // 27/256 < 1
    CHECK_THROWS_AS(trinomial_series(2, Rat(9), Rat(1)), Error);
    CHECK_THROWS_AS(trinomial_series(3, Rat(0), Rat(1)), Error);
    CHECK_THROWS_AS(trinomial_series(3, Rat(1), Rat(0)), Error);
}

TEST_CASE("binomial series with a hand-picked f = 4/5 for 2^(1/3)") {
    PowerSeries ps = power_series_with_f(Rat(2), 1, 3, rat(4, 5));
    CHECK(ps.z == rat(3, 125));
    CHECK(ps.spec.t0 == rat(5, 4));
    Rat v = partial_sum(ps.spec, 40);
    Poly P{-2, 0, 0, 1};
    Interval root = refine_root(P, isolate_real_roots(P)[0], eps10(45));
    CHECK(rat_abs(v - root.lo) < eps10(40));
}

TEST_CASE("binomial series via (1 - 1/2)^(-1/3)") {
    PowerSeries ps = power_series_with_f(rat(1, 2), -1, 3, Rat(1));
    CHECK(ps.z == rat(-1, 2));
    CHECK(ps.spec.t0 == 1);
    Rat v = partial_sum(ps.spec, 40);
    Poly P{-2, 0, 0, 1};
    Interval root = refine_root(P, isolate_real_roots(P)[0], eps10(20));
    CHECK(rat_abs(v - root.lo) < eps10(12));
}

TEST_CASE("automatic f keeps |z| < 1/4 and converges for 5^(2/3)") {
    PowerSeries ps = power_series(Rat(5), 2, 3);
    CHECK(rat_abs(ps.z) < rat(1, 4));
    Rat v = partial_sum(ps.spec, 30);
    Poly P{-25, 0, 0, 1};
    Interval root = refine_root(P, isolate_real_roots(P)[0], eps10(20));
    CHECK(rat_abs(v - root.lo) < eps10(12));
}

TEST_CASE("rational powers collapse to exact values") {
    PowerSeries ps = power_series(Rat(8), 1, 3);
    CHECK(ps.z == 0);
    CHECK(partial_sum(ps.spec, 5) == 2);
}

TEST_CASE("power series term ratio closed form") {
    PowerSeries ps = power_series(Rat(7), -2, 5);
    for (long n = 0; n <= 30; ++n)
        CHECK(ps.spec.term_ratio(n) == ps.z * Rat(ps.m - ps.d * n) / Rat(ps.d * (n + 1)));
}

TEST_CASE("power series validation") {
    CHECK_THROWS_AS(power_series(Rat(-2), 1, 3), Error);
    CHECK_THROWS_AS(power_series(Rat(2), 0, 3), Error);
    CHECK_THROWS_AS(power_series(Rat(2), 2, 4), Error);
    CHECK_THROWS_AS(power_series_with_f(Rat(2), 1, 3, Rat(2)), DivergenceError);
    CHECK_THROWS_AS(power_series_with_f(Rat(2), 1, 3, Rat(0)), Error);
}

} // TEST_SUITE
