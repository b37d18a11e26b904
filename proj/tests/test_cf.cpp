#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "pcf/cf.hpp"
#include "pcf/errors.hpp"
#include "pcf/roots.hpp"
#include "pcf/transform.hpp"

using namespace pcf;

namespace {

std::vector<SeriesSpec> sample_specs() {
    std::vector<SeriesSpec> out;
    for (const Rat& c : {Rat(7), Rat(189), Rat(-54), Rat(6750), rat(-3375, 121), rat(-35937, 2209)})
        out.push_back(s_series(c));
    out.push_back(trinomial_series(4, Rat(-5), Rat(1)));
    out.push_back(power_series(Rat(5), 2, 3).spec);
    out.push_back(power_series_with_f(rat(1, 2), -1, 3, Rat(1)).spec);
    return out;
}

} // namespace

TEST_SUITE("cf") {

TEST_CASE("Euler transform of S(7)") {
    PolyCF cf = euler_to_cf(s_series(Rat(7)));
    REQUIRE(cf.a_head.size() == 2);
    CHECK(cf.a_head[0] == 1);
    CHECK(cf.a_head[1] == 42);
    CHECK(cf.A == Poly{6, -13, 55});
    REQUIRE(cf.b_head.size() == 1);
    CHECK(cf.b_head[0] == 6);
    // -42n(2n+1)(3n+1)(3n+2)
    Poly expect_B = Poly{0, -42} * Poly{1, 2} * Poly{1, 3} * Poly{2, 3};
    CHECK(cf.B == expect_B);
    // entries used at small depth
    CHECK(cf.a(2) == 200);
    CHECK(cf.a(3) == 462);
    CHECK(cf.b(1) == -2520);
    CHECK(cf.b(2) == -23520);
    // hand evaluation of 1 + 6/(42 - 2520/(200 - 23520/462))
    Rat hand = 1 + 6 / (42 - 2520 / (Rat(200) - rat(23520, 462)));
    CHECK(hand == rat(425, 343));
    CHECK(cf_value(cf, 3) == rat(425, 343));
}

TEST_CASE("depth-n convergent equals the partial sum through t_n") {
    for (const SeriesSpec& s : sample_specs()) {
        PolyCF cf = euler_to_cf(s);
        cf.validate();
        for (long n = 0; n <= 50; n += (n < 8 ? 1 : 7))
            CHECK(cf_value(cf, n) == partial_sum(s, n));
        CHECK(cf_value(cf, 50) == partial_sum(s, 50));
    }
}

TEST_CASE("the cube root of 2 gets the classical polynomial CF") {
    PolyCF cf = euler_to_cf(power_series_with_f(rat(1, 2), -1, 3, Rat(1)).spec);
    REQUIRE(cf.a_head.size() == 2);
    CHECK(cf.a_head[0] == 1);
    CHECK(cf.a_head[1] == 6);
    CHECK(cf.A == Poly{-2, 9});
    REQUIRE(cf.b_head.size() == 1);
    CHECK(cf.b_head[0] == 1);
    CHECK(cf.B == Poly{0, -6} * Poly{1, 3});
    Poly P{-2, 0, 0, 1};
    Interval root = refine_root(P, isolate_real_roots(P)[0], eps10(20));
    CHECK(rat_abs(cf_value(cf, 40) - root.lo) < eps10(12));
}

TEST_CASE("affine splice only touches the first level") {
    PolyCF cf = euler_to_cf(s_series(Rat(189)));
    Moebius M(rat(3, 2), Rat(-4), Rat(0), Rat(5));
    PolyCF out = splice_moebius(M, cf);
    CHECK(out.a_head.size() == cf.a_head.size());
    CHECK(out.A == cf.A);
    CHECK(out.B == cf.B);
    for (long n = 0; n <= 25; ++n) CHECK(cf_value(out, n) == M.apply(cf_value(cf, n)));
}

TEST_CASE("general splice shifts depth by one") {
    Rng rng(7007);
    for (int t = 0; t < 30; ++t) {
        Rat c = rng.q(8, 60, 5);
        PolyCF cf = euler_to_cf(s_series(c));
        Rat ma = rng.q(-6, 6, 3), mb = rng.q(-6, 6, 3);
        Rat mc = rng.nonzero_q(-6, 6, 3), md = rng.q(-6, 6, 3);
        if (ma * md - mb * mc == 0) continue;
        if (cf.a(0) + md / mc == 0) continue;  // fallback branch tested separately
        Moebius M(ma, mb, mc, md);
        PolyCF out = splice_moebius(M, cf);
        for (long n = 0; n <= 12; ++n) {
            Rat u = cf_value(cf, n);
            if (mc * u + md == 0) continue;
            CHECK(cf_value(out, n + 1) == M.apply(u));
        }
    }
}

TEST_CASE("splice falls back cleanly when the new a(1) would vanish") {
    PolyCF cf = euler_to_cf(s_series(Rat(7)));  // a(0) = 1
    Moebius M(Rat(1), Rat(1), Rat(1), Rat(-1)); // d/c = -1, so a(0) + d/c = 0
    PolyCF out = splice_moebius(M, cf);
    out.validate();
    for (long n = 1; n <= 20; ++n) {
        Rat u = cf_value(cf, n + 1);
        CHECK(cf_value(out, n) == M.apply(u));
    }
}

TEST_CASE("spliced CF for the root of x^3 + x^2 + 2x + 1") {
    Rat c = rat(-3375, 121);
    PolyCF cf = splice_moebius(Moebius(rat(-11, 45), rat(-1, 3), Rat(0), Rat(1)),
                               euler_to_cf(s_series(c)));
    Poly P{1, 2, 1, 1};
    auto roots = isolate_real_roots(P);
    REQUIRE(roots.size() == 1);
    Interval root = refine_root(P, roots[0], eps10(30));
    Rat v = cf_value(cf, 60);
    CHECK(rat_abs(v - root.lo) < eps10(20));
    // -0.56984029 to the printed digits
    CHECK(v < rat(-56984028, 100000000));
    CHECK(v > rat(-56984030, 100000000));
}

TEST_CASE("determinant identity for the convergent recurrence") {
    for (const Rat& c : {Rat(189), Rat(-54)}) {
        PolyCF cf = euler_to_cf(s_series(c));
        auto cs = convergents(cf, 25);
        Rat prod(1);
        int sign = 1;
        for (long n = 1; n <= 25; ++n) {
            prod *= cf.b(n - 1);
            CHECK(cs[n].p * cs[n - 1].q - cs[n - 1].p * cs[n].q == sign * prod);
            sign = -sign;
        }
    }
}

TEST_CASE("vanishing denominators are reported, not divided by") {
    PolyCF cf;
    cf.a_head = {Rat(0), Rat(1), Rat(1), Rat(2)};
    cf.b_head = {Rat(-1), Rat(-1), Rat(1)};
    cf.A = Poly{1, 1};
    cf.B = Poly{1};
    // q(2) = a(2) q(1) + b(1) q(0) = 1*1 + (-1)*1 = 0
    auto cs = convergents(cf, 2);
    CHECK(cs[2].q == 0);
    CHECK_THROWS_AS(cf_value(cf, 2), PoleError);
    CHECK(cf_value(cf, 3) == cf.a(0) + cf.b(0) / (cf.a(1) + cf.b(1) / (cf.a(2) + cf.b(2) / cf.a(3))));
}

TEST_CASE("validate flags zero partial numerators and vanishing tails") {
    PolyCF good = euler_to_cf(s_series(Rat(189)));
    CHECK_NOTHROW(good.validate());

    PolyCF bad = good;
    bad.b_head[0] = 0;
    CHECK_THROWS_AS(bad.validate(), Error);

    bad = good;
    bad.a_head[1] = 0;
    CHECK_THROWS_AS(bad.validate(), Error);

    bad = good;
    bad.B = Poly{-5, 1};  // vanishes at n = 5, beyond the head
    CHECK_THROWS_AS(bad.validate(), Error);

    bad = good;
    bad.A = Poly{-7, 1};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("convergence rate of the c = 189 expansion") {
    Rat c(189);
    PolyCF cf = euler_to_cf(s_series(c));
    Poly P = c_poly(c);
    auto roots = isolate_real_roots(P);
    REQUIRE(roots.size() == 3);
    Interval limit = refine_root(P, roots[1], eps10(95));
    RateEstimate r = estimate_rate(cf, limit, 20, 60);
    // base 4|c|/27 = 28, error ~ C E^-n n^(-3/2)
    CHECK(r.E > 28.0 * 0.95);
    CHECK(r.E < 28.0 * 1.05);
    CHECK(r.exponent > 1.2);
    CHECK(r.exponent < 1.8);
}

TEST_CASE("a constant CF converges geometrically with no power factor") {
    PolyCF cf;
    cf.a_head = {Rat(2)};
    cf.b_head = {Rat(1)};
    cf.A = Poly{2};
    cf.B = Poly{1};
    cf.validate();
    // limit is 1 + sqrt(2), root of x^2 - 2x - 1
    Poly P{-1, -2, 1};
    auto roots = isolate_real_roots(P);
    REQUIRE(roots.size() == 2);
    Interval limit = refine_root(P, roots[1], eps10(60));
    CHECK(rat_abs(cf_value(cf, 50) - limit.lo) < eps10(35));
    RateEstimate r = estimate_rate(cf, limit, 10, 40);
    CHECK(r.E > 1.0);
    CHECK(std::fabs(r.E - 5.828) < 0.2);  // (1+sqrt 2)^2
    CHECK(std::fabs(r.exponent) < 0.15);
}

TEST_CASE("rate estimation insists on a certified limit") {
    PolyCF cf = euler_to_cf(s_series(Rat(189)));
    Interval wide(rat(44, 100), rat(45, 100));
    CHECK_THROWS_AS(estimate_rate(cf, wide, 20, 60), PrecisionError);
    CHECK_THROWS_AS(estimate_rate(cf, wide, 0, 60), Error);
}

} // TEST_SUITE
