#pragma once

#include <vector>

#include "pcf/poly.hpp"

namespace pcf {

// Series sum t0 + t1 + ... with t_{n+1}/t_n = ratio_num(n)/ratio_den(n),
// a rational function of the index, and |t_{n+1}/t_n| -> limit_ratio < 1.
struct SeriesSpec {
    Rat t0;
    Poly ratio_num, ratio_den;
    Rat limit_ratio;

    Rat term_ratio(long n) const;
    // t_0 .. t_n by the recurrence
    std::vector<Rat> terms(long n) const;
};

// Exact sum of t_0 .. t_n.
Rat partial_sum(const SeriesSpec& spec, long n);

// S(c) = sum_{n>=0} binom(3n,n)/(2n+1) c^{-n}; requires |c| > 27/4.
SeriesSpec s_series(const Rat& c);

// Root series of x^k + ax + b: (-b/a) sum binom(kn,n)/((k-1)n+1) z^n with
// z = (-1)^k b^{k-1}/a^k. Requires |(k-1)^{k-1} a^k / (k^k b^{k-1})| > 1.
SeriesSpec trinomial_series(long k, const Rat& a, const Rat& b);

struct PowerSeries {
    Rat f;   // rational approximation of u^{-1/d}
    Rat z;   // u f^d - 1, |z| < 1
    long m, d;
    SeriesSpec spec;  // u^{m/d} = f^{-m} sum binom(m/d, n) z^n, f^{-m} in t0
};
// u > 0, d > 0, gcd(m,d) = 1.
PowerSeries power_series(const Rat& u, long m, long d);

// Same, with a caller-chosen f; throws DivergenceError unless |u f^d - 1| < 1.
PowerSeries power_series_with_f(const Rat& u, long m, long d, const Rat& f);

} // namespace pcf
