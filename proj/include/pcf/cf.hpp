#pragma once

#include <vector>

#include "pcf/field.hpp"
#include "pcf/interval.hpp"
#include "pcf/poly.hpp"
#include "pcf/series.hpp"

namespace pcf {

// Polynomial-type continued fraction a(0) + b(0)/(a(1) + b(1)/(...)):
// a(n) = a_head[n] for n <= n_a, A(n) beyond; same for b. Depth n uses
// a(0..n) and b(0..n-1).
struct PolyCF {
    std::vector<Rat> a_head, b_head;
    Poly A, B;

    long n_a() const { return (long)a_head.size() - 1; }
    long n_b() const { return (long)b_head.size() - 1; }
    Rat a(long n) const { return n <= n_a() ? a_head[n] : A.eval(Rat(n)); }
    Rat b(long n) const { return n <= n_b() ? b_head[n] : B.eval(Rat(n)); }

    // b(n) != 0 for all n; a(n) != 0 for n >= 1. Heads exactly, tails by
    // checking the polynomials for integer roots past the thresholds.
    void validate() const;
};

// Euler transform: depth-n convergent equals the series partial sum through
// t_n, with coefficients cleared to polynomial form.
PolyCF euler_to_cf(const SeriesSpec& spec);

// CF for M applied to the value of cf (Lemma-style head splice; index shift
// by one on the c != 0 branch).
PolyCF splice_moebius(const Moebius& M, const PolyCF& cf);

// CF whose value is the tail a(k) + b(k)/(a(k+1) + ...).
PolyCF drop_front(const PolyCF& cf, long k);

struct Convergent {
    Rat p, q;
};

// p(n), q(n) for n = 0..N by the three-term recurrence.
std::vector<Convergent> convergents(const PolyCF& cf, long N);

// p(N)/q(N); throws PoleError if q(N) = 0.
Rat cf_value(const PolyCF& cf, long N);

struct RateEstimate {
    double E;         // fitted geometric base
    double exponent;  // fitted power of n (expected ~ 3/2)
    double logC;      // fitted log-constant
};

// Least-squares fit of log|err(n)| ~ logC - n log E - exponent * log n over
// depths [n_lo, n_hi]. limit_iv must enclose the CF limit tightly enough that
// every error is certified to ~3 significant digits (else PrecisionError).
RateEstimate estimate_rate(const PolyCF& cf, const Interval& limit_iv, long n_lo, long n_hi);

} // namespace pcf
