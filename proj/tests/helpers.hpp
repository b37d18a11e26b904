#pragma once

#include <random>
#include <vector>

#include "pcf/interval.hpp"
#include "pcf/poly.hpp"
#include "pcf/rational.hpp"

// 10^-k
inline pcf::Rat eps10(int k) { return pcf::pow_rat(pcf::Rat(1, 10), k); }

inline pcf::Poly poly_q(std::vector<pcf::Rat> coeffs) { return pcf::Poly(std::move(coeffs)); }

inline pcf::Interval widen(const pcf::Interval& iv, const pcf::Rat& slack) {
    return pcf::Interval(iv.lo - slack, iv.hi + slack);
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long seed) : g(seed) {}

    long i(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

    // rational in [lo, hi] with denominator <= max_den
    pcf::Rat q(long lo, long hi, long max_den = 12) {
        long d = i(1, max_den);
        return pcf::rat(i(lo * d, hi * d), d);
    }

    pcf::Rat nonzero_q(long lo, long hi, long max_den = 12) {
        for (;;) {
            pcf::Rat v = q(lo, hi, max_den);
            if (v != 0) return v;
        }
    }

    pcf::Poly poly(int degree, long lo = -9, long hi = 9, long max_den = 6) {
        for (;;) {
            std::vector<pcf::Rat> c;
            for (int k = 0; k <= degree; ++k) c.push_back(q(lo, hi, max_den));
            pcf::Poly p(std::move(c));
            if (p.degree() == degree) return p;
        }
    }
};
