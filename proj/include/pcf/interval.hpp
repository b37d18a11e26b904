#pragma once

#include <algorithm>
#include <initializer_list>

#include "pcf/rational.hpp"

namespace pcf {

// Closed interval with rational endpoints.
struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("Interval: lo > hi");
    }
    static Interval point(const Rat& x) { return Interval(x, x); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
    bool contains_zero() const { return contains(Rat(0)); }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
    Interval operator-() const { return {-hi, -lo}; }
    Interval operator+(const Rat& x) const { return {lo + x, hi + x}; }
    Interval operator-(const Rat& x) const { return {lo - x, hi - x}; }

    Interval operator*(const Interval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }
    Interval operator*(const Rat& x) const {
        return x >= 0 ? Interval(lo * x, hi * x) : Interval(hi * x, lo * x);
    }
    // Requires 0 not in divisor.
    Interval operator/(const Interval& o) const {
        if (o.contains_zero()) throw Error("Interval division by interval containing 0");
        Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }
};

} // namespace pcf
