#pragma once

#include <optional>

#include "pcf/interval.hpp"
#include "pcf/poly.hpp"

namespace pcf {

// Element of K = Q[x]/(minpoly) for a monic irreducible cubic minpoly,
// stored as its residue of degree <= 2 in the basis 1, theta, theta^2.
class FieldElem {
public:
    FieldElem(Poly residue, Poly minpoly);
    static FieldElem theta(const Poly& minpoly) { return FieldElem(Poly::x(), minpoly); }
    static FieldElem constant(const Rat& v, const Poly& minpoly) {
        return FieldElem(Poly::constant(v), minpoly);
    }

    const Poly& residue() const { return residue_; }
    const Poly& minpoly() const { return minpoly_; }

    bool is_rational() const { return residue_.degree() <= 0; }
    Rat as_rational() const;
    bool is_zero() const { return residue_.is_zero(); }

    FieldElem operator+(const FieldElem&) const;
    FieldElem operator-(const FieldElem&) const;
    FieldElem operator*(const FieldElem&) const;
    FieldElem operator-() const;
    FieldElem operator*(const Rat&) const;
    FieldElem operator+(const Rat&) const;
    FieldElem inverse() const;
    bool operator==(const FieldElem&) const = default;

private:
    Poly residue_, minpoly_;
    void check_same_field(const FieldElem&) const;
};

// Invertible 2x2 rational matrix acting by x -> (a x + b) / (c x + d).
struct Moebius {
    Rat a, b, c, d;

    Moebius(Rat a_, Rat b_, Rat c_, Rat d_);
    static Moebius identity() { return Moebius(Rat(1), Rat(0), Rat(0), Rat(1)); }

    Rat det() const { return a * d - b * c; }
    bool is_affine() const { return c == 0; }

    Rat apply(const Rat& x) const;
    FieldElem apply(const FieldElem& x) const;
    // nullopt when the denominator interval straddles 0 (caller refines x).
    std::optional<Interval> apply(const Interval& x) const;

    Moebius operator*(const Moebius& o) const;  // composition: this after o
    Moebius inverse() const;
    // Integer entries, content 1, first nonzero of (a, b, c, d) positive.
    Moebius canonical() const;
    // Equal up to a nonzero scalar.
    bool scalar_equal(const Moebius& o) const;
};

// Monic cubic Q with Q(g) = 0 in K, via Res_y(minpoly(y), x - residue(y)).
Poly elem_charpoly(const FieldElem& g);

// M with v = M(u) as an identity in K. Throws RationalElementError if u or v
// is rational.
Moebius moebius_relate(const FieldElem& u, const FieldElem& v);

// Image of g under the real embedding theta -> (root of minpoly in root_iv),
// as an interval of width <= eps.
Interval embed(const FieldElem& g, Interval root_iv, const Rat& eps);

} // namespace pcf
