#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pcf/interval.hpp"
#include "pcf/rational.hpp"

namespace pcf {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector (degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }
    static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
    static Poly x() { return Poly{0, 1}; }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of x^i (0 beyond the degree).
    const Rat& operator[](size_t i) const {
        static const Rat zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat lc() const;

    Poly operator+(const Poly&) const;
    Poly operator-(const Poly&) const;
    Poly operator*(const Poly&) const;
    Poly operator-() const;
    Poly operator*(const Rat&) const;
    Poly operator/(const Rat&) const;
    bool operator==(const Poly&) const = default;

    Rat eval(const Rat& x) const;
    Interval eval_interval(const Interval& x) const;
    Poly derivative() const;
    Poly monic() const;
    // P(x + s)
    Poly shifted_arg(const Rat& s) const;
    // P(inner(x))
    Poly compose(const Poly& inner) const;
    // Positive content (gcd of numerators / lcm of denominators); 0 for the zero poly.
    Rat content() const;
    // P divided by its positive content.
    Poly primitive() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Quotient and remainder of A by B over Q; B nonzero.
std::pair<Poly, Poly> divmod(const Poly& A, const Poly& B);

// Monic gcd over Q (1 for coprime inputs, 0 only if both zero).
Poly poly_gcd(const Poly& A, const Poly& B);

bool is_squarefree(const Poly& P);

// Sylvester-convention resultant: Res(A,B) = lc(A)^deg(B) * prod B(alpha_i)
// over the roots of A, computed by a polynomial remainder sequence over Q.
Rat resultant(const Poly& A, const Poly& B);

// disc(P) for deg(P) = 3.
Rat discriminant_cubic(const Poly& P);

// All integer roots of a nonzero polynomial, ascending.
std::vector<Int> integer_roots(const Poly& P);

} // namespace pcf
