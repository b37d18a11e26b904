#include "pcf/poly.hpp"

#include <algorithm>
#include <sstream>

#include "pcf/errors.hpp"
#include "pcf/roots.hpp"

namespace pcf {

Rat Poly::lc() const {
    if (is_zero()) throw ZeroPolyError("lc of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
}

Poly Poly::operator/(const Rat& s) const {
    if (s == 0) throw Error("Poly division by zero scalar");
    return *this * Rat(1 / s);
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval Poly::eval_interval(const Interval& x) const {
    Interval acc = Interval::point(Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + Interval::point(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat((long)i);
    return Poly(std::move(r));
}

Poly Poly::monic() const { return *this / lc(); }

Poly Poly::shifted_arg(const Rat& s) const { return compose(Poly(std::vector<Rat>{s, Rat(1)})); }

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Rat Poly::content() const {
    if (is_zero()) return Rat(0);
    Int g(0), l(1);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    Rat c(g, l);
    c.canonicalize();
    return c;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    return *this / content();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& v = (*this)[i];
        if (v == 0) continue;
        Rat a = rat_abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& A, const Poly& B) {
    if (B.is_zero()) throw ZeroPolyError("divmod by zero polynomial");
    std::vector<Rat> rem(A.coeffs());
    int db = B.degree();
    Rat blc = B.lc();
    if ((int)rem.size() - 1 < db) return {Poly(), A};
    std::vector<Rat> quot(rem.size() - db, Rat(0));
    for (int i = (int)rem.size() - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / blc;
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * B[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& A, const Poly& B) {
    Poly a = A, b = B;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

bool is_squarefree(const Poly& P) {
    if (P.is_zero()) return false;
    if (P.degree() == 0) return true;
    return poly_gcd(P, P.derivative()).degree() == 0;
}

Rat resultant(const Poly& A, const Poly& B) {
    if (A.is_zero() || B.is_zero()) throw ZeroPolyError("resultant of zero polynomial");
    int m = A.degree(), n = B.degree();
    if (m == 0) return pow_rat(A[0], n);
    if (n == 0) return pow_rat(B[0], m);
    if (m < n) {
        Rat s = (m * n) % 2 ? Rat(-1) : Rat(1);
        return s * resultant(B, A);
    }
    Poly R = divmod(A, B).second;
    Rat sign = (m * n) % 2 ? Rat(-1) : Rat(1);
    if (R.is_zero()) return Rat(0);
    return sign * pow_rat(B.lc(), m - R.degree()) * resultant(B, R);
}

Rat discriminant_cubic(const Poly& P) {
    if (P.degree() != 3) throw DegreeError("discriminant_cubic: degree != 3");
    const Rat &a = P[3], &b = P[2], &c = P[1], &d = P[0];
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

std::vector<Int> integer_roots(const Poly& P) {
    if (P.is_zero()) throw ZeroPolyError("integer_roots of zero polynomial");
    Poly sf = P;
    if (P.degree() >= 1) {
        Poly g = poly_gcd(P, P.derivative());
        if (g.degree() > 0) sf = divmod(P, g).first;
    }
    std::vector<Int> out;
    if (sf.degree() < 1) return out;
    for (const Interval& iv0 : isolate_real_roots(sf)) {
        // Narrow until at most one integer candidate remains.
        Interval iv = iv0;
        while (!iv.is_point() && iv.width() >= 1) iv = refine_step(sf, iv);
        Int lo, hi;
        mpz_cdiv_q(lo.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
        for (Int k = lo; k <= hi; ++k)
            if (P.eval(Rat(k)) == 0) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pcf
