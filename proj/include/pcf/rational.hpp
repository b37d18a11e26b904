#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "pcf/errors.hpp"

namespace pcf {

// mpq_class keeps fractions canonical: denominator positive, gcd(num, den) = 1.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw Error("rat: zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "p/q" or "p"; also tolerates a leading '+'.
inline Rat parse_rat(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    Rat q;
    if (q.set_str(t, 10) != 0) throw ParseError("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw Error("pow_rat: 0^negative");
    Rat b = e < 0 ? Rat(1 / base) : base;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(num.get_den_mpz_t(), b.get_den_mpz_t(), n);
    return num;
}

inline double log2_abs(const Int& z) {
    long exp;
    double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
    if (m == 0.0) return -HUGE_VAL;
    return std::log2(std::fabs(m)) + (double)exp;
}

// Natural log of |q|; -inf for q = 0. Accurate to double precision of the log.
inline double log_abs(const Rat& q) {
    if (q == 0) return -HUGE_VAL;
    return (log2_abs(q.get_num()) - log2_abs(q.get_den())) * M_LN2;
}

inline double log10_abs(const Rat& q) { return log_abs(q) / M_LN10; }

// Decimal expansion truncated toward zero to `digits` fractional digits.
inline std::string decimal_string(const Rat& q, int digits) {
    Int num = abs(q.get_num());
    Int den = q.get_den();
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, (unsigned long)digits);
    Int scaled = num * scale / den;  // floor of |q|*10^digits
    std::string s = scaled.get_str();
    if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (sgn(q) < 0) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return out;
}

} // namespace pcf
