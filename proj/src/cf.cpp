#include "pcf/cf.hpp"

#include <cmath>

#include "pcf/errors.hpp"

namespace pcf {

void PolyCF::validate() const {
    if (a_head.empty() || b_head.empty()) throw Error("PolyCF: empty heads");
    for (size_t i = 1; i < a_head.size(); ++i)
        if (a_head[i] == 0) throw Error("PolyCF: zero a(n) head entry");
    for (const Rat& v : b_head)
        if (v == 0) throw Error("PolyCF: zero b(n) head entry");
    if (A.is_zero() || B.is_zero()) throw Error("PolyCF: zero tail polynomial");
    for (const Int& r : integer_roots(A))
        if (r > n_a()) throw Error("PolyCF: a(n) tail vanishes at n = " + r.get_str());
    for (const Int& r : integer_roots(B))
        if (r > n_b()) throw Error("PolyCF: b(n) tail vanishes at n = " + r.get_str());
}

PolyCF euler_to_cf(const SeriesSpec& spec) {
    // Joint rescale of the term-ratio fraction so both parts have integer
    // coefficients with no common content.
    Poly num = spec.ratio_num, den = spec.ratio_den;
    {
        std::vector<Rat> all = num.coeffs();
        for (const Rat& v : den.coeffs()) all.push_back(v);
        Rat jc = Poly(std::move(all)).content();
        if (jc == 0) throw Error("euler_to_cf: degenerate term ratio");
        num = num / jc;
        den = den / jc;
    }
    if (spec.t0 == 0 || num.eval(Rat(0)) == 0)
        throw Error("euler_to_cf: series terminates at the first term");

    // Partial sums as convergents:
    //   a(0)=t0, a(1)=den(0), a(n)=den(n-1)+num(n-1) for n>=2,
    //   b(0)=t0*num(0),       b(n)=-den(n-1)*num(n)  for n>=1.
    PolyCF cf;
    cf.a_head = {spec.t0, den.eval(Rat(0))};
    cf.A = den.shifted_arg(Rat(-1)) + num.shifted_arg(Rat(-1));
    cf.b_head = {spec.t0 * num.eval(Rat(0))};
    cf.B = -(den.shifted_arg(Rat(-1)) * num);
    cf.validate();
    return cf;
}

PolyCF drop_front(const PolyCF& cf, long k) {
    if (k <= 0) return cf;
    PolyCF out;
    for (long n = k; n <= std::max(cf.n_a(), k + 1); ++n) out.a_head.push_back(cf.a(n));
    for (long n = k; n <= std::max(cf.n_b(), k + 1); ++n) out.b_head.push_back(cf.b(n));
    out.A = cf.A.shifted_arg(Rat(k));
    out.B = cf.B.shifted_arg(Rat(k));
    return out;
}

PolyCF splice_moebius(const Moebius& M, const PolyCF& cf) {
    if (M.is_affine()) {
        // (a/d) u + b/d: only a(0) and b(0) change.
        Rat s = M.a / M.d;
        PolyCF out = cf;
        out.a_head[0] = s * cf.a(0) + M.b / M.d;
        out.b_head[0] = s * cf.b(0);
        out.validate();
        return out;
    }
    Rat a1 = cf.a(0) + M.d / M.c;
    if (a1 == 0) {
        // a/c + b'(0)/(0 + b'(1)/w) = a/c + (b'(0)/b(0)) w, where w is the
        // value of the CF with its first level dropped.
        Rat b0 = -M.det() / (M.c * M.c);
        Moebius aff(b0 / cf.b(0), M.a / M.c, Rat(0), Rat(1));
        return splice_moebius(aff, drop_front(cf, 1));
    }
    PolyCF out;
    out.a_head = {M.a / M.c, a1};
    for (size_t i = 1; i < cf.a_head.size(); ++i) out.a_head.push_back(cf.a_head[i]);
    out.A = cf.A.shifted_arg(Rat(-1));
    out.b_head = {-M.det() / (M.c * M.c)};
    for (const Rat& v : cf.b_head) out.b_head.push_back(v);
    out.B = cf.B.shifted_arg(Rat(-1));
    out.validate();
    return out;
}

std::vector<Convergent> convergents(const PolyCF& cf, long N) {
    if (N < 0) throw Error("convergents: negative depth");
    std::vector<Convergent> out;
    out.reserve(N + 1);
    Rat p_prev(1), q_prev(0), p_curr = cf.a(0), q_curr(1);
    out.push_back({p_curr, q_curr});
    for (long n = 1; n <= N; ++n) {
        Rat an = cf.a(n), bn1 = cf.b(n - 1);
        Rat p = an * p_curr + bn1 * p_prev;
        Rat q = an * q_curr + bn1 * q_prev;
        p_prev = std::move(p_curr);
        q_prev = std::move(q_curr);
        p_curr = std::move(p);
        q_curr = std::move(q);
        out.push_back({p_curr, q_curr});
    }
    return out;
}

Rat cf_value(const PolyCF& cf, long N) {
    auto cs = convergents(cf, N);
    if (cs.back().q == 0) throw PoleError("cf_value: zero denominator at requested depth");
    return cs.back().p / cs.back().q;
}

RateEstimate estimate_rate(const PolyCF& cf, const Interval& limit_iv, long n_lo, long n_hi) {
    if (n_lo < 1 || n_hi <= n_lo) throw Error("estimate_rate: bad depth window");
    auto cs = convergents(cf, n_hi);
    std::vector<double> xs_n, xs_logn, ys;
    for (long n = n_lo; n <= n_hi; ++n) {
        if (cs[n].q == 0) continue;
        Rat v = cs[n].p / cs[n].q;
        Rat e_lo = limit_iv.lo - v, e_hi = limit_iv.hi - v;
        Rat abs_lo = std::min(rat_abs(e_lo), rat_abs(e_hi));
        Rat abs_hi = std::max(rat_abs(e_lo), rat_abs(e_hi));
        if (sgn(e_lo) != sgn(e_hi) || abs_lo == 0)
            throw PrecisionError("estimate_rate: limit interval too wide at depth " +
                                 std::to_string(n));
        if ((abs_hi - abs_lo) / abs_lo > Rat(1, 500))
            throw PrecisionError("estimate_rate: error not certified to 3 digits at depth " +
                                 std::to_string(n));
        xs_n.push_back((double)n);
        xs_logn.push_back(std::log((double)n));
        ys.push_back(log_abs(abs_hi));
    }
    if (ys.size() < 3) throw PrecisionError("estimate_rate: too few usable depths");

    // Least squares for y = c0 - c1 n - c2 log n.
    double S[3][3] = {}, T[3] = {};
    for (size_t i = 0; i < ys.size(); ++i) {
        double row[3] = {1.0, -xs_n[i], -xs_logn[i]};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) S[r][c] += row[r] * row[c];
            T[r] += row[r] * ys[i];
        }
    }
    // Gaussian elimination, 3x3.
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(S[r][col]) > std::fabs(S[piv][col])) piv = r;
        std::swap(S[col], S[piv]);
        std::swap(T[col], T[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double f = S[r][col] / S[col][col];
            for (int c = 0; c < 3; ++c) S[r][c] -= f * S[col][c];
            T[r] -= f * T[col];
        }
    }
    double c0 = T[0] / S[0][0], c1 = T[1] / S[1][1], c2 = T[2] / S[2][2];
    return {std::exp(c1), c2, c0};
}

} // namespace pcf
