#include "pcf/field.hpp"

#include <array>

#include "pcf/errors.hpp"
#include "pcf/roots.hpp"

namespace pcf {

FieldElem::FieldElem(Poly residue, Poly minpoly)
    : residue_(std::move(residue)), minpoly_(std::move(minpoly)) {
    if (minpoly_.degree() != 3 || minpoly_.lc() != 1)
        throw Error("FieldElem: minpoly must be a monic cubic");
    if (residue_.degree() >= 3) residue_ = divmod(residue_, minpoly_).second;
}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (minpoly_ != o.minpoly_) throw Error("FieldElem: mixed fields");
}

Rat FieldElem::as_rational() const {
    if (!is_rational()) throw RationalElementError("FieldElem: not rational");
    return residue_[0];
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(residue_ + o.residue_, minpoly_);
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(residue_ - o.residue_, minpoly_);
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(o);
    return FieldElem(residue_ * o.residue_, minpoly_);
}
FieldElem FieldElem::operator-() const { return FieldElem(-residue_, minpoly_); }
FieldElem FieldElem::operator*(const Rat& s) const { return FieldElem(residue_ * s, minpoly_); }
FieldElem FieldElem::operator+(const Rat& s) const {
    return FieldElem(residue_ + Poly::constant(s), minpoly_);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error("FieldElem: inverse of zero");
    // Extended Euclid: s*residue + t*minpoly = gcd = const (minpoly irreducible).
    Poly r0 = minpoly_, r1 = residue_;
    Poly s0, s1 = Poly::constant(Rat(1));  // coefficients of residue_
    while (r1.degree() > 0) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) throw Error("FieldElem: minpoly not irreducible (inverse failed)");
    return FieldElem(s1 / r1[0], minpoly_);
}

Moebius::Moebius(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det() == 0) throw Error("Moebius: singular matrix");
}

Rat Moebius::apply(const Rat& x) const {
    Rat den = c * x + d;
    if (den == 0) throw PoleError("Moebius: pole at argument");
    return (a * x + b) / den;
}

FieldElem Moebius::apply(const FieldElem& x) const {
    FieldElem den = x * c + d;
    if (den.is_zero()) throw PoleError("Moebius: pole at field element");
    return (x * a + b) * den.inverse();
}

std::optional<Interval> Moebius::apply(const Interval& x) const {
    Interval num = x * a + b;
    Interval den = x * c + d;
    if (den.contains_zero()) return std::nullopt;
    return num / den;
}

Moebius Moebius::operator*(const Moebius& o) const {
    return Moebius(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

Moebius Moebius::inverse() const { return Moebius(d, -b, -c, a); }

Moebius Moebius::canonical() const {
    Int l(1);
    for (const Rat* v : {&a, &b, &c, &d}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v->get_den_mpz_t());
    Rat scale(l);
    Int g(0);
    for (const Rat* v : {&a, &b, &c, &d}) {
        Rat w = *v * scale;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_num_mpz_t());
    }
    scale /= Rat(g);
    for (const Rat* v : {&a, &b, &c, &d})
        if (*v != 0) {
            if (*v * scale < 0) scale = -scale;
            break;
        }
    return Moebius(a * scale, b * scale, c * scale, d * scale);
}

bool Moebius::scalar_equal(const Moebius& o) const {
    Moebius x = canonical(), y = o.canonical();
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

Poly elem_charpoly(const FieldElem& g) {
    // charpoly(x) = prod_i (x - g(theta_i)) = Res_y(minpoly(y), x - residue(y))
    // since minpoly is monic; recover the cubic from four sample points.
    std::array<Rat, 4> xs = {Rat(0), Rat(1), Rat(2), Rat(3)};
    std::array<Rat, 4> ys;
    for (int i = 0; i < 4; ++i)
        ys[i] = resultant(g.minpoly(), Poly::constant(xs[i]) - g.residue());
    // Lagrange interpolation at 0,1,2,3.
    Poly acc;
    for (int i = 0; i < 4; ++i) {
        Poly basis = Poly::constant(Rat(1));
        Rat denom(1);
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            basis = basis * (Poly::x() - Poly::constant(xs[j]));
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * Rat(ys[i] / denom);
    }
    if (acc.degree() != 3 || acc.lc() != 1)
        throw Error("elem_charpoly: interpolation did not produce a monic cubic");
    return acc;
}

namespace {

// Kernel basis of an r x c rational matrix (rows x cols), by Gauss elimination.
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> m, size_t cols) {
    size_t rows = m.size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[rank], m[p]);
        Rat inv = 1 / m[rank][col];
        for (size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_of_col[col] = (int)rank;
        ++rank;
    }
    std::vector<std::vector<Rat>> basis;
    for (size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[col] = 1;
        for (size_t c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = -m[pivot_of_col[c2]][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

Moebius moebius_relate(const FieldElem& u, const FieldElem& v) {
    if (u.is_rational() || v.is_rational())
        throw RationalElementError("moebius_relate: rational element");
    if (u.minpoly() != v.minpoly()) throw Error("moebius_relate: mixed fields");

    // x1*uv + x2*v + x3*u + x4*1 = 0  =>  v = (-x3 u - x4)/(x1 u + x2).
    FieldElem uv = u * v;
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(4));
    for (int row = 0; row < 3; ++row) {
        m[row][0] = uv.residue()[row];
        m[row][1] = v.residue()[row];
        m[row][2] = u.residue()[row];
        m[row][3] = row == 0 ? Rat(1) : Rat(0);
    }
    auto basis = kernel_basis(std::move(m), 4);
    if (basis.empty()) throw Error("moebius_relate: no kernel vector");

    // Candidate kernel vectors: the basis itself, then pairwise sums for the
    // degenerate rank < 3 case.
    std::vector<std::vector<Rat>> cands = basis;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            std::vector<Rat> s(4);
            for (int k = 0; k < 4; ++k) s[k] = basis[i][k] + basis[j][k];
            cands.push_back(std::move(s));
        }
    for (const auto& x : cands) {
        Rat a = -x[2], b = -x[3], c = x[0], d = x[1];
        if (a * d - b * c == 0) continue;
        FieldElem den = u * c + d;
        if (den.is_zero()) continue;
        Moebius M = Moebius(a, b, c, d).canonical();
        // exact identity check: v*(cu+d) - (au+b) = 0
        FieldElem lhs = v * (u * M.c + M.d) - (u * M.a + M.b);
        if (!lhs.is_zero()) continue;
        return M;
    }
    throw Error("moebius_relate: no invertible relation found");
}

Interval embed(const FieldElem& g, Interval root_iv, const Rat& eps) {
    if (eps <= 0) throw Error("embed: eps must be positive");
    Rat w = eps;
    for (int iter = 0; iter < 64; ++iter) {
        Interval theta = refine_root(g.minpoly(), root_iv, w);
        Interval val = g.residue().eval_interval(theta);
        if (val.width() <= eps) return val;
        if (theta.is_point()) throw Error("embed: exact root but value interval too wide");
        w /= 1024;
    }
    throw PrecisionError("embed: failed to reach requested width");
}

} // namespace pcf
