#include "pcf/parse.hpp"

#include <cctype>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start) throw ParseError("expected number at position " + std::to_string(start) +
                                         " in '" + s + "'");
        return Int(s.substr(start, i - start));
    }
};

} // namespace

Poly parse_poly(const std::string& text) {
    Scanner sc{text};
    std::vector<Rat> coeffs;
    auto add = [&](size_t deg, const Rat& v) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
        coeffs[deg] += v;
    };
    bool any = false;
    while (!sc.done()) {
        int sign = 1;
        if (sc.eat('+')) {
        } else if (sc.eat('-')) {
            sign = -1;
        } else if (any) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(sc.i) + " in '" +
                             text + "'");
        }
        while (sc.peek() == '+' || sc.peek() == '-') {
            if (sc.eat('-')) sign = -sign;
            else sc.eat('+');
        }
        Rat coef(1);
        bool have_coef = false;
        if (std::isdigit((unsigned char)sc.peek())) {
            Int num = sc.integer();
            Int den(1);
            if (sc.eat('/')) den = sc.integer();
            if (den == 0) throw ParseError("zero denominator in '" + text + "'");
            coef = Rat(num, den);
            coef.canonicalize();
            have_coef = true;
        }
        sc.eat('*');
        size_t deg = 0;
        if (sc.peek() == 'x' || sc.peek() == 'X') {
            ++sc.i;
            deg = 1;
            if (sc.eat('^')) {
                Int d = sc.integer();
                if (d > 64) throw ParseError("exponent too large in '" + text + "'");
                deg = d.get_ui();
            }
        } else if (!have_coef) {
            throw ParseError("expected term at position " + std::to_string(sc.i) + " in '" + text +
                             "'");
        }
        add(deg, Rat(sign) * coef);
        any = true;
    }
    if (!any) throw ParseError("empty polynomial");
    return Poly(std::move(coeffs));
}

} // namespace pcf
