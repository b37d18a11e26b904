// pcf: polynomial-type continued fractions for cubic irrationals,
// rational powers, and trinomial roots. Exact rational arithmetic throughout;
// JSON output encodes every rational as a "p/q" string.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>

#include "pcf/errors.hpp"
#include "pcf/io.hpp"
#include "pcf/parse.hpp"
#include "pcf/pipeline.hpp"
#include "pcf/roots.hpp"
#include "pcf/series.hpp"

using nlohmann::json;
using namespace pcf;

namespace {

constexpr int kExitTolerance = 1;
constexpr int kExitParse = 2;
constexpr int kExitReducible = 3;
constexpr int kExitSelector = 4;
constexpr int kExitPrecision = 5;
constexpr int kExitDivergence = 6;

RootSelector make_selector(const std::optional<int>& idx, const std::string& interval) {
    if (idx && !interval.empty()) throw SelectorError("give either --root-index or --root-interval");
    if (idx) return RootSelector::by_index(*idx);
    if (!interval.empty()) {
        auto comma = interval.find(',');
        if (comma == std::string::npos) throw ParseError("--root-interval wants 'lo,hi'");
        return RootSelector::by_interval(
            Interval(parse_rat(interval.substr(0, comma)), parse_rat(interval.substr(comma + 1))));
    }
    throw SelectorError("one of --root-index or --root-interval is required");
}

Moebius parse_matrix(const std::string& text) {
    std::vector<Rat> vals;
    size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string tok =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        vals.push_back(parse_rat(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (vals.size() != 4) throw ParseError("--matrix wants four rationals 'a,b,c,d'");
    return Moebius(vals[0], vals[1], vals[2], vals[3]);
}

// Decimal digits of the CF limit certified against an enclosure of the root.
int certified_digits(const Rat& value, const Interval& root) {
    Rat err = std::max(rat_abs(value - root.lo), rat_abs(value - root.hi));
    if (err == 0) return 999;
    double d = -log10_abs(err);
    return d < 0 ? 0 : (int)d;
}

int run_represent(const std::string& poly_text, const std::optional<int>& idx,
                  const std::string& interval, const std::string& min_c, bool /*json_out*/) {
    Poly P = parse_poly(poly_text);
    RootSelector sel = make_selector(idx, interval);
    Rat min_abs_c = min_c.empty() ? Rat(81, 4) : parse_rat(min_c);
    Representation rep = represent(P, sel, min_abs_c);
    PolyCF cf = to_cf(rep);

    long depth = 120;
    Rat value = cf_value(cf, depth);
    Poly Pz = P.primitive() * Rat(sgn(P.lc()));
    Interval root = refine_root(Pz, select_root(Pz, sel), pow_rat(Rat(1, 10), 60));

    json out = rep_to_json(rep);
    out["cf"] = cf_to_json(cf);
    out["verified_digits"] = certified_digits(value, root);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_eval(const std::string& c_text, const std::string& matrix_text, long depth, int digits) {
    Representation rep{parse_rat(c_text), parse_matrix(matrix_text)};
    if (rat_abs(rep.c) <= Rat(27, 4)) throw DivergenceError("--c must satisfy |c| > 27/4");
    PolyCF cf = to_cf(rep);
    auto cs = convergents(cf, depth);
    if (cs.back().q == 0) throw PrecisionError("zero denominator at requested depth");
    Rat v = cs.back().p / cs.back().q;
    std::cout << "p/q     = " << to_string(cs.back().p) << " / " << to_string(cs.back().q) << "\n";
    std::cout << "decimal = " << decimal_string(v, digits) << "\n";
    return 0;
}

int run_verify(const std::string& poly_text, const std::optional<int>& idx,
               const std::string& interval, const std::string& rep_file, long depth,
               const std::string& tol_text, bool table) {
    Poly P = parse_poly(poly_text);
    RootSelector sel = make_selector(idx, interval);
    Rat tol = tol_text.empty() ? pow_rat(Rat(1, 10), 30) : parse_rat(tol_text);

    Representation rep = [&] {
        if (!rep_file.empty()) {
            std::ifstream in(rep_file);
            if (!in) throw ParseError("cannot open representation file: " + rep_file);
            json j = json::parse(in);
            return rep_from_json(j);
        }
        return represent(P, sel);
    }();

    VerifyReport report = verify(rep, P, sel, depth, tol);
    double E = report.rate_available ? report.rate.E : 0.0;
    const char* sep = table ? "\t" : "  ";
    std::cout << "# c = " << to_string(rep.c) << ", expected E = 4|c|/27 = " << report.expected_E
              << "\n";
    std::cout << "n" << sep << "|error|" << sep << "|error|*E^n*n^1.5\n";
    for (const auto& row : report.rows) {
        if (row.n % 5 != 0 && row.n != report.rows.back().n) continue;
        double le = log10_abs(row.err_hi);
        double scaled = row.err_hi == 0
                            ? 0.0
                            : std::pow(10.0, le + row.n * std::log10(report.expected_E) +
                                                 1.5 * std::log10((double)std::max(1L, row.n)));
        std::cout << row.n << sep << "1e" << (long)le << sep << scaled << "\n";
    }
    if (report.rate_available)
        std::cout << "# fitted E = " << E << ", fitted exponent = " << report.rate.exponent
                  << "\n";
    std::cout << (report.pass ? "# PASS" : "# FAIL") << ": final |error| "
              << (report.pass ? "<" : ">=") << " tol\n";
    return report.pass ? 0 : kExitTolerance;
}

int run_power(const std::string& base_text, const std::string& exp_text, long depth, int digits) {
    Rat u = parse_rat(base_text);
    auto slash = exp_text.find('/');
    long m = std::stol(exp_text.substr(0, slash));
    long d = slash == std::string::npos ? 1 : std::stol(exp_text.substr(slash + 1));
    if (d < 0) {
        d = -d;
        m = -m;
    }
    if (d == 0) throw ParseError("zero exponent denominator");
    long g = std::gcd(m < 0 ? -m : m, d);
    if (g > 1) {
        m /= g;
        d /= g;
    }

    json out;
    // Exact short-circuit when u^(1/d) is rational.
    Int rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), u.get_num_mpz_t(), d) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), u.get_den_mpz_t(), d) != 0;
    if (u > 0 && exact_n && exact_d) {
        Rat root(rn, rd);
        root.canonicalize();
        out["exact"] = to_string(pow_rat(root, m));
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    PowerSeries ps = power_series(u, m, d);
    PolyCF cf = euler_to_cf(ps.spec);
    Rat v = cf_value(cf, depth);
    out["f"] = to_string(ps.f);
    out["z"] = to_string(ps.z);
    out["cf"] = cf_to_json(cf);
    out["value"] = decimal_string(v, digits);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_trinomial(long k, const std::string& a_text, const std::string& b_text, long depth,
                  int digits) {
    Rat a = parse_rat(a_text), b = parse_rat(b_text);
    SeriesSpec spec = trinomial_series(k, a, b);
    PolyCF cf = euler_to_cf(spec);
    Rat v = cf_value(cf, depth);
    // residual |v^k + a v + b| as a convergence indicator
    Rat residual = rat_abs(pow_rat(v, k) + a * v + b);
    json out;
    out["cf"] = cf_to_json(cf);
    out["value"] = decimal_string(v, digits);
    out["residual_log10"] = residual == 0 ? -999.0 : log10_abs(residual);
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial-type continued fractions for algebraic numbers"};
    app.require_subcommand(1);

    std::string poly_text, interval, min_c, rep_file, c_text, matrix_text, tol_text;
    std::string base_text, exp_text, a_text, b_text;
    std::optional<int> root_index;
    long depth = 80, k = 3;
    int digits = 30;
    bool json_out = false, table = false;

    auto* rep = app.add_subcommand("represent", "compute a (c, matrix) representation of a root");
    rep->add_option("--poly", poly_text, "cubic polynomial in x")->required();
    rep->add_option("--root-index", root_index, "real root index, ascending");
    rep->add_option("--root-interval", interval, "lo,hi isolating one real root");
    rep->add_option("--min-c", min_c, "lower bound for |c|");
    rep->add_flag("--json", json_out, "JSON output (default)");

    auto* ev = app.add_subcommand("eval", "evaluate the CF of a stored representation");
    ev->add_option("--c", c_text)->required();
    ev->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    ev->add_option("--depth", depth);
    ev->add_option("--digits", digits);

    auto* ver = app.add_subcommand("verify", "error table and convergence-rate check");
    ver->add_option("--poly", poly_text)->required();
    ver->add_option("--root-index", root_index);
    ver->add_option("--root-interval", interval);
    ver->add_option("--rep-file", rep_file, "JSON file with {c, matrix}");
    ver->add_option("--depth", depth);
    ver->add_option("--tol", tol_text, "tolerance (default 1/10^30)");
    ver->add_flag("--table", table, "TSV output");

    auto* pw = app.add_subcommand("power", "CF for a rational power of a rational");
    pw->add_option("--base", base_text)->required();
    pw->add_option("--exp", exp_text, "m/d")->required();
    pw->add_option("--depth", depth);
    pw->add_option("--digits", digits);

    auto* tri = app.add_subcommand("trinomial", "CF for a root of x^k + ax + b");
    tri->add_option("--k", k)->required();
    tri->add_option("--a", a_text)->required();
    tri->add_option("--b", b_text)->required();
    tri->add_option("--depth", depth);
    tri->add_option("--digits", digits);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rep->parsed())
            return run_represent(poly_text, root_index, interval, min_c, json_out);
        if (ev->parsed()) return run_eval(c_text, matrix_text, depth, digits);
        if (ver->parsed())
            return run_verify(poly_text, root_index, interval, rep_file, depth, tol_text, table);
        if (pw->parsed()) return run_power(base_text, exp_text, depth, digits);
        if (tri->parsed()) return run_trinomial(k, a_text, b_text, depth, digits);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ReducibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitReducible;
    } catch (const SelectorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSelector;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 10;
    }
    return 0;
}
