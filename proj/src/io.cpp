#include "pcf/io.hpp"

#include "pcf/errors.hpp"

using nlohmann::json;

namespace pcf {

json rat_to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected rational as string");
    return parse_rat(j.get<std::string>());
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_json(c));
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected coefficient array");
    std::vector<Rat> coeffs;
    for (const auto& v : j) coeffs.push_back(rat_from_json(v));
    return Poly(std::move(coeffs));
}

json moebius_to_json(const Moebius& m) {
    return json::array({json::array({rat_to_json(m.a), rat_to_json(m.b)}),
                        json::array({rat_to_json(m.c), rat_to_json(m.d)})});
}

Moebius moebius_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw ParseError("expected 2x2 matrix");
    return Moebius(rat_from_json(j[0][0]), rat_from_json(j[0][1]), rat_from_json(j[1][0]),
                   rat_from_json(j[1][1]));
}

json cf_to_json(const PolyCF& cf) {
    json j;
    j["a_head"] = json::array();
    for (const Rat& v : cf.a_head) j["a_head"].push_back(rat_to_json(v));
    j["A"] = poly_to_json(cf.A);
    j["n_a"] = cf.n_a();
    j["b_head"] = json::array();
    for (const Rat& v : cf.b_head) j["b_head"].push_back(rat_to_json(v));
    j["B"] = poly_to_json(cf.B);
    j["n_b"] = cf.n_b();
    return j;
}

PolyCF cf_from_json(const json& j) {
    PolyCF cf;
    for (const auto& v : j.at("a_head")) cf.a_head.push_back(rat_from_json(v));
    for (const auto& v : j.at("b_head")) cf.b_head.push_back(rat_from_json(v));
    cf.A = poly_from_json(j.at("A"));
    cf.B = poly_from_json(j.at("B"));
    cf.validate();
    return cf;
}

json rep_to_json(const Representation& rep) {
    json j;
    j["c"] = rat_to_json(rep.c);
    j["matrix"] = moebius_to_json(rep.M);
    return j;
}

Representation rep_from_json(const json& j) {
    return {rat_from_json(j.at("c")), moebius_from_json(j.at("matrix"))};
}

} // namespace pcf
