#include "unitpoly/serialize.hpp"

#include <algorithm>

namespace unitpoly {

Json poly_to_json(const RationalPoly& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coefficients()) {
        arr.push_back(to_string(c));
    }
    return arr;
}

RationalPoly poly_from_json(const Json& j, std::string_view field) {
    const std::string name(field);
    if (!j.is_array()) {
        throw ParseError("field '" + name + "': expected an array of coefficient strings");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = name + "[" + std::to_string(i) + "]";
        if (!j[i].is_string()) {
            throw ParseError("field '" + where + "': coefficient must be a string");
        }
        try {
            coeffs.push_back(parse_rational(j[i].get<std::string>()));
        } catch (const PreconditionError& e) {
            throw ParseError("field '" + where + "': " + e.what());
        }
    }
    return RationalPoly(std::move(coeffs));
}

Json triple_to_json(const PolyTriple& pt) {
    Json j = Json::object();
    j["x"] = poly_to_json(pt.x);
    j["y"] = poly_to_json(pt.y);
    j["z"] = poly_to_json(pt.z);
    return j;
}

PolyTriple triple_from_json(const Json& j, std::string_view where) {
    const std::string prefix = where.empty() ? "" : std::string(where) + ".";
    if (!j.is_object()) {
        throw ParseError("expected an object with fields x, y, z" +
                         (where.empty() ? std::string() : " at '" + std::string(where) + "'"));
    }
    auto read = [&](const char* key) {
        const std::string name = prefix + key;
        if (!j.contains(key)) {
            throw ParseError("field '" + name + "': missing");
        }
        RationalPoly p = poly_from_json(j.at(key), name);
        if (p.is_zero()) {
            throw ParseError("field '" + name + "': zero polynomial");
        }
        return p;
    };
    PolyTriple pt;
    pt.x = read("x");
    pt.y = read("y");
    pt.z = read("z");
    return pt;
}

Json params_to_json(const ParamSet& ps) {
    Json j = Json::object();
    j["k"] = to_string(ps.k);
    j["l"] = to_string(ps.l);
    j["s"] = to_string(ps.s);
    j["r"] = to_string(ps.r);
    return j;
}

Json parse_document(const std::string& text, std::string_view source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        const std::size_t pos = std::min<std::size_t>(e.byte, text.size());
        const auto before = text.substr(0, pos > 0 ? pos - 1 : 0);
        const auto line = 1 + std::count(before.begin(), before.end(), '\n');
        const auto last_nl = before.rfind('\n');
        const auto col = last_nl == std::string::npos ? before.size() + 1 : before.size() - last_nl;
        throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": invalid JSON");
    }
}

}  // namespace unitpoly
