#pragma once

// JSON forms shared by the CLI and external tools.
//
// A polynomial is an array of coefficient strings, constant term first, each
// an integer ("16") or a reduced fraction ("9/5"). A triple is an object
// {"x": [...], "y": [...], "z": [...]}.

#include "unitpoly/qpoly.hpp"
#include "unitpoly/theorem.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace unitpoly {

using Json = nlohmann::ordered_json;

/// Malformed external input. what() names the offending field or line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json poly_to_json(const RationalPoly& p);
/// `field` is used in error messages, e.g. "y".
RationalPoly poly_from_json(const Json& j, std::string_view field);

Json triple_to_json(const PolyTriple& pt);
/// Rejects missing fields and zero polynomials.
PolyTriple triple_from_json(const Json& j, std::string_view where = "");

Json params_to_json(const ParamSet& ps);

/// Parses a whole document; syntax errors report "<source>:<line>:<col>".
Json parse_document(const std::string& text, std::string_view source);

}  // namespace unitpoly
