#pragma once

#include <string>

#include <json.hpp>

#include "posetq/code.hpp"
#include "posetq/poset.hpp"
#include "posetq/symplectic.hpp"

namespace posetq::json_io {

using Json = nlohmann::ordered_json;

/// A parsed JSON document together with the file it came from, for error messages.
struct Document {
    Json root;
    std::string source;
    std::string bytes;
};

/// Reads and parses a file; ParseError messages carry file, line and column.
Document load_file(const std::string& path);
Document parse_text(const std::string& text, const std::string& source);

/// {"p": 2, "m": 2, "poly": [1, 1, 1]}; poly is optional (defaults to the smallest irreducible).
gf::Field parse_field(const Json& j, const std::string& where);
/// {"p": 2, "m": 1, "t": 2, "poly": [...]}; poly defines GF(q) as in parse_field.
code::Ambient parse_ambient(const Json& j, const std::string& where);
/// {"n": 3, "covers": [[1, 3]]}
poset::Poset parse_poset(const Json& j, const std::string& where);
/// {"ambient": {...}, "n": 3, "linearity": "full", "generators": [[e, e, e], ...]}
code::AdditiveCode parse_code(const Json& j, const std::string& where);
/// Element of GF(q^t): an array of t GF(q) entries, each an index below q or an array of m GF(p)
/// coordinates. For t = 1 a bare GF(q) entry is accepted.
gf::Elem parse_element(const code::Ambient& a, const Json& j, const std::string& where);
/// Ideal as a list of 1-based labels; InvalidArgument when not downward closed.
poset::Ideal parse_ideal(const poset::Poset& p, const Json& j, const std::string& where);

Json field_json(const gf::Field& f);
Json ambient_json(const code::Ambient& a);
Json element_json(const code::Ambient& a, gf::Elem x);
Json vector_json(const code::Ambient& a, const gf::Vec& v);
Json code_json(const code::AdditiveCode& d);
Json poset_json(const poset::Poset& p);
Json ideal_json(const poset::Ideal& i);
Json rational_json(const code::Rational& r);

/// Key lookup that raises ParseError naming the path when absent.
const Json& require(const Json& j, const std::string& key, const std::string& where);

}  // namespace posetq::json_io
