#include "posetq/json_io.hpp"

#include <fstream>
#include <sstream>

#include "posetq/error.hpp"

namespace posetq::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::string child(const std::string& where, const std::string& key) { return where + "." + key; }
std::string child(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::int64_t as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

std::uint32_t as_digit(const Json& j, std::uint32_t radix, const std::string& where) {
    const auto v = as_int(j, where);
    if (v < 0 || v >= static_cast<std::int64_t>(radix)) {
        fail(where, "value " + std::to_string(v) + " outside [0, " + std::to_string(radix) + ")");
    }
    return static_cast<std::uint32_t>(v);
}

gf::Elem parse_base_entry(const gf::Field& base, const Json& j, const std::string& where) {
    if (j.is_number_integer()) return as_digit(j, base.size(), where);
    const auto& arr = as_array(j, where);
    if (arr.size() != static_cast<std::size_t>(base.degree())) {
        fail(where, "expected " + std::to_string(base.degree()) + " GF(p) coordinates");
    }
    std::vector<std::uint32_t> c;
    for (std::size_t i = 0; i < arr.size(); ++i) c.push_back(as_digit(arr[i], base.characteristic(), child(where, i)));
    return base.from_coeffs(c);
}

Json base_entry_json(const gf::Field& base, gf::Elem x) {
    if (base.degree() == 1) return x;
    return base.coeffs(x);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

const Json& require(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, "missing key \"" + key + "\"");
    return *it;
}

Document parse_text(const std::string& text, const std::string& source) {
    Document d;
    d.source = source;
    d.bytes = text;
    try {
        d.root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        fail(source + ":" + std::to_string(line) + ":" + std::to_string(col), "malformed JSON");
    }
    return d;
}

Document load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

gf::Field parse_field(const Json& j, const std::string& where) {
    const auto p = as_int(require(j, "p", where), child(where, "p"));
    const auto m = j.contains("m") ? as_int(j["m"], child(where, "m")) : 1;
    if (p < 2 || p > 65535) fail(child(where, "p"), "characteristic out of range");
    if (m < 1 || m > 20) fail(child(where, "m"), "degree out of range");
    if (!j.contains("poly")) {
        return m == 1 ? gf::Field::prime(static_cast<std::uint32_t>(p))
                      : gf::Field::standard(static_cast<std::uint32_t>(p), static_cast<int>(m));
    }
    const auto& arr = as_array(j["poly"], child(where, "poly"));
    std::vector<std::uint32_t> poly;
    for (std::size_t i = 0; i < arr.size(); ++i) poly.push_back(as_digit(arr[i], static_cast<std::uint32_t>(p), child(child(where, "poly"), i)));
    if (m == 1) {
        gf::Field::make(static_cast<std::uint32_t>(p), 1, poly);
        return gf::Field::prime(static_cast<std::uint32_t>(p));
    }
    return gf::Field::make(static_cast<std::uint32_t>(p), static_cast<int>(m), poly);
}

code::Ambient parse_ambient(const Json& j, const std::string& where) {
    const auto base = parse_field(j, where);
    const auto t = j.contains("t") ? as_int(j["t"], child(where, "t")) : 1;
    if (t < 1 || t > 20) fail(child(where, "t"), "extension degree out of range");
    return code::Ambient::make(base, static_cast<int>(t));
}

poset::Poset parse_poset(const Json& j, const std::string& where) {
    const auto n = as_int(require(j, "n", where), child(where, "n"));
    if (n < 0 || n > poset::kMaxElements) fail(child(where, "n"), "size out of range");
    std::vector<std::pair<int, int>> covers;
    if (j.contains("covers")) {
        const auto cw = child(where, "covers");
        const auto& arr = as_array(j["covers"], cw);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto& pair = as_array(arr[i], child(cw, i));
            if (pair.size() != 2) fail(child(cw, i), "expected a pair [i, j]");
            covers.emplace_back(static_cast<int>(as_int(pair[0], child(child(cw, i), 0))),
                                static_cast<int>(as_int(pair[1], child(child(cw, i), 1))));
        }
    }
    return poset::Poset::from_covers(static_cast<int>(n), covers);
}

gf::Elem parse_element(const code::Ambient& a, const Json& j, const std::string& where) {
    const auto& base = a.base();
    if (a.t() == 1) {
        if (j.is_array() && j.size() == 1 && base.degree() > 1) return parse_base_entry(base, j[0], child(where, 0));
        return parse_base_entry(base, j, where);
    }
    const auto& arr = as_array(j, where);
    if (arr.size() != static_cast<std::size_t>(a.t())) {
        fail(where, "expected " + std::to_string(a.t()) + " GF(q) coordinates");
    }
    gf::Elem x = 0, scale = 1;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        x += parse_base_entry(base, arr[i], child(where, i)) * scale;
        scale *= base.size();
    }
    return x;
}

poset::Ideal parse_ideal(const poset::Poset& p, const Json& j, const std::string& where) {
    const auto& arr = as_array(j, where);
    poset::Subset s = 0;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto v = as_int(arr[i], child(where, i));
        if (v < 1 || v > p.size()) fail(child(where, i), "label outside [1, " + std::to_string(p.size()) + "]");
        s |= poset::Subset{1} << (v - 1);
    }
    return p.as_ideal(s);
}

code::AdditiveCode parse_code(const Json& j, const std::string& where) {
    const auto a = parse_ambient(require(j, "ambient", where), child(where, "ambient"));
    const auto n = as_int(require(j, "n", where), child(where, "n"));
    if (n < 1 || n > poset::kMaxElements) fail(child(where, "n"), "length out of range");
    code::Linearity lin = code::Linearity::prime;
    if (j.contains("linearity")) {
        const auto& l = j["linearity"];
        if (l == "prime") lin = code::Linearity::prime;
        else if (l == "base") lin = code::Linearity::base;
        else if (l == "full") lin = code::Linearity::full;
        else fail(child(where, "linearity"), "expected \"prime\", \"base\" or \"full\"");
    }
    std::vector<gf::Vec> gens;
    const auto gw = child(where, "generators");
    const auto& arr = as_array(require(j, "generators", where), gw);
    for (std::size_t r = 0; r < arr.size(); ++r) {
        const auto& row = as_array(arr[r], child(gw, r));
        if (row.size() != static_cast<std::size_t>(n)) {
            fail(child(gw, r), "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
        }
        gf::Vec v;
        for (std::size_t i = 0; i < row.size(); ++i) v.push_back(parse_element(a, row[i], child(child(gw, r), i)));
        gens.push_back(std::move(v));
    }
    return code::AdditiveCode::make(a, static_cast<std::size_t>(n), lin, std::move(gens));
}

Json field_json(const gf::Field& f) {
    Json j;
    j["p"] = f.characteristic();
    j["m"] = f.degree();
    if (f.degree() > 1) {
        const auto poly = f.modulus();
        j["poly"] = std::vector<std::uint32_t>(poly.begin(), poly.end());
    }
    return j;
}

Json ambient_json(const code::Ambient& a) {
    Json j = field_json(a.base());
    j["t"] = a.t();
    return j;
}

Json element_json(const code::Ambient& a, gf::Elem x) {
    const auto& base = a.base();
    if (a.t() == 1) return base_entry_json(base, x);
    Json out = Json::array();
    for (int i = 0; i < a.t(); ++i) {
        out.push_back(base_entry_json(base, x % base.size()));
        x /= base.size();
    }
    return out;
}

Json vector_json(const code::Ambient& a, const gf::Vec& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(element_json(a, x));
    return out;
}

Json code_json(const code::AdditiveCode& d) {
    Json j;
    j["ambient"] = ambient_json(d.ambient());
    j["n"] = d.length();
    j["linearity"] = code::to_string(d.linearity());
    Json gens = Json::array();
    for (const auto& g : d.generators()) gens.push_back(vector_json(d.ambient(), g));
    j["generators"] = gens;
    return j;
}

Json poset_json(const poset::Poset& p) {
    Json j;
    j["n"] = p.size();
    Json covers = Json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
    j["covers"] = covers;
    return j;
}

Json ideal_json(const poset::Ideal& i) { return i.members(); }

Json rational_json(const code::Rational& r) {
    if (r.is_integer()) return r.num;
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace posetq::json_io
