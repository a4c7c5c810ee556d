#include "posetq/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "posetq/error.hpp"
#include "posetq/json_io.hpp"
#include "posetq/qsim.hpp"

namespace posetq::cli {

namespace {

using json_io::Json;

struct Outcome {
    Json result;
    bool ok = true;
    std::vector<std::string> lines;
};

struct Context {
    const RunSpec& spec;
    json_io::Document input;
    std::optional<json_io::Document> poset_doc;
    Json caps = Json::object();

    code::AdditiveCode code() const { return json_io::parse_code(json_io::require(input.root, "code", input.source), input.source + ":code"); }

    poset::Poset poset() const {
        if (poset_doc) {
            const auto& r = poset_doc->root;
            if (r.is_object() && r.contains("poset")) return json_io::parse_poset(r["poset"], poset_doc->source + ":poset");
            return json_io::parse_poset(r, poset_doc->source);
        }
        return json_io::parse_poset(json_io::require(input.root, "poset", input.source), input.source + ":poset");
    }

    stabilizer::StabilizerGroup stab() const {
        const auto c = code();
        if (c.ambient().t() == 2) return stabilizer::StabilizerGroup::from_code(symplectic::psi_code(c));
        if (c.ambient().t() != 1 || c.length() % 2 != 0) {
            throw Error(ErrorKind::FormAmbientMismatch, "a stabilizer needs a code in GF(q)^{2n} or GF(q^2)^n");
        }
        return stabilizer::StabilizerGroup::from_code(c);
    }

    void use_cap() { caps["cap"] = spec.cap; }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string rational_text(const code::Rational& r) {
    return r.is_integer() ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

Json params_json(const stabilizer::StabCodeParams& r) {
    Json j;
    j["n"] = r.n;
    j["logpK"] = r.logpK;
    j["logqK"] = json_io::rational_json(r.log_q_K());
    j["dP"] = r.dP;
    j["pure"] = r.pure;
    j["k1_convention"] = r.k1_convention;
    return j;
}

std::string params_line(const stabilizer::StabCodeParams& r, std::uint32_t q) {
    return "[[" + std::to_string(r.n) + ", " + std::to_string(q) + "^" + rational_text(r.log_q_K()) + ", " +
           std::to_string(r.dP) + "]]_" + std::to_string(q);
}

Outcome cmd_params(Context& ctx) {
    ctx.use_cap();
    const auto s = ctx.stab();
    const auto p = ctx.poset();
    const auto r = stabilizer::params(p, s, ctx.spec.cap);
    Outcome o;
    o.result = params_json(r);
    o.lines = {"parameters: " + params_line(r, s.field().size()), "pure: " + yes_no(r.pure)};
    if (r.k1_convention) o.lines.push_back("K = 1: dP is the minimum nonzero weight of the symplectic dual");
    return o;
}

symplectic::Form parse_form(const Context& ctx, const code::AdditiveCode& d) {
    const auto& root = ctx.input.root;
    if (!root.contains("form")) return d.ambient().t() == 2 ? symplectic::Form::alt : symplectic::Form::symp;
    const auto& f = root["form"];
    if (f == "symp") return symplectic::Form::symp;
    if (f == "alt") return symplectic::Form::alt;
    if (f == "herm") return symplectic::Form::herm;
    throw Error(ErrorKind::ParseError, ctx.input.source + ":form: expected \"symp\", \"alt\" or \"herm\"");
}

Outcome cmd_dual(Context& ctx) {
    const auto d = ctx.code();
    const auto form = parse_form(ctx, d);
    const auto dual = symplectic::dual(d, form);
    Outcome o;
    o.result["form"] = symplectic::to_string(form);
    o.result["log_p_size"] = dual.log_p_size();
    o.result["dual"] = json_io::code_json(dual);
    o.lines = {std::string("form: ") + symplectic::to_string(form),
               "dual size: " + std::to_string(d.ambient().characteristic()) + "^" + std::to_string(dual.log_p_size())};
    return o;
}

Outcome cmd_mds_check(Context& ctx) {
    ctx.use_cap();
    const auto d = ctx.code();
    const auto p = ctx.poset();
    Outcome o;
    const auto qdim = code::q_dimension(d);
    o.result["qdim"] = json_io::rational_json(qdim);
    if (d.log_p_size() == 0) {
        o.result["mds"] = false;
        o.lines = {"MDS: false (zero code)"};
        o.ok = false;
        return o;
    }
    const int dp = code::d_P(p, d, ctx.spec.cap);
    const bool mds = code::is_mds(p, d, ctx.spec.cap);
    o.result["dP"] = dp;
    o.result["mds"] = mds;
    o.ok = mds;
    o.lines = {"dP: " + std::to_string(dp), "q-dimension: " + rational_text(qdim), "MDS: " + yes_no(mds)};
    return o;
}

Outcome cmd_perfect_check(Context& ctx) {
    ctx.use_cap();
    const auto d = ctx.code();
    const auto p = ctx.poset();
    Outcome o;
    if (ctx.input.root.contains("ideal")) {
        const auto i = json_io::parse_ideal(p, ctx.input.root["ideal"], ctx.input.source + ":ideal");
        const bool perfect = code::is_I_perfect(d, p, i);
        o.result["ideal"] = json_io::ideal_json(i);
        o.result["perfect"] = perfect;
        o.ok = perfect;
        o.lines = {"I-perfect: " + yes_no(perfect)};
        return o;
    }
    const auto r = code::mds_iff_perfect_verify(p, d, ctx.spec.cap);
    o.result["skipped"] = r.skipped;
    o.result["mds"] = r.mds;
    o.result["dP"] = r.d;
    o.result["qdim"] = json_io::rational_json(r.qdim);
    o.result["ideal_size"] = r.ideal_size;
    o.result["ideals_checked"] = r.ideals_checked;
    o.result["all_perfect"] = r.all_perfect;
    o.result["perfect_side"] = r.perfect_side;
    o.result["agree"] = r.agree;
    if (r.witness) o.result["witness"] = json_io::ideal_json(*r.witness);
    o.ok = r.agree;
    o.lines = {"MDS: " + yes_no(r.mds), "I-perfect for every ideal of size " + std::to_string(r.ideal_size) + ": " +
                                            yes_no(r.perfect_side),
               "equivalence: " + std::string(r.agree ? "holds" : "VIOLATED")};
    return o;
}

Outcome cmd_reduce(Context& ctx) {
    const auto d = ctx.code();
    const auto g = code::reduce_generator(d);
    const auto c = code::check_reduced_form(d.ambient(), g);
    Outcome o;
    Json rows = Json::array();
    for (const auto& r : g.rows) rows.push_back(json_io::vector_json(d.ambient(), r));
    o.result["rows"] = rows;
    o.result["rrn"] = g.rrn;
    o.result["checks"] = {{"bounded", c.bounded},
                          {"last_nonzero", c.last_nonzero},
                          {"sums_to_k", c.sums_to_k},
                          {"blocks_independent", c.blocks_independent},
                          {"zero_below", c.zero_below}};
    o.ok = c.all();
    std::ostringstream rrn;
    for (std::size_t i = 0; i < g.rrn.size(); ++i) rrn << (i ? ", " : "") << g.rrn[i];
    o.lines = {"row reduction numbers: (" + rrn.str() + ")", "reduced form: " + std::string(c.all() ? "valid" : "INVALID")};
    if (ctx.poset_doc || ctx.input.root.contains("poset")) {
        ctx.use_cap();
        const auto b = code::huffman_bound_check(ctx.poset(), d, ctx.spec.cap);
        o.result["bound"] = {{"dP", b.d}, {"ceil_k_over_t", b.s}, {"holds", b.holds}};
        o.ok = o.ok && b.holds;
        o.lines.push_back("dP " + std::to_string(b.d) + " <= n - " + std::to_string(b.s) + " + 1: " + yes_no(b.holds));
    }
    return o;
}

Outcome cmd_enumerate_ideals(Context& ctx) {
    const auto p = ctx.poset();
    std::vector<poset::Ideal> ideals;
    Outcome o;
    if (ctx.input.root.contains("ideal_size")) {
        const auto& k = ctx.input.root["ideal_size"];
        if (!k.is_number_integer()) throw Error(ErrorKind::ParseError, ctx.input.source + ":ideal_size: expected an integer");
        ideals = poset::ideals_of_size(p, k.get<int>());
        o.result["ideal_size"] = k;
    } else {
        ideals = poset::all_ideals(p);
    }
    o.result["count"] = ideals.size();
    Json list = Json::array();
    for (const auto& i : ideals) list.push_back(json_io::ideal_json(i));
    o.result["ideals"] = list;
    o.lines = {"ideals: " + std::to_string(ideals.size())};
    return o;
}

Outcome cmd_verify_t1(Context& ctx) {
    ctx.use_cap();
    const auto s = ctx.stab();
    const auto p = ctx.poset();
    const auto r = stabilizer::params(p, s, ctx.spec.cap);
    const bool holds = stabilizer::singleton_q_check(r);
    const bool equality = stabilizer::is_mds_stabilizer(r);
    Outcome o;
    o.result["params"] = params_json(r);
    o.result["bound"] = static_cast<int>(r.n) - 2 * r.dP + 2;
    o.result["holds"] = holds;
    o.result["equality"] = equality;
    o.ok = holds;
    o.lines = {"parameters: " + params_line(r, s.field().size()),
               "log_q K <= n - 2 dP + 2: " + rational_text(r.log_q_K()) + " <= " +
                   std::to_string(static_cast<int>(r.n) - 2 * r.dP + 2) + ": " + (holds ? "holds" : "VIOLATED"),
               "equality (MDS): " + yes_no(equality)};
    if (!holds && !r.pure) o.lines.push_back("the code is not P-pure");
    return o;
}

Outcome cmd_verify_t2(Context& ctx) {
    ctx.use_cap();
    const auto s = ctx.stab();
    const auto p = ctx.poset();
    const auto t = stabilizer::theorem2_verify(p, s, ctx.spec.cap);
    Outcome o;
    o.result["dP_symplectic"] = t.dP_symplectic;
    o.result["dP_alternating"] = t.dP_alternating;
    o.result["holds"] = t.holds;
    o.ok = t.holds;
    o.lines = {"dP over symplectic dual minus C: " + std::to_string(t.dP_symplectic),
               "dP over alternating dual minus D: " + std::to_string(t.dP_alternating),
               "agreement: " + std::string(t.holds ? "holds" : "VIOLATED")};
    return o;
}

Outcome cmd_verify_t3(Context& ctx) {
    ctx.use_cap();
    const auto s = ctx.stab();
    const auto p = ctx.poset();
    const auto t = stabilizer::theorem3_verify(p, s, ctx.spec.cap);
    Outcome o;
    o.result["stab_mds"] = t.stab_mds;
    o.result["dual_mds"] = t.dual_mds;
    o.result["part1_holds"] = t.part1_holds;
    o.result["dP_of_D"] = t.dP_of_D;
    o.result["part2_applicable"] = t.part2_applicable;
    o.result["part2_holds"] = t.part2_holds;
    o.ok = t.holds();
    o.lines = {"MDS stabilizer: " + yes_no(t.stab_mds), "alternating dual MDS: " + yes_no(t.dual_mds),
               "equivalence: " + std::string(t.part1_holds ? "holds" : "VIOLATED"),
               "second assertion: " + std::string(!t.part2_applicable ? "not applicable"
                                                  : t.part2_holds     ? "holds"
                                                                      : "VIOLATED")};
    return o;
}

Outcome construct_outcome(Context& ctx, bool verify) {
    ctx.use_cap();
    ctx.caps["search_limit"] = ctx.spec.search_limit;
    ctx.caps["seed"] = ctx.spec.seed;
    const auto e = ctx.code();
    Outcome o;
    try {
        const auto res = stabilizer::construct_mds(e, ctx.spec.search_limit, ctx.spec.seed, ctx.spec.cap);
        const auto& r = res.params;
        o.result["found"] = true;
        o.result["poset"] = json_io::poset_json(res.poset);
        o.result["stabilizer"] = json_io::code_json(res.stab.code());
        o.result["params"] = params_json(r);
        o.result["k"] = res.k;
        o.result["candidates_tried"] = res.candidates_tried;
        o.result["exhaustive"] = res.exhaustive;
        o.lines = {"poset covers: " + json_io::poset_json(res.poset)["covers"].dump(),
                   "parameters: " + params_line(r, res.stab.field().size()), "pure: " + yes_no(r.pure)};
        if (verify) {
            const bool mds = stabilizer::is_mds_stabilizer(r);
            const bool dist = r.dP == res.k + 1;
            const bool dim = r.logpK == r.m * (static_cast<int>(r.n) - 2 * res.k);
            Json checks = {{"pure", r.pure}, {"mds", mds}, {"dP_is_k_plus_1", dist}, {"logqK_is_n_minus_2k", dim}};
            o.ok = r.pure && mds && dist && dim;
            std::uint64_t dimension = 1;
            for (std::size_t i = 0; i < r.n && dimension <= qsim::kMaxScanDim; ++i) dimension *= res.stab.field().size();
            if (dimension <= qsim::kMaxScanDim) {
                ctx.caps["max_scan_dim"] = qsim::kMaxScanDim;
                const auto sim = qsim::simulate(res.poset, res.stab);
                checks["simulation_agrees"] = sim.agree;
                o.result["dimQ"] = sim.dimQ;
                o.ok = o.ok && sim.agree;
            }
            o.result["checks"] = checks;
            o.lines.push_back("construction: " + std::string(o.ok ? "holds" : "VIOLATED"));
        }
    } catch (const Error& ex) {
        if (ex.kind() != ErrorKind::SearchExhausted) throw;
        o.result["found"] = false;
        o.result["message"] = ex.what();
        o.ok = false;
        o.lines = {ex.what()};
    }
    return o;
}

Outcome cmd_construct_mds(Context& ctx) { return construct_outcome(ctx, false); }
Outcome cmd_verify_t4(Context& ctx) { return construct_outcome(ctx, true); }

Outcome cmd_verify_t5(Context& ctx) {
    ctx.use_cap();
    const auto s = ctx.stab();
    const auto p = ctx.poset();
    const auto t = stabilizer::theorem5_verify(p, s, ctx.spec.cap);
    Outcome o;
    o.result["stab_mds"] = t.stab_mds;
    o.result["logqK_integral"] = t.log_q_K_integral;
    o.result["ideal_size_integral"] = t.ideal_size_integral;
    o.result["ideal_size"] = t.ideal_size;
    o.result["ideals_checked"] = t.ideals_checked;
    o.result["all_perfect"] = t.all_perfect;
    if (t.witness) o.result["witness"] = json_io::ideal_json(*t.witness);
    o.result["holds"] = t.holds();
    o.ok = t.holds();
    o.lines = {"MDS stabilizer: " + yes_no(t.stab_mds),
               "I-perfect for every ideal of size " + std::to_string(t.ideal_size) + ": " + yes_no(t.perfect_side()),
               "equivalence: " + std::string(t.holds() ? "holds" : "VIOLATED")};
    return o;
}

Outcome cmd_simulate(Context& ctx) {
    ctx.use_cap();
    ctx.caps["max_dim"] = qsim::kMaxDim;
    ctx.caps["max_scan_dim"] = qsim::kMaxScanDim;
    const auto s = ctx.stab();
    const auto p = ctx.poset();
    const auto r = qsim::simulate(p, s);
    Outcome o;
    o.result["dimQ"] = r.dimQ;
    o.result["expectedDim"] = r.expected_dim;
    o.result["minUndetectedWeight"] = r.min_undetected ? Json(*r.min_undetected) : Json(nullptr);
    o.result["dP"] = r.dP;
    o.result["agree"] = r.agree;
    o.ok = r.agree;
    o.lines = {"dim Q: " + std::to_string(r.dimQ) + " (expected " + std::to_string(r.expected_dim) + ")",
               "min undetected weight: " + (r.min_undetected ? std::to_string(*r.min_undetected) : std::string("none")),
               "agree: " + yes_no(r.agree)};
    return o;
}

const std::map<std::string, std::function<Outcome(Context&)>>& table() {
    static const std::map<std::string, std::function<Outcome(Context&)>> t = {
        {"params", cmd_params},
        {"dual", cmd_dual},
        {"mds-check", cmd_mds_check},
        {"perfect-check", cmd_perfect_check},
        {"reduce", cmd_reduce},
        {"verify-t1", cmd_verify_t1},
        {"verify-t2", cmd_verify_t2},
        {"verify-t3", cmd_verify_t3},
        {"verify-t4", cmd_verify_t4},
        {"verify-t5", cmd_verify_t5},
        {"construct-mds", cmd_construct_mds},
        {"simulate", cmd_simulate},
        {"enumerate-ideals", cmd_enumerate_ideals},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, f] : table()) v.push_back(k);
        return v;
    }();
    return names;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream ss;
    for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return ss.str();
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    Json report;
    report["command"] = spec.command;
    int code = 0;
    std::vector<std::string> lines;
    try {
        const auto it = table().find(spec.command);
        if (it == table().end()) throw Error(ErrorKind::InvalidArgument, "unknown command \"" + spec.command + "\"");
        Context ctx{spec, json_io::load_file(spec.input), std::nullopt};
        if (spec.poset) ctx.poset_doc = json_io::load_file(*spec.poset);
        Json inputs;
        inputs["input"] = {{"path", spec.input}, {"sha256", sha256_hex(ctx.input.bytes)}};
        if (ctx.poset_doc) inputs["poset"] = {{"path", *spec.poset}, {"sha256", sha256_hex(ctx.poset_doc->bytes)}};
        report["inputs"] = inputs;
        const auto o = it->second(ctx);
        report["caps"] = ctx.caps;
        report["status"] = o.ok ? "ok" : "failed";
        report["result"] = o.result;
        lines = o.lines;
        code = o.ok ? 0 : 1;
    } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        err << "error: " << e.what() << "\n";
        code = 2;
    } catch (const nlohmann::json::exception& e) {
        report["status"] = "error";
        report["error"] = {{"kind", "ParseError"}, {"message", e.what()}};
        err << "error: ParseError: " << e.what() << "\n";
        code = 2;
    }
    if (spec.json) {
        out << report.dump(2) << "\n";
    } else {
        for (const auto& l : lines) out << l << "\n";
    }
    return code;
}

}  // namespace posetq::cli
