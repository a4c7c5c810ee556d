#include "posetq/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <string>

#include "posetq/error.hpp"

namespace posetq::stabilizer {

namespace {

using SupportPair = std::pair<poset::Subset, poset::Subset>;

void check_same(std::size_t x, std::size_t y) {
    if (x != y) {
        throw Error(ErrorKind::LengthMismatch, "lengths " + std::to_string(x) + " and " + std::to_string(y) + " differ");
    }
}

gf::Elem dot(const gf::Field& f, const gf::Vec& x, const gf::Vec& y) {
    gf::Elem s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
    return s;
}

SupportPair support_pair(const gf::Vec& ab) {
    const std::size_t n = ab.size() / 2;
    poset::Subset sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (ab[i] != 0) sa |= poset::Subset{1} << i;
        if (ab[n + i] != 0) sb |= poset::Subset{1} << i;
    }
    return {sa, sb};
}

int pair_weight(const poset::Poset& p, const SupportPair& s) {
    return std::popcount(p.ideal_generated(s.first).bits() | p.ideal_generated(s.second).bits());
}

int min_weight(const poset::Poset& p, const std::set<SupportPair>& pairs) {
    int best = p.size() + 1;
    for (const auto& s : pairs) best = std::min(best, pair_weight(p, s));
    return best;
}

// Distinct support pairs of the nonzero words of C and of C^⊥s \ C. Weights only depend on these.
struct Profile {
    std::set<SupportPair> inside;
    std::set<SupportPair> outside;
    int logpK = 0;
};

Profile profile(const StabilizerGroup& s, std::uint64_t cap) {
    const auto& c = s.code();
    const auto d = symplectic::dual(c, symplectic::Form::symp);
    Profile out;
    out.logpK = static_cast<int>(s.n()) * c.ambient().prime_degree() - c.log_p_size();
    d.for_each([&](const gf::Vec& v) {
        const auto sp = support_pair(v);
        if (c.contains(v)) {
            if (sp.first != 0 || sp.second != 0) out.inside.insert(sp);
        } else {
            out.outside.insert(sp);
        }
        return true;
    }, cap);
    return out;
}

StabCodeParams params_from(const poset::Poset& p, const StabilizerGroup& s, const Profile& pr) {
    StabCodeParams r;
    r.n = s.n();
    r.m = s.field().degree();
    r.p = s.field().characteristic();
    r.logpK = pr.logpK;
    if (pr.outside.empty()) {
        r.k1_convention = true;
        r.dP = min_weight(p, pr.inside);
    } else {
        r.dP = min_weight(p, pr.outside);
    }
    r.pure = pr.inside.empty() || min_weight(p, pr.inside) >= r.dP;
    return r;
}

void require_pure_k(const StabCodeParams& r) {
    if (!r.k_above_one()) throw Error(ErrorKind::KNotAboveOne, "theorem requires K > 1");
    if (!r.pure) throw Error(ErrorKind::NotPure, "theorem requires a P-pure code");
}

}  // namespace

ErrorOperator identity(std::size_t n) { return {0, gf::Vec(n, 0), gf::Vec(n, 0)}; }

ErrorOperator scalar(std::size_t n, std::uint32_t c) { return {c, gf::Vec(n, 0), gf::Vec(n, 0)}; }

ErrorOperator from_symp(const symplectic::SympVector& v, std::uint32_t c) { return {c, v.a, v.b}; }

ErrorOperator op_mul(const gf::Field& fq, const ErrorOperator& g, const ErrorOperator& h) {
    check_same(g.a.size(), h.a.size());
    check_same(g.b.size(), h.b.size());
    check_same(g.a.size(), g.b.size());
    const std::uint32_t p = fq.characteristic();
    ErrorOperator out;
    out.c = (g.c + h.c + fq.trace(dot(fq, g.b, h.a))) % p;
    out.a.resize(g.a.size());
    out.b.resize(g.b.size());
    for (std::size_t i = 0; i < g.a.size(); ++i) {
        out.a[i] = fq.add(g.a[i], h.a[i]);
        out.b[i] = fq.add(g.b[i], h.b[i]);
    }
    return out;
}

symplectic::SympVector phi(const ErrorOperator& g) { return {g.a, g.b}; }

int op_weight_P(const poset::Poset& p, const ErrorOperator& g) { return symplectic::wt_symp_P(p, phi(g)); }

Commutation commute_check(const gf::Field& fq, const ErrorOperator& g, const ErrorOperator& h) {
    const auto phase = symplectic::form_symp(fq, phi(g), phi(h));
    return {phase == 0, phase};
}

StabilizerGroup StabilizerGroup::from_code(const code::AdditiveCode& c) {
    if (!symplectic::is_self_orthogonal(c)) {
        throw Error(ErrorKind::NotSelfOrthogonal, "code is not symplectic self-orthogonal");
    }
    StabilizerGroup s(c);
    const gf::Field& f = c.ambient().field();
    for (const auto& h : c.prime_generators()) {
        const auto v = symplectic::split(h);
        s.gens_.push_back(from_symp(v));
        s.twist_.push_back(f.characteristic() == 2 ? static_cast<int>(f.trace(dot(f, v.a, v.b))) : 0);
    }
    return s;
}

bool algebraically_detectable(const StabilizerGroup& s, const code::AdditiveCode& dual_s, const ErrorOperator& g) {
    const auto v = symplectic::join(phi(g));
    return s.code().contains(v) || !dual_s.contains(v);
}

StabCodeParams params(const poset::Poset& p, const StabilizerGroup& s, std::uint64_t cap) {
    check_same(static_cast<std::size_t>(p.size()), s.n());
    return params_from(p, s, profile(s, cap));
}

bool singleton_q_check(const StabCodeParams& r) {
    if (!r.k_above_one()) throw Error(ErrorKind::KNotAboveOne, "bound requires K > 1");
    return r.logpK <= r.m * (static_cast<int>(r.n) - 2 * r.dP + 2);
}

bool is_mds_stabilizer(const StabCodeParams& r) {
    if (!r.k_above_one()) throw Error(ErrorKind::KNotAboveOne, "bound requires K > 1");
    return r.logpK == r.m * (static_cast<int>(r.n) - 2 * r.dP + 2);
}

Theorem2Report theorem2_verify(const poset::Poset& p, const StabilizerGroup& s, std::uint64_t cap) {
    const auto r = params(p, s, cap);
    if (!r.k_above_one()) throw Error(ErrorKind::KNotAboveOne, "minimum distance formula requires K > 1");
    const auto ext = gf::quad_ext_make(s.field());
    const auto d = symplectic::psi_inv_code(ext, s.code());
    const auto dperp = symplectic::dual(d, symplectic::Form::alt);
    Theorem2Report out;
    out.dP_symplectic = r.dP;
    out.dP_alternating = code::min_weight_over_difference(p, dperp, d, cap);
    out.holds = out.dP_symplectic == out.dP_alternating;
    return out;
}

Theorem3Report theorem3_verify(const poset::Poset& p, const StabilizerGroup& s, std::uint64_t cap) {
    const auto r = params(p, s, cap);
    require_pure_k(r);
    const auto ext = gf::quad_ext_make(s.field());
    const auto d = symplectic::psi_inv_code(ext, s.code());
    const auto dperp = symplectic::dual(d, symplectic::Form::alt);
    Theorem3Report out;
    out.stab_mds = is_mds_stabilizer(r);
    out.dual_mds = code::is_mds(p, dperp, cap);
    out.part1_holds = out.stab_mds == out.dual_mds;
    if (!d.is_zero()) {
        out.dP_of_D = code::d_P(p, d, cap);
        out.part2_applicable = out.stab_mds && static_cast<int>(r.n) - r.dP + 2 <= out.dP_of_D;
        if (out.part2_applicable) out.part2_holds = code::is_mds(p, d, cap);
    }
    return out;
}

Theorem5Report theorem5_verify(const poset::Poset& p, const StabilizerGroup& s, std::uint64_t cap) {
    const auto r = params(p, s, cap);
    require_pure_k(r);
    const auto ext = gf::quad_ext_make(s.field());
    const auto d = symplectic::psi_inv_code(ext, s.code());
    const auto dperp = symplectic::dual(d, symplectic::Form::alt);
    Theorem5Report out;
    out.stab_mds = is_mds_stabilizer(r);
    out.log_q_K_integral = r.log_q_K().is_integer();
    const auto qdim = code::q_dimension(dperp);  // base q^2, the alphabet of D^⊥a
    out.ideal_size_integral = qdim.is_integer();
    if (out.ideal_size_integral) {
        out.ideal_size = static_cast<int>(r.n) - static_cast<int>(qdim.num);
        out.all_perfect = true;
        poset::IdealEnumerator e(p, out.ideal_size);
        while (auto i = e.next()) {
            ++out.ideals_checked;
            if (!code::is_I_perfect(dperp, p, *i)) {
                out.all_perfect = false;
                if (!out.witness) out.witness = *i;
            }
        }
    }
    return out;
}

ConstructResult construct_mds(const code::AdditiveCode& e, std::uint64_t search_limit, std::uint64_t seed,
                              std::uint64_t cap) {
    if (e.ambient().t() != 2) throw Error(ErrorKind::FormAmbientMismatch, "construction needs a code in GF(q^2)^n");
    if (e.detect_linearity() != code::Linearity::full) {
        throw Error(ErrorKind::InvalidArgument, "construction needs a GF(q^2)-linear code");
    }
    const auto eperp = symplectic::dual(e, symplectic::Form::alt);
    if (!e.is_subcode_of(eperp)) throw Error(ErrorKind::NotSelfOrthogonal, "E is not contained in its alternating dual");
    const int n = static_cast<int>(e.length());
    const int k = e.log_p_size() / e.ambient().prime_degree();
    if (n - 2 * k < 1) throw Error(ErrorKind::InvalidArgument, "construction needs n - 2k >= 1");

    const auto stab = StabilizerGroup::from_code(symplectic::psi_code(e));
    const auto pr = profile(stab, cap);

    std::uint64_t tried = 0;
    auto accept = [&](const poset::Poset& p) -> std::optional<ConstructResult> {
        ++tried;
        const auto r = params_from(p, stab, pr);
        if (r.pure && is_mds_stabilizer(r) && r.dP == k + 1) return ConstructResult{p, stab, r, k, tried, n <= 5};
        return std::nullopt;
    };

    if (n <= 5) {
        for (const auto& p : poset::all_posets(n))
            if (auto res = accept(p)) return *res;
        throw Error(ErrorKind::SearchExhausted,
                    "no poset on [" + std::to_string(n) + "] among all " + std::to_string(tried) + " labeled posets");
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < search_limit; ++i)
        if (auto res = accept(poset::random_poset(n, rng))) return *res;
    throw Error(ErrorKind::SearchExhausted,
                "no poset found among " + std::to_string(search_limit) + " random posets (seed " + std::to_string(seed) + ")");
}

}  // namespace posetq::stabilizer
