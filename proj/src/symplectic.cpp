#include "posetq/symplectic.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "posetq/error.hpp"
#include "posetq/linalg.hpp"

namespace posetq::symplectic {

namespace {

void check_same(std::size_t x, std::size_t y) {
    if (x != y) {
        throw Error(ErrorKind::LengthMismatch, "lengths " + std::to_string(x) + " and " + std::to_string(y) + " differ");
    }
}

void check_symp_ambient(const code::AdditiveCode& c) {
    if (c.ambient().t() != 1 || c.length() % 2 != 0) {
        throw Error(ErrorKind::FormAmbientMismatch, "symplectic form needs a code in GF(q)^{2n}");
    }
}

gf::QuadExt quad_of(const code::AdditiveCode& d) {
    if (d.ambient().t() != 2) throw Error(ErrorKind::FormAmbientMismatch, "form needs a code in GF(q^2)^n");
    return gf::quad_ext_of(d.ambient().field());
}

int union_weight(const gf::Vec& ab) {
    const std::size_t n = ab.size() / 2;
    int w = 0;
    for (std::size_t i = 0; i < n; ++i) w += (ab[i] != 0 || ab[n + i] != 0) ? 1 : 0;
    return w;
}

using Poly = std::vector<__int128>;

Poly poly_mul(const Poly& x, const Poly& y) {
    Poly out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    return out;
}

Poly poly_pow(const Poly& x, std::size_t e) {
    Poly out{1};
    for (std::size_t i = 0; i < e; ++i) out = poly_mul(out, x);
    return out;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorKind::CodeTooLarge, "enumerator coefficient exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

gf::Vec join(const SympVector& v) {
    check_same(v.a.size(), v.b.size());
    gf::Vec out = v.a;
    out.insert(out.end(), v.b.begin(), v.b.end());
    return out;
}

SympVector split(const gf::Vec& ab) {
    if (ab.size() % 2 != 0) throw Error(ErrorKind::LengthMismatch, "symplectic vector has odd length");
    const auto half = static_cast<std::ptrdiff_t>(ab.size() / 2);
    return {gf::Vec(ab.begin(), ab.begin() + half), gf::Vec(ab.begin() + half, ab.end())};
}

int wt_symp_P(const poset::Poset& p, const SympVector& v) {
    check_same(v.a.size(), v.b.size());
    check_same(v.a.size(), static_cast<std::size_t>(p.size()));
    return std::popcount(p.ideal_generated(code::support(v.a)).bits() | p.ideal_generated(code::support(v.b)).bits());
}

int wt_symp_P(const poset::Poset& p, const gf::Vec& ab) { return wt_symp_P(p, split(ab)); }

gf::Elem form_symp(const gf::Field& fq, const SympVector& u, const SympVector& v) {
    check_same(u.a.size(), u.b.size());
    check_same(v.a.size(), v.b.size());
    check_same(u.a.size(), v.a.size());
    gf::Elem s = 0;
    for (std::size_t i = 0; i < u.a.size(); ++i) {
        s = fq.add(s, fq.mul(u.b[i], v.a[i]));
        s = fq.sub(s, fq.mul(v.b[i], u.a[i]));
    }
    return fq.trace(s);
}

gf::Elem form_symp(const gf::Field& fq, const gf::Vec& u, const gf::Vec& v) {
    return form_symp(fq, split(u), split(v));
}

gf::Elem form_alt(const gf::QuadExt& ext, const gf::Vec& v, const gf::Vec& w) {
    check_same(v.size(), w.size());
    const gf::Field& f = ext.field;
    const std::uint64_t q = ext.q();
    gf::Elem num = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        num = f.add(num, f.mul(f.pow(v[i], q), w[i]));
        num = f.sub(num, f.mul(v[i], f.pow(w[i], q)));
    }
    const gf::Elem quotient = f.div(num, f.sub(f.pow(ext.gamma, q), ext.gamma));
    if (quotient >= q) throw Error(ErrorKind::QuotientNotInBaseField, "alternating form quotient outside GF(q)");
    return ext.base().trace(quotient);
}

gf::Elem form_herm(const gf::QuadExt& ext, const gf::Vec& a, const gf::Vec& b) {
    check_same(a.size(), b.size());
    const gf::Field& f = ext.field;
    gf::Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(f.pow(a[i], ext.q()), b[i]));
    return s;
}

SympVector psi(const gf::QuadExt& ext, const gf::Vec& v) {
    SympVector out{gf::Vec(v.size()), gf::Vec(v.size())};
    for (std::size_t i = 0; i < v.size(); ++i) std::tie(out.a[i], out.b[i]) = gf::rel_trace_and_split(ext, v[i]);
    return out;
}

gf::Vec psi_inv(const gf::QuadExt& ext, const SympVector& v) {
    check_same(v.a.size(), v.b.size());
    gf::Vec out(v.a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = gf::combine(ext, v.a[i], v.b[i]);
    return out;
}

code::AdditiveCode psi_code(const code::AdditiveCode& d) {
    const auto ext = quad_of(d);
    std::vector<gf::Vec> gens;
    for (const auto& h : d.prime_generators()) gens.push_back(join(psi(ext, h)));
    return code::AdditiveCode::make(code::Ambient::make(ext.base(), 1), 2 * d.length(), code::Linearity::prime,
                                    std::move(gens));
}

code::AdditiveCode psi_inv_code(const gf::QuadExt& ext, const code::AdditiveCode& c) {
    check_symp_ambient(c);
    if (!(c.ambient().field() == ext.base())) {
        throw Error(ErrorKind::FormAmbientMismatch, "code alphabet differs from the base of the extension");
    }
    std::vector<gf::Vec> gens;
    for (const auto& h : c.prime_generators()) gens.push_back(psi_inv(ext, split(h)));
    return code::AdditiveCode::make(code::Ambient::of_extension(ext.field), c.length() / 2, code::Linearity::prime,
                                    std::move(gens));
}

const char* to_string(Form f) {
    switch (f) {
        case Form::symp: return "symp";
        case Form::alt: return "alt";
        case Form::herm: return "herm";
    }
    return "?";
}

code::AdditiveCode dual(const code::AdditiveCode& d, Form form) {
    const gf::Field& f = d.ambient().field();
    const std::uint32_t p = f.characteristic();
    const int m = f.degree();
    const std::size_t n = d.length();

    // value of the pairing with h as GF(p) digits
    std::function<gf::Vec(const gf::Vec&, const gf::Vec&)> pairing;
    std::optional<gf::QuadExt> ext;
    switch (form) {
        case Form::symp:
            check_symp_ambient(d);
            pairing = [&f](const gf::Vec& h, const gf::Vec& x) { return gf::Vec{form_symp(f, h, x)}; };
            break;
        case Form::alt:
            ext = quad_of(d);
            pairing = [&ext](const gf::Vec& h, const gf::Vec& x) { return gf::Vec{form_alt(*ext, h, x)}; };
            break;
        case Form::herm:
            ext = quad_of(d);
            if (d.detect_linearity() != code::Linearity::full) {
                throw Error(ErrorKind::FormAmbientMismatch, "Hermitian dual needs a GF(q^2)-linear code");
            }
            pairing = [&ext, p, m](const gf::Vec& h, const gf::Vec& x) {
                return linalg::expand({form_herm(*ext, h, x)}, p, m);
            };
            break;
    }

    std::vector<gf::Vec> rows;
    for (const auto& h : d.prime_generators()) {
        std::vector<gf::Vec> columns;  // pairing value for each GF(p)-basis vector of the ambient space
        for (std::size_t j = 0; j < n; ++j) {
            gf::Elem unit = 1;
            for (int k = 0; k < m; ++k, unit *= p) {
                gf::Vec e(n, 0);
                e[j] = unit;
                columns.push_back(pairing(h, e));
            }
        }
        for (std::size_t r = 0; r < columns.front().size(); ++r) {
            gf::Vec row(columns.size());
            for (std::size_t c = 0; c < columns.size(); ++c) row[c] = columns[c][r];
            rows.push_back(std::move(row));
        }
    }
    std::vector<gf::Vec> gens;
    for (const auto& v : linalg::nullspace(gf::Field::prime(p), rows, n * static_cast<std::size_t>(m)))
        gens.push_back(linalg::collapse(v, p, m));
    return code::AdditiveCode::make(d.ambient(), n, code::Linearity::prime, std::move(gens));
}

bool is_self_orthogonal(const code::AdditiveCode& c) {
    check_symp_ambient(c);
    const auto& g = c.prime_generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (form_symp(c.ambient().field(), g[i], g[j]) != 0) return false;
    return true;
}

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t s = 0;
    for (auto x : coeffs) s += x;
    return s;
}

WeightEnumerator weight_enumerator_symp(const code::AdditiveCode& c, std::uint64_t cap) {
    check_symp_ambient(c);
    WeightEnumerator out{std::vector<std::uint64_t>(c.length() / 2 + 1, 0)};
    c.for_each([&](const gf::Vec& v) {
        ++out.coeffs[static_cast<std::size_t>(union_weight(v))];
        return true;
    }, cap);
    return out;
}

MacWilliamsReport macwilliams_check(const code::AdditiveCode& c, std::uint64_t cap) {
    check_symp_ambient(c);
    if (!is_self_orthogonal(c)) throw Error(ErrorKind::NotSelfOrthogonal, "code is not symplectic self-orthogonal");
    MacWilliamsReport r;
    const std::size_t n = c.length() / 2;
    const auto q = static_cast<__int128>(c.ambient().field().size());
    r.a = weight_enumerator_symp(c, cap);
    r.b = weight_enumerator_symp(dual(c, Form::symp), cap);

    const auto size_c = static_cast<__int128>(c.size());
    Poly rhs(n + 1, 0);
    const Poly one_minus{1, -1};
    const Poly one_plus{1, q * q - 1};
    for (std::size_t w = 0; w <= n; ++w) {
        const Poly term = poly_mul(poly_pow(one_minus, w), poly_pow(one_plus, n - w));
        for (std::size_t i = 0; i <= n; ++i) rhs[i] += static_cast<__int128>(r.a.coeffs[w]) * term[i];
    }
    r.identity_holds = true;
    for (std::size_t i = 0; i <= n; ++i) {
        const __int128 lhs = size_c * static_cast<__int128>(r.b.coeffs[i]);
        r.lhs.push_back(narrow(lhs));
        r.rhs.push_back(narrow(rhs[i]));
        r.identity_holds = r.identity_holds && lhs == rhs[i];
    }
    r.b_at_one = r.b.total();
    __int128 full = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) full *= q;
    r.expected_dual_size = static_cast<std::uint64_t>(full / size_c);
    return r;
}

int min_symp_weight_over_difference(const poset::Poset& p, const code::AdditiveCode& big,
                                    const code::AdditiveCode& small, std::uint64_t cap) {
    check_symp_ambient(big);
    check_same(big.length(), 2 * static_cast<std::size_t>(p.size()));
    if (!small.is_subcode_of(big)) throw Error(ErrorKind::NotNested, "small code is not contained in big code");
    if (small.log_p_size() == big.log_p_size()) throw Error(ErrorKind::EqualCodes, "difference set is empty");
    int best = p.size() + 1;
    big.for_each([&](const gf::Vec& v) {
        if (!small.contains(v)) best = std::min(best, wt_symp_P(p, v));
        return true;
    }, cap);
    return best;
}

int min_symp_weight(const poset::Poset& p, const code::AdditiveCode& c, std::uint64_t cap) {
    check_symp_ambient(c);
    check_same(c.length(), 2 * static_cast<std::size_t>(p.size()));
    if (c.is_zero()) throw Error(ErrorKind::TrivialCode, "minimum weight of the zero code is undefined");
    int best = p.size() + 1;
    c.for_each([&](const gf::Vec& v) {
        if (std::any_of(v.begin(), v.end(), [](gf::Elem x) { return x != 0; })) best = std::min(best, wt_symp_P(p, v));
        return true;
    }, cap);
    return best;
}

}  // namespace posetq::symplectic
