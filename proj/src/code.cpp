#include "posetq/code.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "posetq/error.hpp"

namespace posetq::code {

namespace {

std::uint32_t ipow(std::uint32_t b, int e) {
    std::uint32_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void check_entries(const gf::Field& f, std::size_t n, const std::vector<gf::Vec>& rows) {
    for (const auto& g : rows) {
        if (g.size() != n) {
            throw Error(ErrorKind::MixedLengths,
                        "generator of length " + std::to_string(g.size()) + ", expected " + std::to_string(n));
        }
        for (auto x : g)
            if (!f.contains(x)) throw Error(ErrorKind::InvalidArgument, "entry outside the field");
    }
}

void check_length(const poset::Poset& p, std::size_t n) {
    if (static_cast<std::size_t>(p.size()) != n) {
        throw Error(ErrorKind::LengthMismatch,
                    "poset on " + std::to_string(p.size()) + " elements, vector length " + std::to_string(n));
    }
}

gf::Vec scale(const gf::Field& f, gf::Elem c, const gf::Vec& v) {
    gf::Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(c, v[i]);
    return out;
}

// Rows spanning the same set as d over GF(q).
std::vector<gf::Vec> base_basis(const AdditiveCode& d) {
    const Ambient& a = d.ambient();
    switch (d.linearity()) {
        case Linearity::base:
            return d.generators();
        case Linearity::full: {
            if (a.t() == 1) return d.generators();
            std::vector<gf::Vec> rows;
            const std::uint32_t q = a.base().size();
            for (const auto& g : d.generators())
                for (int j = 0; j < a.t(); ++j) rows.push_back(scale(a.field(), ipow(q, j), g));
            return rows;
        }
        case Linearity::prime:
            break;
    }
    if (d.detect_linearity() == Linearity::prime && !a.base().is_prime_field()) {
        throw Error(ErrorKind::InvalidArgument, "code is not linear over GF(q)");
    }
    return d.with_linearity(Linearity::base).generators();
}

}  // namespace

const char* to_string(Linearity l) {
    switch (l) {
        case Linearity::prime: return "prime";
        case Linearity::base: return "base";
        case Linearity::full: return "full";
    }
    return "?";
}

Ambient Ambient::make(const gf::Field& base, int t) {
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "extension degree t must be at least 1");
    if (t == 1) return Ambient(base, base, 1);
    return Ambient(gf::Field::extend(base, t), base, t);
}

Ambient Ambient::of_extension(const gf::Field& ext) {
    if (ext.is_prime_field()) return Ambient(ext, ext, 1);
    return Ambient(ext, ext.base(), ext.relative_degree());
}

gf::Field Ambient::scalars(Linearity l) const {
    switch (l) {
        case Linearity::prime: return field_.is_prime_field() ? field_ : gf::Field::prime(field_.characteristic());
        case Linearity::base: return base_;
        case Linearity::full: return field_;
    }
    return field_;
}

AdditiveCode AdditiveCode::make(const Ambient& ambient, std::size_t n, Linearity lin, std::vector<gf::Vec> gens) {
    if (n == 0) throw Error(ErrorKind::EmptyAmbient, "code length must be positive");
    const gf::Field& f = ambient.field();
    check_entries(f, n, gens);

    AdditiveCode d(ambient, n, lin);
    const gf::Field s = ambient.scalars(lin);
    const int parts = f.degree() / s.degree();
    std::vector<gf::Vec> expanded;
    expanded.reserve(gens.size());
    for (const auto& g : gens) expanded.push_back(linalg::expand(g, s.size(), parts));
    const auto ech = linalg::rref(s, std::move(expanded));
    for (const auto& row : ech.rows) d.gens_.push_back(linalg::collapse(row, s.size(), parts));

    const std::uint32_t p = f.characteristic();
    for (const auto& g : d.gens_)
        for (int j = s.degree(); j-- > 0;) d.prime_gens_.push_back(scale(f, ipow(p, j), g));

    std::vector<gf::Vec> prime_rows;
    prime_rows.reserve(d.prime_gens_.size());
    for (const auto& h : d.prime_gens_) prime_rows.push_back(linalg::expand(h, p, f.degree()));
    d.prime_echelon_ = linalg::rref(gf::Field::prime(p), std::move(prime_rows));
    return d;
}

AdditiveCode AdditiveCode::zero(const Ambient& ambient, std::size_t n) {
    return make(ambient, n, Linearity::full, {});
}

AdditiveCode AdditiveCode::full_space(const Ambient& ambient, std::size_t n) {
    std::vector<gf::Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gf::Vec e(n, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return make(ambient, n, Linearity::full, std::move(gens));
}

std::uint64_t AdditiveCode::size() const {
    const std::uint64_t p = ambient_.characteristic();
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < prime_gens_.size(); ++i) {
        if (out > (std::uint64_t{1} << 62) / p) throw Error(ErrorKind::CodeTooLarge, "code size exceeds 2^62");
        out *= p;
    }
    return out;
}

bool AdditiveCode::contains(const gf::Vec& v) const {
    if (v.size() != n_) throw Error(ErrorKind::LengthMismatch, "vector length differs from code length");
    const gf::Field& f = ambient_.field();
    return linalg::in_span(gf::Field::prime(f.characteristic()), prime_echelon_,
                           linalg::expand(v, f.characteristic(), f.degree()));
}

bool AdditiveCode::is_subcode_of(const AdditiveCode& other) const {
    if (n_ != other.n_ || !(ambient_.field() == other.ambient_.field())) {
        throw Error(ErrorKind::LengthMismatch, "codes live in different ambient spaces");
    }
    return std::all_of(prime_gens_.begin(), prime_gens_.end(), [&](const gf::Vec& h) { return other.contains(h); });
}

bool AdditiveCode::same_set(const AdditiveCode& other) const {
    return log_p_size() == other.log_p_size() && is_subcode_of(other);
}

Linearity AdditiveCode::detect_linearity() const {
    const gf::Field& f = ambient_.field();
    const std::uint32_t p = f.characteristic();
    auto closed_under = [&](const gf::Field& s) {
        for (int j = 1; j < s.degree(); ++j) {
            for (const auto& h : prime_gens_)
                if (!contains(scale(f, ipow(p, j), h))) return false;
        }
        return true;
    };
    if (closed_under(f)) return Linearity::full;
    if (closed_under(ambient_.base())) return Linearity::base;
    return Linearity::prime;
}

AdditiveCode AdditiveCode::with_linearity(Linearity lin) const {
    if (lin == lin_) return *this;
    const gf::Field s = ambient_.scalars(lin);
    const gf::Field& f = ambient_.field();
    for (int j = 1; j < s.degree(); ++j) {
        for (const auto& h : prime_gens_) {
            if (!contains(scale(f, ipow(f.characteristic(), j), h))) {
                throw Error(ErrorKind::InvalidArgument,
                            std::string("code is not closed under the ") + to_string(lin) + " subfield");
            }
        }
    }
    return make(ambient_, n_, lin, prime_gens_);
}

gf::Vec AdditiveCode::codeword(std::uint64_t index) const {
    if (index >= size()) throw Error(ErrorKind::IndexOutOfRange, "codeword index outside the code");
    gf::Vec out;
    for_each_in_range(index, index + 1, [&](const gf::Vec& v) {
        out = v;
        return false;
    });
    return out;
}

std::vector<gf::Vec> AdditiveCode::enumerate(std::uint64_t cap) const {
    std::vector<gf::Vec> out;
    for_each([&](const gf::Vec& v) {
        out.push_back(v);
        return true;
    }, cap);
    return out;
}

void check_enumerable(const AdditiveCode& d, std::uint64_t cap) {
    const std::uint64_t p = d.ambient().characteristic();
    std::uint64_t s = 1;
    for (int i = 0; i < d.log_p_size(); ++i) {
        s *= p;
        if (s > cap) {
            throw Error(ErrorKind::CodeTooLarge, "code has " + std::to_string(p) + "^" +
                                                     std::to_string(d.log_p_size()) +
                                                     " codewords, above the cap of " + std::to_string(cap));
        }
    }
}

poset::Subset support(const gf::Vec& v) {
    if (v.size() > static_cast<std::size_t>(poset::kMaxElements)) {
        throw Error(ErrorKind::IndexOutOfRange, "vectors longer than 64 are not supported");
    }
    poset::Subset s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s |= poset::Subset{1} << i;
    return s;
}

poset::Ideal support_ideal(const poset::Poset& p, const gf::Vec& v) {
    check_length(p, v.size());
    return p.ideal_generated(support(v));
}

int wt_P(const poset::Poset& p, const gf::Vec& v) { return support_ideal(p, v).size(); }

std::vector<poset::Subset> nonzero_supports(const AdditiveCode& d, std::uint64_t cap) {
    std::vector<poset::Subset> out;
    const std::size_t n = d.length();
    if (n <= 24) {
        std::vector<bool> seen(std::size_t{1} << n, false);
        d.for_each([&](const gf::Vec& v) {
            seen[support(v)] = true;
            return true;
        }, cap);
        for (std::size_t s = 1; s < seen.size(); ++s)
            if (seen[s]) out.push_back(s);
        return out;
    }
    std::set<poset::Subset> seen;
    d.for_each([&](const gf::Vec& v) {
        if (const auto s = support(v); s != 0) seen.insert(s);
        return true;
    }, cap);
    return {seen.begin(), seen.end()};
}

int d_P(const poset::Poset& p, const std::vector<poset::Subset>& supports) {
    if (supports.empty()) throw Error(ErrorKind::TrivialCode, "minimum distance of the zero code is undefined");
    int best = p.size() + 1;
    for (auto s : supports) best = std::min(best, p.ideal_generated(s).size());
    return best;
}

int d_P(const poset::Poset& p, const AdditiveCode& d, std::uint64_t cap) {
    check_length(p, d.length());
    if (d.is_zero()) throw Error(ErrorKind::TrivialCode, "minimum distance of the zero code is undefined");
    return d_P(p, nonzero_supports(d, cap));
}

std::vector<gf::Vec> ball(const poset::Poset& p, const poset::Ideal& i, const gf::Vec& u, const Ambient& ambient,
                          std::uint64_t cap) {
    check_length(p, u.size());
    const gf::Field& f = ambient.field();
    const auto members = i.members();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < members.size(); ++k) {
        total *= f.size();
        if (total > cap) throw Error(ErrorKind::CodeTooLarge, "ball exceeds the enumeration cap");
    }
    std::vector<gf::Vec> out;
    out.reserve(total);
    gf::Vec offset(u.size(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t k = members.size(); k-- > 0;) {
            offset[static_cast<std::size_t>(members[k] - 1)] = static_cast<gf::Elem>(x % f.size());
            x /= f.size();
        }
        gf::Vec v(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) v[j] = f.add(u[j], offset[j]);
        out.push_back(std::move(v));
    }
    return out;
}

bool is_I_perfect(const AdditiveCode& d, const poset::Poset& p, const poset::Ideal& i) {
    check_length(p, d.length());
    const gf::Field& f = d.ambient().field();
    const int m = f.degree();
    const int n = static_cast<int>(d.length());
    // Counting: |D| * Q^{|I|} = Q^n with Q = alphabet size.
    if (d.log_p_size() + m * i.size() != m * n) return false;
    // Disjointness: no nonzero codeword supported inside I, i.e. projection onto [n] \ I is injective.
    std::vector<gf::Vec> projected;
    for (const auto& h : d.prime_generators()) {
        gf::Vec row;
        for (int j = 0; j < n; ++j) {
            if (i.contains(j)) continue;
            const auto digits = linalg::expand({h[static_cast<std::size_t>(j)]}, f.characteristic(), m);
            row.insert(row.end(), digits.begin(), digits.end());
        }
        projected.push_back(std::move(row));
    }
    if (projected.empty() || projected.front().empty()) return d.log_p_size() == 0;
    return linalg::rank(gf::Field::prime(f.characteristic()), std::move(projected)) ==
           static_cast<std::size_t>(d.log_p_size());
}

bool is_mds(const poset::Poset& p, const AdditiveCode& d, std::uint64_t cap) {
    const int dist = d_P(p, d, cap);
    const int m = d.ambient().prime_degree();
    return d.log_p_size() == m * (static_cast<int>(d.length()) - dist + 1);
}

Rational q_dimension(const AdditiveCode& d) { return Rational::of(d.log_p_size(), d.ambient().prime_degree()); }

MdsPerfectReport mds_iff_perfect_verify(const poset::Poset& p, const AdditiveCode& d, std::uint64_t cap) {
    check_length(p, d.length());
    MdsPerfectReport r;
    r.qdim = q_dimension(d);
    if (d.is_zero()) {
        r.skipped = true;
        return r;
    }
    r.d = d_P(p, d, cap);
    r.mds = is_mds(p, d, cap);
    if (r.qdim.is_integer()) {
        r.ideal_size = static_cast<int>(d.length()) - static_cast<int>(r.qdim.num);
        r.all_perfect = true;
        poset::IdealEnumerator e(p, r.ideal_size);
        while (auto i = e.next()) {
            ++r.ideals_checked;
            if (!is_I_perfect(d, p, *i)) {
                r.all_perfect = false;
                if (!r.witness) r.witness = *i;
            }
        }
        r.perfect_side = r.all_perfect;
    }
    r.agree = r.mds == r.perfect_side;
    return r;
}

ReducedGenerator reduce_generator(const Ambient& ambient, std::vector<gf::Vec> rows) {
    ReducedGenerator out;
    if (rows.empty()) return out;
    const std::size_t n = rows.front().size();
    const gf::Field& f = ambient.field();
    check_entries(f, n, rows);
    const gf::Field& fq = ambient.base();
    const std::uint32_t q = fq.size();
    const int t = ambient.t();
    auto coord = [&](gf::Elem x, int c) { return static_cast<gf::Elem>((x / ipow(q, c)) % q); };

    const std::size_t k = rows.size();
    std::size_t off = 0;
    for (std::size_t col = 0; col < n && off < k; ++col) {
        std::size_t ki = 0;
        for (int c = 0; c < t; ++c) {
            const std::size_t top = off + ki;
            std::size_t piv = top;
            while (piv < k && coord(rows[piv][col], c) == 0) ++piv;
            if (piv == k) continue;
            std::swap(rows[top], rows[piv]);
            const gf::Elem s = fq.inv(coord(rows[top][col], c));
            for (auto& x : rows[top]) x = f.mul(s, x);
            for (std::size_t r = off; r < k; ++r) {
                if (r == top) continue;
                const gf::Elem factor = coord(rows[r][col], c);
                if (factor == 0) continue;
                for (std::size_t j = 0; j < n; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[top][j]));
            }
            ++ki;
        }
        out.rrn.push_back(static_cast<int>(ki));
        off += ki;
    }
    if (off < k) throw Error(ErrorKind::DependentRows, "generator rows are dependent over GF(q)");
    out.rows = std::move(rows);
    return out;
}

ReducedGenerator reduce_generator(const AdditiveCode& d) { return reduce_generator(d.ambient(), base_basis(d)); }

ReducedFormCheck check_reduced_form(const Ambient& ambient, const ReducedGenerator& g) {
    ReducedFormCheck out;
    const int t = ambient.t();
    const std::size_t k = g.rows.size();
    const std::size_t n = k == 0 ? 0 : g.rows.front().size();
    const std::uint32_t q = ambient.base().size();

    out.bounded = std::all_of(g.rrn.begin(), g.rrn.end(), [&](int x) { return x >= 0 && x <= t; });
    out.last_nonzero = g.rrn.empty() || g.rrn.back() != 0;
    std::size_t sum = 0;
    for (int x : g.rrn) sum += static_cast<std::size_t>(std::max(x, 0));
    out.sums_to_k = sum == k;
    if (!out.bounded || !out.sums_to_k || g.rrn.size() > n) return out;

    out.blocks_independent = true;
    out.zero_below = true;
    std::size_t start = 0;
    for (std::size_t col = 0; col < g.rrn.size(); ++col) {
        const std::size_t end = start + static_cast<std::size_t>(g.rrn[col]);
        std::vector<gf::Vec> block;
        for (std::size_t r = start; r < end; ++r) block.push_back(linalg::expand({g.rows[r][col]}, q, t));
        if (linalg::rank(ambient.base(), block) != block.size()) out.blocks_independent = false;
        for (std::size_t r = end; r < k; ++r)
            if (g.rows[r][col] != 0) out.zero_below = false;
        start = end;
    }
    return out;
}

int base_dimension(const AdditiveCode& d) {
    const int mq = d.ambient().base().degree();
    if (d.linearity() == Linearity::prime && d.detect_linearity() == Linearity::prime && mq > 1) {
        throw Error(ErrorKind::InvalidArgument, "code is not linear over GF(q)");
    }
    return d.log_p_size() / mq;
}

BoundCheck huffman_bound_check(const poset::Poset& p, const AdditiveCode& d, std::uint64_t cap) {
    BoundCheck out;
    const int k = base_dimension(d);
    const int t = d.ambient().t();
    out.s = (k + t - 1) / t;
    out.d = d_P(p, d, cap);
    out.holds = out.d <= static_cast<int>(d.length()) - out.s + 1;
    return out;
}

AdditiveCode reed_solomon(const gf::Field& field, int k) {
    const int q = static_cast<int>(field.size());
    if (k < 0 || k > q - 1) throw Error(ErrorKind::KOutOfRange, "Reed-Solomon order must lie in [0, q-1]");
    const auto n = static_cast<std::size_t>(q - 1);
    const gf::Elem alpha = field.primitive_element();
    std::vector<gf::Vec> rows;
    for (int j = 0; j < k; ++j) {
        gf::Vec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = field.pow(alpha, i * static_cast<std::uint64_t>(j));
        rows.push_back(std::move(row));
    }
    return AdditiveCode::make(Ambient::make(field, 1), n, Linearity::full, std::move(rows));
}

namespace {

void check_nested(const AdditiveCode& big, const AdditiveCode& small) {
    if (!small.is_subcode_of(big)) throw Error(ErrorKind::NotNested, "small code is not contained in big code");
    if (small.log_p_size() == big.log_p_size()) throw Error(ErrorKind::EqualCodes, "difference set is empty");
}

}  // namespace

int min_weight_over_difference(const poset::Poset& p, const AdditiveCode& big, const AdditiveCode& small,
                               std::uint64_t cap) {
    check_length(p, big.length());
    check_nested(big, small);
    int best = p.size() + 1;
    big.for_each([&](const gf::Vec& v) {
        if (!small.contains(v)) best = std::min(best, wt_P(p, v));
        return true;
    }, cap);
    return best;
}

int min_distance_within_difference(const poset::Poset& p, const AdditiveCode& big, const AdditiveCode& small,
                                   std::uint64_t cap) {
    check_length(p, big.length());
    check_nested(big, small);
    std::vector<gf::Vec> diff;
    big.for_each([&](const gf::Vec& v) {
        if (!small.contains(v)) diff.push_back(v);
        return true;
    }, cap);
    if (diff.size() < 2) throw Error(ErrorKind::InvalidArgument, "difference set has fewer than two elements");
    const gf::Field& f = big.ambient().field();
    int best = p.size() + 1;
    gf::Vec w(big.length());
    for (std::size_t i = 0; i < diff.size(); ++i) {
        for (std::size_t j = i + 1; j < diff.size(); ++j) {
            for (std::size_t c = 0; c < w.size(); ++c) w[c] = f.sub(diff[i][c], diff[j][c]);
            best = std::min(best, wt_P(p, w));
        }
    }
    return best;
}

}  // namespace posetq::code
