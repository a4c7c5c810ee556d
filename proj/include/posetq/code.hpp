#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "posetq/gf.hpp"
#include "posetq/linalg.hpp"
#include "posetq/poset.hpp"

namespace posetq::code {

using Codeword = gf::Vec;

constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

/// Exact non-negative rational, always reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t n, std::int64_t d) {
        const auto g = std::gcd(n, d);
        return g == 0 ? Rational{0, 1} : Rational{n / g, d / g};
    }
    bool is_integer() const { return den == 1; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Subfield over which a code is closed under scaling: GF(p), GF(q), or all of GF(q^t).
enum class Linearity { prime, base, full };

const char* to_string(Linearity l);

/// The alphabet GF(q^t) together with its distinguished subfield GF(q).
class Ambient {
public:
    /// t == 1 uses base itself as the alphabet; t > 1 adjoins the canonical degree-t extension.
    static Ambient make(const gf::Field& base, int t);
    /// Uses an existing extension; ext.base() becomes GF(q).
    static Ambient of_extension(const gf::Field& ext);

    const gf::Field& field() const { return field_; }
    const gf::Field& base() const { return base_; }
    int t() const { return t_; }
    std::uint32_t alphabet() const { return field_.size(); }
    std::uint32_t characteristic() const { return field_.characteristic(); }
    /// Degree of GF(q^t) over GF(p).
    int prime_degree() const { return field_.degree(); }
    gf::Field scalars(Linearity l) const;

    friend bool operator==(const Ambient& a, const Ambient& b) { return a.t_ == b.t_ && a.field_ == b.field_; }

private:
    Ambient(gf::Field field, gf::Field base, int t) : field_(std::move(field)), base_(std::move(base)), t_(t) {}
    gf::Field field_;
    gf::Field base_;
    int t_;
};

/// A subgroup of GF(q^t)^n closed under scaling by the linearity subfield.
///
/// Generators are kept in reduced row echelon form over the linearity subfield, computed on
/// the subfield coordinate expansion. Codewords are indexed by their subfield coordinates with
/// respect to these generators, first generator most significant.
class AdditiveCode {
public:
    static AdditiveCode make(const Ambient& ambient, std::size_t n, Linearity lin, std::vector<gf::Vec> gens);
    static AdditiveCode zero(const Ambient& ambient, std::size_t n);
    static AdditiveCode full_space(const Ambient& ambient, std::size_t n);

    const Ambient& ambient() const { return ambient_; }
    std::size_t length() const { return n_; }
    Linearity linearity() const { return lin_; }
    const std::vector<gf::Vec>& generators() const { return gens_; }
    gf::Field scalar_field() const { return ambient_.scalars(lin_); }
    int dimension() const { return static_cast<int>(gens_.size()); }
    /// log_p |D|
    int log_p_size() const { return static_cast<int>(prime_gens_.size()); }
    /// |D|; throws CodeTooLarge when it does not fit in 63 bits.
    std::uint64_t size() const;
    bool is_zero() const { return gens_.empty(); }

    /// GF(p)-basis in enumeration order, most significant first.
    const std::vector<gf::Vec>& prime_generators() const { return prime_gens_; }
    bool contains(const gf::Vec& v) const;
    bool is_subcode_of(const AdditiveCode& other) const;
    bool same_set(const AdditiveCode& other) const;

    /// Largest subfield under which the code is closed.
    Linearity detect_linearity() const;
    /// Re-expresses the code over another subfield; throws InvalidArgument if not closed.
    AdditiveCode with_linearity(Linearity lin) const;

    gf::Vec codeword(std::uint64_t index) const;

    /// Calls fn(codeword) for indices [first, last); stops early when fn returns false.
    template <class Fn>
    void for_each_in_range(std::uint64_t first, std::uint64_t last, Fn&& fn) const;
    /// Every codeword once, in index order. Throws CodeTooLarge when |D| > cap.
    template <class Fn>
    void for_each(Fn&& fn, std::uint64_t cap = kDefaultCap) const;
    std::vector<gf::Vec> enumerate(std::uint64_t cap = kDefaultCap) const;

private:
    AdditiveCode(Ambient a, std::size_t n, Linearity lin) : ambient_(std::move(a)), n_(n), lin_(lin) {}

    Ambient ambient_;
    std::size_t n_;
    Linearity lin_;
    std::vector<gf::Vec> gens_;
    std::vector<gf::Vec> prime_gens_;
    linalg::Echelon prime_echelon_;  // over GF(p) on the digit expansion
};

void check_enumerable(const AdditiveCode& d, std::uint64_t cap);

template <class Fn>
void AdditiveCode::for_each_in_range(std::uint64_t first, std::uint64_t last, Fn&& fn) const {
    const gf::Field& f = ambient_.field();
    const std::uint32_t p = f.characteristic();
    const std::size_t k = prime_gens_.size();
    std::vector<std::uint32_t> digit(k, 0);
    gf::Vec cur(n_, 0);
    std::uint64_t x = first;
    for (std::size_t i = k; i-- > 0;) {
        digit[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
        for (std::size_t j = 0; j < n_; ++j) cur[j] = f.add(cur[j], f.mul(digit[i], prime_gens_[i][j]));
    }
    for (std::uint64_t idx = first; idx < last; ++idx) {
        if (!fn(static_cast<const gf::Vec&>(cur))) return;
        for (std::size_t i = k; i-- > 0;) {
            const auto& h = prime_gens_[i];
            for (std::size_t j = 0; j < n_; ++j) cur[j] = f.add(cur[j], h[j]);
            if (++digit[i] < p) break;
            digit[i] = 0;
        }
    }
}

template <class Fn>
void AdditiveCode::for_each(Fn&& fn, std::uint64_t cap) const {
    check_enumerable(*this, cap);
    for_each_in_range(0, size(), std::forward<Fn>(fn));
}

// ---------------------------------------------------------------------------------------------
// Poset weights

poset::Subset support(const gf::Vec& v);
poset::Ideal support_ideal(const poset::Poset& p, const gf::Vec& v);
int wt_P(const poset::Poset& p, const gf::Vec& v);

/// Distinct supports of nonzero codewords, ascending. d_P only depends on this set.
std::vector<poset::Subset> nonzero_supports(const AdditiveCode& d, std::uint64_t cap = kDefaultCap);

/// Minimum P-weight over nonzero codewords. Throws TrivialCode when |D| = 1.
int d_P(const poset::Poset& p, const AdditiveCode& d, std::uint64_t cap = kDefaultCap);
int d_P(const poset::Poset& p, const std::vector<poset::Subset>& supports);

/// { v : support_ideal(v - u) is inside I }.
std::vector<gf::Vec> ball(const poset::Poset& p, const poset::Ideal& i, const gf::Vec& u, const Ambient& ambient,
                          std::uint64_t cap = kDefaultCap);

/// Whether the I-balls around codewords tile the ambient space.
bool is_I_perfect(const AdditiveCode& d, const poset::Poset& p, const poset::Ideal& i);

bool is_mds(const poset::Poset& p, const AdditiveCode& d, std::uint64_t cap = kDefaultCap);

Rational q_dimension(const AdditiveCode& d);

struct MdsPerfectReport {
    bool skipped = false;  // |D| < 2
    bool mds = false;
    int d = 0;
    Rational qdim;
    int ideal_size = -1;
    std::size_t ideals_checked = 0;
    bool all_perfect = false;
    bool perfect_side = false;  // qdim integral and every ideal of the right size perfect
    bool agree = true;
    std::optional<poset::Ideal> witness;
};

/// Checks that MDS-ness coincides with I-perfectness for every ideal of size n - qdim.
MdsPerfectReport mds_iff_perfect_verify(const poset::Poset& p, const AdditiveCode& d,
                                        std::uint64_t cap = kDefaultCap);

// ---------------------------------------------------------------------------------------------
// Generator matrices of GF(q)-linear codes in GF(q^t)^n

struct ReducedGenerator {
    std::vector<gf::Vec> rows;  // G'
    std::vector<int> rrn;       // row reduction numbers k_1..k_r
};

/// Column-by-column reduction of a generator matrix with GF(q)-independent rows.
ReducedGenerator reduce_generator(const Ambient& ambient, std::vector<gf::Vec> rows);
/// Uses a GF(q)-basis of a base- or full-linear code.
ReducedGenerator reduce_generator(const AdditiveCode& d);

struct ReducedFormCheck {
    bool bounded = false;        // 0 <= k_i <= t
    bool last_nonzero = false;   // k_r != 0 (vacuous when r = 0)
    bool sums_to_k = false;      // sum k_i = k
    bool blocks_independent = false;
    bool zero_below = false;

    bool all() const { return bounded && last_nonzero && sums_to_k && blocks_independent && zero_below; }
};

ReducedFormCheck check_reduced_form(const Ambient& ambient, const ReducedGenerator& g);

/// GF(q)-dimension of a GF(q)-linear code.
int base_dimension(const AdditiveCode& d);

struct BoundCheck {
    int d = 0;
    int s = 0;  // ceil(k / t)
    bool holds = false;
};

/// d_P(D) <= n - ceil(k/t) + 1 for a GF(q)-linear code of GF(q)-dimension k.
BoundCheck huffman_bound_check(const poset::Poset& p, const AdditiveCode& d, std::uint64_t cap = kDefaultCap);

/// Evaluation code { (f(1), f(a), ..., f(a^{q-2})) : deg f < k } for a primitive element a.
AdditiveCode reed_solomon(const gf::Field& field, int k);

/// min wt_P over big \ small.
int min_weight_over_difference(const poset::Poset& p, const AdditiveCode& big, const AdditiveCode& small,
                               std::uint64_t cap = kDefaultCap);
/// min rho_P(u, v) over distinct u, v in big \ small, by pairwise scan.
int min_distance_within_difference(const poset::Poset& p, const AdditiveCode& big, const AdditiveCode& small,
                                   std::uint64_t cap = std::uint64_t{1} << 14);

}  // namespace posetq::code
