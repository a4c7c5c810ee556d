#pragma once

#include <cstdint>
#include <vector>

#include "posetq/code.hpp"
#include "posetq/gf.hpp"
#include "posetq/poset.hpp"

namespace posetq::symplectic {

/// (a | b) in GF(q)^{2n}.
struct SympVector {
    gf::Vec a;
    gf::Vec b;

    friend bool operator==(const SympVector&, const SympVector&) = default;
};

/// Concatenation a followed by b, the layout used by codes in GF(q)^{2n}.
gf::Vec join(const SympVector& v);
SympVector split(const gf::Vec& ab);

/// |P_a ∪ P_b|
int wt_symp_P(const poset::Poset& p, const SympVector& v);
int wt_symp_P(const poset::Poset& p, const gf::Vec& ab);

/// tr(u.b · v.a − v.b · u.a), a GF(p) element.
gf::Elem form_symp(const gf::Field& fq, const SympVector& u, const SympVector& v);
gf::Elem form_symp(const gf::Field& fq, const gf::Vec& u, const gf::Vec& v);

/// tr_{q/p}((v^q·w − v·w^q) / (γ^q − γ)); equals form_symp(psi(v), psi(w)).
gf::Elem form_alt(const gf::QuadExt& ext, const gf::Vec& v, const gf::Vec& w);

/// sum_i a_i^q b_i in GF(q^2).
gf::Elem form_herm(const gf::QuadExt& ext, const gf::Vec& a, const gf::Vec& b);

SympVector psi(const gf::QuadExt& ext, const gf::Vec& v);
gf::Vec psi_inv(const gf::QuadExt& ext, const SympVector& v);

/// ψ applied to a code in GF(q^2)^n, giving a GF(p)-linear code in GF(q)^{2n}.
code::AdditiveCode psi_code(const code::AdditiveCode& d);
/// Inverse of psi_code; the result lives in the ambient ext.field over ext.base().
code::AdditiveCode psi_inv_code(const gf::QuadExt& ext, const code::AdditiveCode& c);

enum class Form { symp, alt, herm };

const char* to_string(Form f);

/// All vectors pairing to zero with every codeword, as a prime-linearity code.
///
/// symp needs a code in GF(q)^{2n} (t = 1, even length); alt and herm need a code in GF(q^2)^n
/// (t = 2), and herm additionally a GF(q^2)-linear code.
code::AdditiveCode dual(const code::AdditiveCode& d, Form form);

bool is_self_orthogonal(const code::AdditiveCode& c);

/// A_w = number of codewords with |supp a ∪ supp b| = w, w = 0..n.
struct WeightEnumerator {
    std::vector<std::uint64_t> coeffs;

    std::uint64_t total() const;
};

WeightEnumerator weight_enumerator_symp(const code::AdditiveCode& c, std::uint64_t cap = code::kDefaultCap);

struct MacWilliamsReport {
    WeightEnumerator a;  // of C
    WeightEnumerator b;  // of the symplectic dual
    std::vector<std::int64_t> lhs;  // |C| B(z)
    std::vector<std::int64_t> rhs;  // sum_w A_w (1 - z)^w (1 + (q^2 - 1) z)^{n - w}
    bool identity_holds = false;
    std::uint64_t b_at_one = 0;
    std::uint64_t expected_dual_size = 0;  // q^{2n} / |C|
    bool holds() const { return identity_holds && b_at_one == expected_dual_size; }
};

/// Checks the enumerator identity between C and its symplectic dual as an exact polynomial identity.
MacWilliamsReport macwilliams_check(const code::AdditiveCode& c, std::uint64_t cap = code::kDefaultCap);

/// min wt_symp_P over big \ small for codes in GF(q)^{2n}.
int min_symp_weight_over_difference(const poset::Poset& p, const code::AdditiveCode& big,
                                    const code::AdditiveCode& small, std::uint64_t cap = code::kDefaultCap);

/// Minimum nonzero wt_symp_P of a code in GF(q)^{2n}; throws TrivialCode on the zero code.
int min_symp_weight(const poset::Poset& p, const code::AdditiveCode& c, std::uint64_t cap = code::kDefaultCap);

}  // namespace posetq::symplectic
