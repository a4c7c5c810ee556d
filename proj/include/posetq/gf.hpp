#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace posetq::gf {

/// Field element as a packed coordinate index.
///
/// An element of GF(p^M) is stored as sum_i c_i p^i, where (c_0, ..., c_{M-1}) are its
/// coordinates in the polynomial basis of the tower that built it. For a tower
/// GF(p) < GF(q) < GF(q^t), indices below q are exactly the elements of GF(q) and indices
/// below p are exactly the prime subfield, so subfields are index prefixes.
using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

bool is_prime(std::uint64_t n);

/// Returns (p, m) with q = p^m, or (0, 0) when q is not a prime power.
std::pair<std::uint32_t, int> prime_power(std::uint64_t q);

struct FieldData;

/// Immutable handle to a finite field. Copies share the arithmetic tables.
class Field {
public:
    /// GF(p^m) = GF(p)[x]/(poly), poly monic of degree m, coefficients ascending.
    static Field make(std::uint32_t p, int m, std::span<const std::uint32_t> poly);
    static Field prime(std::uint32_t p);
    /// GF(p^m) from the lexicographically smallest monic irreducible of degree m.
    static Field standard(std::uint32_t p, int m);
    /// base[y]/(poly) with poly monic over base, coefficients ascending.
    static Field extend(const Field& base, std::span<const Elem> poly);
    /// base[y]/(f) for the lexicographically smallest monic irreducible f of degree t.
    static Field extend(const Field& base, int t);

    std::uint32_t characteristic() const;
    int degree() const;  // over GF(p)
    std::uint32_t size() const;
    int relative_degree() const;  // over base()
    /// The field this one was built over; GF(p) for prime-polynomial fields, itself for GF(p).
    Field base() const;
    bool is_prime_field() const;
    /// Defining polynomial over base(), ascending, monic.
    std::span<const Elem> modulus() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;  // throws DivisionByZero
    Elem div(Elem x, Elem y) const;
    Elem pow(Elem x, std::uint64_t e) const;
    Elem frobenius(Elem x) const;  // x^p
    /// Absolute trace to GF(p): sum_{i<M} x^{p^i}. Result index is below p.
    Elem trace(Elem x) const;
    /// Trace to base(): sum_{j<t} x^{|base|^j}.
    Elem relative_trace(Elem x) const;
    Elem primitive_element() const;

    /// Coordinates over GF(p), ascending powers; length degree().
    std::vector<std::uint32_t> coeffs(Elem x) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;

    bool contains(Elem x) const { return x < size(); }

    friend bool operator==(const Field& a, const Field& b);

private:
    explicit Field(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const FieldData> d_;
};

/// GF(q^2) over GF(q) with the basis {1, gamma}; gamma is the class of the variable.
struct QuadExt {
    Field field;
    Elem gamma;

    Field base() const { return field.base(); }
    std::uint32_t q() const { return field.base().size(); }
};

/// Uses the lexicographically smallest monic irreducible quadratic over base.
QuadExt quad_ext_make(const Field& base);
/// Views an existing degree-2 extension as a QuadExt.
QuadExt quad_ext_of(const Field& ext);

/// Unique (a, b) in GF(q)^2 with v = a + b*gamma.
std::pair<Elem, Elem> rel_trace_and_split(const QuadExt& ext, Elem v);
Elem combine(const QuadExt& ext, Elem a, Elem b);

/// Lexicographically smallest monic irreducible polynomial of degree d over GF(p).
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, int d);
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace posetq::gf
