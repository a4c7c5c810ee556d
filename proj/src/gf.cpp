#include "posetq/gf.hpp"

#include <algorithm>
#include <string>

#include "posetq/error.hpp"

namespace posetq::gf {

struct FieldData {
    std::uint32_t p = 0;
    int degree = 0;
    std::uint32_t size = 0;
    int rel_degree = 0;
    std::shared_ptr<const FieldData> base;  // null: built directly over GF(p)
    std::vector<Elem> modulus;

    std::vector<Elem> exp;  // length 2(size-1)
    std::vector<std::uint32_t> log;
    std::vector<Elem> add_table;  // size*size, only for small odd-characteristic fields
    std::vector<Elem> trace_table;
    Elem primitive = 1;
};

namespace {

constexpr std::uint32_t kAddTableLimit = 256;
constexpr std::uint64_t kMaxFieldSize = 1u << 20;

Elem digit_add(std::uint32_t p, Elem x, Elem y) {
    if (p == 2) return x ^ y;
    Elem r = 0;
    Elem place = 1;
    while (x != 0 || y != 0) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
    }
    return r;
}

Elem digit_neg(std::uint32_t p, Elem x) {
    if (p == 2) return x;
    Elem r = 0;
    Elem place = 1;
    while (x != 0) {
        r += ((p - x % p) % p) * place;
        x /= p;
        place *= p;
    }
    return r;
}

Elem fd_add(const FieldData& f, Elem x, Elem y) {
    if (!f.add_table.empty()) return f.add_table[static_cast<std::size_t>(x) * f.size + y];
    return digit_add(f.p, x, y);
}

Elem fd_neg(const FieldData& f, Elem x) { return digit_neg(f.p, x); }

Elem fd_mul(const FieldData& f, Elem x, Elem y) {
    if (x == 0 || y == 0) return 0;
    return f.exp[f.log[x] + f.log[y]];
}

Elem fd_inv(const FieldData& f, Elem x) {
    if (x == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const std::uint32_t order = f.size - 1;
    return f.exp[(order - f.log[x]) % order];
}

Elem fd_pow(const FieldData& f, Elem x, std::uint64_t e) {
    if (e == 0) return 1;
    if (x == 0) return 0;
    const std::uint64_t order = f.size - 1;
    return f.exp[static_cast<std::size_t>((static_cast<std::uint64_t>(f.log[x]) * (e % order)) % order)];
}

// Coefficient arithmetic for polynomials over GF(p) or over an already built field.
struct PrimeRing {
    std::uint32_t p;
    std::uint32_t size() const { return p; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p); }
};

struct FieldRing {
    const FieldData* f;
    std::uint32_t size() const { return f->size; }
    Elem add(Elem a, Elem b) const { return fd_add(*f, a, b); }
    Elem sub(Elem a, Elem b) const { return fd_add(*f, a, fd_neg(*f, b)); }
    Elem mul(Elem a, Elem b) const { return fd_mul(*f, a, b); }
};

using Poly = std::vector<Elem>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m.
template <class Ring>
Poly poly_mod(const Ring& r, Poly a, const Poly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const Elem lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = r.sub(a[shift + i], r.mul(lead, m[i]));
        }
        trim(a);
    }
    return a;
}

// The i-th monic polynomial of degree d in lexicographic order of ascending coefficient tuples.
Poly nth_monic(std::uint32_t base, int d, std::uint64_t index) {
    Poly c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    for (int i = d - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = static_cast<Elem>(index % base);
        index /= base;
    }
    return c;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

template <class Ring>
bool irreducible_over(const Ring& r, const Poly& f) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e) {
        const std::uint64_t count = ipow(r.size(), e);
        for (std::uint64_t i = 0; i < count; ++i) {
            // nth_monic orders c_0 most significant; any enumeration order works here.
            if (poly_mod(r, f, nth_monic(r.size(), e, i)).empty()) return false;
        }
    }
    return true;
}

template <class Ring>
Poly smallest_irreducible_over(const Ring& r, int d) {
    const std::uint64_t count = ipow(r.size(), d);
    for (std::uint64_t i = 0; i < count; ++i) {
        Poly f = nth_monic(r.size(), d, i);
        if (irreducible_over(r, f)) return f;
    }
    throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

template <class Ring>
Elem slow_mul(const Ring& r, const Poly& modulus, Elem x, Elem y) {
    const std::uint32_t b = r.size();
    const std::size_t t = modulus.size() - 1;
    Poly xa(t), ya(t);
    for (std::size_t i = 0; i < t; ++i) {
        xa[i] = x % b;
        x /= b;
        ya[i] = y % b;
        y /= b;
    }
    Poly prod(2 * t, 0);
    for (std::size_t i = 0; i < t; ++i) {
        if (xa[i] == 0) continue;
        for (std::size_t j = 0; j < t; ++j) prod[i + j] = r.add(prod[i + j], r.mul(xa[i], ya[j]));
    }
    Poly rem = poly_mod(r, std::move(prod), modulus);
    Elem out = 0;
    for (std::size_t i = rem.size(); i-- > 0;) out = out * b + rem[i];
    return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

template <class Ring>
Elem slow_pow(const Ring& r, const Poly& modulus, Elem x, std::uint64_t e) {
    Elem result = 1;
    while (e > 0) {
        if (e & 1) result = slow_mul(r, modulus, result, x);
        x = slow_mul(r, modulus, x, x);
        e >>= 1;
    }
    return result;
}

template <class Ring>
std::shared_ptr<FieldData> build(const Ring& r, std::uint32_t p, int base_degree,
                                 std::shared_ptr<const FieldData> base, Poly modulus) {
    auto d = std::make_shared<FieldData>();
    d->p = p;
    d->rel_degree = static_cast<int>(modulus.size()) - 1;
    d->degree = base_degree * d->rel_degree;
    const std::uint64_t size = ipow(r.size(), d->rel_degree);
    if (size > kMaxFieldSize) {
        throw Error(ErrorKind::InvalidArgument, "field size " + std::to_string(size) + " exceeds 2^20");
    }
    d->size = static_cast<std::uint32_t>(size);
    d->base = std::move(base);
    d->modulus = std::move(modulus);

    const std::uint64_t order = d->size - 1;
    const auto factors = prime_factors(order);
    Elem g = 1;
    for (Elem cand = 1; cand < d->size; ++cand) {
        bool primitive = order == 1 || slow_pow(r, d->modulus, cand, order) == 1;
        for (auto f : factors) {
            if (!primitive) break;
            primitive = slow_pow(r, d->modulus, cand, order / f) != 1;
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    d->primitive = g;
    d->exp.assign(2 * order + 1, 0);
    d->log.assign(d->size, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        d->exp[i] = cur;
        d->log[cur] = static_cast<std::uint32_t>(i);
        cur = slow_mul(r, d->modulus, cur, g);
    }
    for (std::uint64_t i = order; i < d->exp.size(); ++i) d->exp[i] = d->exp[i - order];

    if (p != 2 && d->size <= kAddTableLimit) {
        d->add_table.resize(static_cast<std::size_t>(d->size) * d->size);
        for (Elem x = 0; x < d->size; ++x)
            for (Elem y = 0; y < d->size; ++y)
                d->add_table[static_cast<std::size_t>(x) * d->size + y] = digit_add(p, x, y);
    }

    d->trace_table.resize(d->size);
    for (Elem x = 0; x < d->size; ++x) {
        Elem acc = 0;
        Elem y = x;
        for (int i = 0; i < d->degree; ++i) {
            acc = digit_add(p, acc, y);
            y = fd_pow(*d, y, p);
        }
        if (acc >= p) throw Error(ErrorKind::InvalidArgument, "trace left the prime field");
        d->trace_table[x] = acc;
    }
    return d;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, int> prime_power(std::uint64_t q) {
    if (q < 2) return {0, 0};
    const auto f = prime_factors(q);
    if (f.size() != 1) return {0, 0};
    int m = 0;
    while (q > 1) {
        q /= f[0];
        ++m;
    }
    return {static_cast<std::uint32_t>(f[0]), m};
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, int d) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime");
    return smallest_irreducible_over(PrimeRing{p}, d);
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    Poly f(poly.begin(), poly.end());
    for (auto& c : f) c %= p;
    return irreducible_over(PrimeRing{p}, f);
}

Field Field::make(std::uint32_t p, int m, std::span<const std::uint32_t> poly) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    if (poly.size() != static_cast<std::size_t>(m) + 1 || poly.back() != 1) {
        throw Error(ErrorKind::InvalidArgument, "polynomial must be monic of degree " + std::to_string(m));
    }
    Poly f(poly.begin(), poly.end());
    for (auto c : f)
        if (c >= p) throw Error(ErrorKind::InvalidArgument, "polynomial coefficient out of range");
    PrimeRing ring{p};
    if (!irreducible_over(ring, f)) throw Error(ErrorKind::ReduciblePolynomial, "polynomial has a proper factor");
    std::shared_ptr<const FieldData> base;
    if (m > 1) base = Field::prime(p).d_;
    return Field(build(ring, p, 1, std::move(base), std::move(f)));
}

Field Field::prime(std::uint32_t p) {
    const std::uint32_t poly[] = {0, 1};
    return make(p, 1, poly);
}

Field Field::standard(std::uint32_t p, int m) {
    const auto poly = smallest_irreducible(p, m);
    return make(p, m, poly);
}

Field Field::extend(const Field& base, std::span<const Elem> poly) {
    const int t = static_cast<int>(poly.size()) - 1;
    if (t < 1 || poly.back() != 1) throw Error(ErrorKind::InvalidArgument, "extension polynomial must be monic");
    for (auto c : poly)
        if (c >= base.size()) throw Error(ErrorKind::InvalidArgument, "extension coefficient out of range");
    Poly f(poly.begin(), poly.end());
    FieldRing ring{base.d_.get()};
    if (!irreducible_over(ring, f)) throw Error(ErrorKind::ReduciblePolynomial, "polynomial has a proper factor");
    return Field(build(ring, base.characteristic(), base.degree(), base.d_, std::move(f)));
}

Field Field::extend(const Field& base, int t) {
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    const auto f = smallest_irreducible_over(FieldRing{base.d_.get()}, t);
    return extend(base, f);
}

std::uint32_t Field::characteristic() const { return d_->p; }
int Field::degree() const { return d_->degree; }
std::uint32_t Field::size() const { return d_->size; }
int Field::relative_degree() const { return d_->rel_degree; }
bool Field::is_prime_field() const { return d_->degree == 1; }
std::span<const Elem> Field::modulus() const { return d_->modulus; }

Field Field::base() const {
    if (d_->base) return Field(d_->base);
    return *this;
}

Elem Field::add(Elem x, Elem y) const { return fd_add(*d_, x, y); }
Elem Field::sub(Elem x, Elem y) const { return fd_add(*d_, x, fd_neg(*d_, y)); }
Elem Field::neg(Elem x) const { return fd_neg(*d_, x); }
Elem Field::mul(Elem x, Elem y) const { return fd_mul(*d_, x, y); }
Elem Field::inv(Elem x) const { return fd_inv(*d_, x); }
Elem Field::div(Elem x, Elem y) const { return fd_mul(*d_, x, fd_inv(*d_, y)); }
Elem Field::pow(Elem x, std::uint64_t e) const { return fd_pow(*d_, x, e); }
Elem Field::frobenius(Elem x) const { return fd_pow(*d_, x, d_->p); }
Elem Field::trace(Elem x) const { return d_->trace_table[x]; }
Elem Field::primitive_element() const { return d_->primitive; }

Elem Field::relative_trace(Elem x) const {
    const std::uint64_t b = base().size();
    Elem acc = 0;
    Elem y = x;
    for (int j = 0; j < d_->rel_degree; ++j) {
        acc = add(acc, y);
        y = pow(y, b);
    }
    return acc;
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d_->degree));
    for (auto& ci : c) {
        ci = x % d_->p;
        x /= d_->p;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() != static_cast<std::size_t>(d_->degree)) {
        throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(d_->degree) + " coordinates");
    }
    Elem x = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= d_->p) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
        x = x * d_->p + c[i];
    }
    return x;
}

bool operator==(const Field& a, const Field& b) {
    const FieldData* x = a.d_.get();
    const FieldData* y = b.d_.get();
    while (x != nullptr && y != nullptr) {
        if (x == y) return true;
        if (x->p != y->p || x->modulus != y->modulus) return false;
        x = x->base.get();
        y = y->base.get();
    }
    return x == y;
}

QuadExt quad_ext_make(const Field& base) { return quad_ext_of(Field::extend(base, 2)); }

QuadExt quad_ext_of(const Field& ext) {
    if (ext.relative_degree() != 2) throw Error(ErrorKind::InvalidArgument, "not a quadratic extension");
    return QuadExt{ext, ext.base().size()};
}

std::pair<Elem, Elem> rel_trace_and_split(const QuadExt& ext, Elem v) {
    const Elem q = ext.q();
    return {v % q, v / q};
}

Elem combine(const QuadExt& ext, Elem a, Elem b) { return a + b * ext.q(); }

}  // namespace posetq::gf
