#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "posetq/error.hpp"
#include "posetq/gf.hpp"

using posetq::Error;
using posetq::ErrorKind;
using posetq::gf::Elem;
using posetq::gf::Field;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

Field gf4() {
    const std::uint32_t poly[] = {1, 1, 1};
    return Field::make(2, 2, poly);
}

}  // namespace

TEST(FieldMake, PrimeFields) {
    const std::uint32_t x[] = {0, 1};
    const auto f2 = Field::make(2, 1, x);
    EXPECT_EQ(f2.size(), 2u);
    const auto f3 = Field::make(3, 1, x);
    EXPECT_EQ(f3.size(), 3u);
    EXPECT_TRUE(f3.is_prime_field());
}

TEST(FieldMake, Gf4) {
    const auto f = gf4();
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f.characteristic(), 2u);
    EXPECT_EQ(f.degree(), 2);
}

TEST(FieldMake, Rejections) {
    const std::uint32_t x[] = {0, 1};
    EXPECT_EQ(kind_of([&] { Field::make(4, 1, x); }), ErrorKind::NonPrimeModulus);
    const std::uint32_t reducible[] = {1, 0, 1};  // (x+1)^2 over GF(2)
    EXPECT_EQ(kind_of([&] { Field::make(2, 2, reducible); }), ErrorKind::ReduciblePolynomial);
    const std::uint32_t cubic[] = {0, 1, 0, 1};  // x(x^2+1)
    EXPECT_EQ(kind_of([&] { Field::make(3, 3, cubic); }), ErrorKind::ReduciblePolynomial);
}

TEST(Arith, Examples) {
    const auto f = gf4();
    const Elem w = 2;  // coordinates [0,1]
    EXPECT_EQ(f.mul(w, w), 3u);  // w + 1
    for (Elem x = 0; x < 4; ++x) EXPECT_EQ(f.add(x, 0), x);
    EXPECT_EQ(Field::prime(3).inv(2), 2u);
    EXPECT_EQ(kind_of([&] { f.inv(0); }), ErrorKind::DivisionByZero);
}

TEST(Arith, MatchesPolynomialOracle) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        const auto f = Field::standard(p, m);
        oracle::PolyField o{p, {f.modulus().begin(), f.modulus().end()}};
        ASSERT_EQ(o.size(), f.size());
        for (Elem x = 0; x < f.size(); ++x) {
            for (Elem y = 0; y < f.size(); ++y) {
                ASSERT_EQ(f.mul(x, y), o.mul(x, y)) << "p=" << p << " m=" << m;
                ASSERT_EQ(f.add(x, y), o.add(x, y));
            }
            if (x != 0) EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
            EXPECT_EQ(f.frobenius(x), o.pow(x, p));
        }
    }
}

TEST(Arith, TowerIsAField) {
    const auto f16 = Field::extend(gf4(), 2);
    const auto f27 = Field::extend(Field::prime(3), 3);
    const auto f81 = Field::extend(Field::standard(3, 2), 2);
    for (const auto& f : {f16, f27, f81}) {
        std::set<Elem> powers;
        const Elem g = f.primitive_element();
        for (std::uint32_t e = 0; e + 1 < f.size(); ++e) powers.insert(f.pow(g, e));
        EXPECT_EQ(powers.size(), f.size() - 1);
        for (Elem x = 0; x < f.size(); ++x) {
            for (Elem y = 0; y < f.size(); y += 5) {
                for (Elem z = 1; z < f.size(); z += 7) {
                    ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                }
            }
        }
    }
}

TEST(Arith, SubfieldIsIndexPrefix) {
    const auto base = Field::standard(3, 2);
    const auto ext = Field::extend(base, 2);
    for (Elem x = 0; x < base.size(); ++x) {
        for (Elem y = 0; y < base.size(); ++y) {
            EXPECT_EQ(ext.mul(x, y), base.mul(x, y));
            EXPECT_EQ(ext.add(x, y), base.add(x, y));
        }
    }
}

TEST(Trace, Examples) {
    const auto f = gf4();
    EXPECT_EQ(f.trace(0), 0u);
    EXPECT_EQ(Field::prime(2).trace(1), 1u);
    EXPECT_EQ(f.trace(2), 1u);
}

TEST(Trace, PrimeValuedLinearSurjective) {
    for (const auto& f : {gf4(), Field::standard(2, 4), Field::standard(3, 3), Field::extend(Field::standard(3, 2), 2),
                          Field::standard(5, 2)}) {
        std::set<Elem> image;
        for (Elem x = 0; x < f.size(); ++x) {
            // independent evaluation: sum of x^{p^i}
            Elem acc = 0;
            Elem y = x;
            for (int i = 0; i < f.degree(); ++i) {
                acc = f.add(acc, y);
                y = f.pow(y, f.characteristic());
            }
            ASSERT_EQ(f.trace(x), acc);
            ASSERT_LT(f.trace(x), f.characteristic());
            ASSERT_EQ(f.frobenius(f.trace(x)), f.trace(x));
            image.insert(f.trace(x));
            for (Elem y2 = 0; y2 < f.size(); y2 += 3) ASSERT_EQ(f.trace(f.add(x, y2)), (f.trace(x) + f.trace(y2)) % f.characteristic());
        }
        EXPECT_EQ(image.size(), f.characteristic());
    }
}

TEST(Frobenius, IsAutomorphism) {
    for (const auto& f : {Field::standard(2, 5), Field::standard(3, 3), Field::extend(gf4(), 3)}) {
        for (Elem x = 0; x < f.size(); ++x) {
            for (Elem y = 0; y < f.size(); y += 3) {
                ASSERT_EQ(f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y)));
                ASSERT_EQ(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y)));
            }
        }
    }
}

TEST(QuadExt, SmallestQuadratics) {
    const auto e2 = posetq::gf::quad_ext_make(Field::prime(2));
    EXPECT_EQ(std::vector<Elem>(e2.field.modulus().begin(), e2.field.modulus().end()), (std::vector<Elem>{1, 1, 1}));
    const auto e3 = posetq::gf::quad_ext_make(Field::prime(3));
    EXPECT_EQ(std::vector<Elem>(e3.field.modulus().begin(), e3.field.modulus().end()), (std::vector<Elem>{1, 0, 1}));

    // exhaustive oracle: first monic quadratic (c0 then c1 ascending) without a root in GF(3)
    std::vector<Elem> first;
    for (Elem c0 = 0; c0 < 3 && first.empty(); ++c0) {
        for (Elem c1 = 0; c1 < 3 && first.empty(); ++c1) {
            bool root = false;
            for (Elem x = 0; x < 3; ++x) root = root || (x * x + c1 * x + c0) % 3 == 0;
            if (!root) first = {c0, c1, 1};
        }
    }
    EXPECT_EQ(first, (std::vector<Elem>{1, 0, 1}));
}

TEST(QuadExt, GammaNotInBase) {
    for (const auto& base : {Field::prime(2), Field::prime(3), gf4(), Field::prime(5), Field::standard(3, 2)}) {
        const auto e = posetq::gf::quad_ext_make(base);
        EXPECT_NE(e.field.pow(e.gamma, e.q()), e.gamma);
        EXPECT_GE(e.gamma, e.q());
    }
}

TEST(QuadExt, Split) {
    const auto e = posetq::gf::quad_ext_make(Field::prime(2));
    EXPECT_EQ(posetq::gf::rel_trace_and_split(e, 0), (std::pair<Elem, Elem>{0, 0}));
    EXPECT_EQ(posetq::gf::rel_trace_and_split(e, e.gamma), (std::pair<Elem, Elem>{0, 1}));
    EXPECT_EQ(posetq::gf::rel_trace_and_split(e, e.field.add(e.gamma, 1)), (std::pair<Elem, Elem>{1, 1}));

    for (const auto& base : {Field::prime(2), Field::prime(3), gf4(), Field::standard(2, 3), Field::prime(7)}) {
        const auto ext = posetq::gf::quad_ext_make(base);
        for (Elem v = 0; v < ext.field.size(); ++v) {
            const auto [a, b] = posetq::gf::rel_trace_and_split(ext, v);
            ASSERT_LT(a, ext.q());
            ASSERT_LT(b, ext.q());
            // a*1 + b*gamma evaluated with field arithmetic
            ASSERT_EQ(ext.field.add(a, ext.field.mul(b, ext.gamma)), v);
            ASSERT_EQ(posetq::gf::combine(ext, a, b), v);
        }
    }
}

TEST(PrimePower, Decompose) {
    EXPECT_EQ(posetq::gf::prime_power(9), (std::pair<std::uint32_t, int>{3, 2}));
    EXPECT_EQ(posetq::gf::prime_power(7), (std::pair<std::uint32_t, int>{7, 1}));
    EXPECT_EQ(posetq::gf::prime_power(12).first, 0u);
}
