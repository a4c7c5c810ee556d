#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "posetq/error.hpp"
#include "posetq/qsim.hpp"

using namespace posetq;
using code::AdditiveCode;
using code::Ambient;
using code::Linearity;
using gf::Field;
using gf::Vec;
using poset::Poset;
using qsim::Matrix;
using stabilizer::ErrorOperator;
using stabilizer::StabilizerGroup;

namespace {

ErrorOperator random_op(const Field& f, std::size_t n, std::mt19937_64& rng) {
    return {static_cast<std::uint32_t>(rng() % f.characteristic()), gen::random_vec(f, n, rng),
            gen::random_vec(f, n, rng)};
}

StabilizerGroup worked_example() {
    const auto a = Ambient::make(Field::prime(2), 2);
    return StabilizerGroup::from_code(symplectic::psi_code(AdditiveCode::make(a, 3, Linearity::full, {{1, 1, 0}})));
}

Poset cover_13() {
    const std::vector<std::pair<int, int>> covers = {{1, 3}};
    return Poset::from_covers(3, covers);
}

double max_diff(const Matrix& x, const Matrix& y) { return (x - y).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Realize, Examples) {
    const auto f2 = Field::prime(2);
    EXPECT_LT(max_diff(qsim::realize(f2, stabilizer::identity(3)), Matrix::Identity(8, 8)), 1e-12);
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    EXPECT_LT(max_diff(qsim::realize(f2, ErrorOperator{0, {1}, {0}}), x), 1e-12);
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    EXPECT_LT(max_diff(qsim::realize(f2, ErrorOperator{0, {0}, {1}}), z), 1e-12);
    // x_1 is the most significant digit: X on slot 1 maps |00⟩ to |10⟩ = index 2
    const auto m = qsim::realize(f2, ErrorOperator{0, {1, 0}, {0, 0}});
    EXPECT_NEAR(std::abs(m(2, 0)), 1.0, 1e-12);
}

TEST(Realize, HomomorphismAndUnitary) {
    std::mt19937_64 rng(21);
    for (const auto& f : {Field::prime(2), Field::prime(3), Field::standard(2, 2), Field::prime(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = random_op(f, 2, rng), h = random_op(f, 2, rng);
            const auto rg = qsim::realize(f, g), rh = qsim::realize(f, h);
            EXPECT_TRUE(qsim::is_unitary_monomial(rg));
            EXPECT_LT(max_diff(qsim::realize(f, stabilizer::op_mul(f, g, h)), rg * rh), 1e-9);
            EXPECT_LT(max_diff(qsim::realize_monomial(f, g).apply(rh), rg * rh), 1e-12);
        }
    }
}

TEST(Realize, DimensionCap) {
    try {
        qsim::realize(Field::prime(2), stabilizer::identity(11));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionCap);
    }
    EXPECT_NO_THROW(qsim::realize_monomial(Field::prime(2), stabilizer::identity(10)));
}

TEST(NiceBasis, Rank) {
    EXPECT_EQ(qsim::nice_basis_rank(Field::prime(2)), 4);
    EXPECT_EQ(qsim::nice_basis_rank(Field::prime(3)), 9);
    EXPECT_EQ(qsim::nice_basis_rank(Field::standard(2, 2)), 16);
    EXPECT_THROW(qsim::nice_basis_rank(Field::prime(17)), Error);
}

TEST(FixedSpace, Examples) {
    for (const auto& f : {Field::prime(2), Field::prime(3)}) {
        const auto s = StabilizerGroup::from_code(AdditiveCode::zero(Ambient::make(f, 1), 4));
        EXPECT_EQ(qsim::fixed_space(s).cols(), static_cast<Eigen::Index>(f.size() * f.size()));
    }
    const auto a = Ambient::make(Field::prime(2), 1);
    const auto s = StabilizerGroup::from_code(AdditiveCode::make(a, 4, Linearity::prime, {{1, 1, 0, 0}}));
    EXPECT_EQ(qsim::fixed_space(s).cols(), 2);
    EXPECT_EQ(qsim::fixed_space(worked_example()).cols(), 2);
}

TEST(FixedSpace, IsStabilizedAndDimensionMatches) {
    std::mt19937_64 rng(22);
    for (const auto& f : {Field::prime(2), Field::prime(3), Field::standard(2, 2)}) {
        const std::size_t n = f.size() == 2 ? 3 : 2;
        for (int trial = 0; trial < 15; ++trial) {
            const auto s = StabilizerGroup::from_code(gen::random_self_orthogonal(f, n, 1 + trial % 3, rng));
            const Matrix q = qsim::fixed_space(s);
            const auto k = stabilizer::params(Poset::antichain(static_cast<int>(n)), s).logpK;
            std::size_t expected = 1;
            for (int i = 0; i < k; ++i) expected *= f.characteristic();
            EXPECT_EQ(static_cast<std::size_t>(q.cols()), expected);
            EXPECT_LT(max_diff(q.adjoint() * q, Matrix::Identity(q.cols(), q.cols())), 1e-9);
            for (std::size_t j = 0; j < s.generators().size(); ++j) {
                const auto d = qsim::detects(f, q, s.generators()[j]);
                EXPECT_TRUE(d.detected);
                const auto lambda = std::pow(qsim::Complex(0.0, 1.0), s.twist()[j]);
                EXPECT_LT(std::abs(d.lambda - lambda), 1e-9);
            }
        }
    }
}

TEST(Detects, Examples) {
    const auto f3 = Field::prime(3);
    const auto a = Ambient::make(f3, 1);
    const auto s = StabilizerGroup::from_code(AdditiveCode::make(a, 4, Linearity::prime, {{1, 2, 0, 0}}));
    const Matrix q = qsim::fixed_space(s);
    const auto g = s.generators()[0];
    const auto dg = qsim::detects(f3, q, g);
    EXPECT_TRUE(dg.detected);
    EXPECT_LT(std::abs(dg.lambda - qsim::Complex(1.0, 0.0)), 1e-9);

    const auto dx = qsim::detects(f3, q, stabilizer::scalar(2, 1));
    EXPECT_TRUE(dx.detected);
    const double angle = 2.0 * 3.14159265358979323846 / 3.0;
    EXPECT_LT(std::abs(dx.lambda - qsim::Complex(std::cos(angle), std::sin(angle))), 1e-9);

    // X(1,1) lies in C^⊥s \ C
    const auto dn = qsim::detects(f3, q, ErrorOperator{0, {1, 1}, {0, 0}});
    EXPECT_FALSE(dn.detected);
    const auto dense = qsim::detects(q, qsim::realize(f3, ErrorOperator{0, {1, 1}, {0, 0}}));
    EXPECT_FALSE(dense.detected);
}

TEST(Detects, AgreesWithAlgebraicCriterion) {
    std::mt19937_64 rng(23);
    for (const auto& f : {Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = StabilizerGroup::from_code(gen::random_self_orthogonal(f, 2, 1 + trial % 2, rng));
            const auto d = symplectic::dual(s.code(), symplectic::Form::symp);
            const Matrix q = qsim::fixed_space(s);
            for (int i = 0; i < 40; ++i) {
                const auto g = random_op(f, 2, rng);
                EXPECT_EQ(qsim::detects(f, q, g).detected, stabilizer::algebraically_detectable(s, d, g));
            }
        }
    }
}

TEST(MinUndetected, Examples) {
    for (const auto& f : {Field::prime(2), Field::prime(3)}) {
        const auto s = StabilizerGroup::from_code(AdditiveCode::zero(Ambient::make(f, 1), 4));
        EXPECT_EQ(qsim::min_undetected_weight(Poset::chain(2), s), 1);
    }
    const auto s = worked_example();
    EXPECT_EQ(qsim::min_undetected_weight(cover_13(), s), 2);
    EXPECT_EQ(qsim::min_undetected_weight(Poset::antichain(3), s), 1);
    const auto sim = qsim::simulate(cover_13(), s);
    EXPECT_EQ(sim.dimQ, 2u);
    EXPECT_EQ(sim.expected_dim, 2u);
    EXPECT_TRUE(sim.agree);
}

TEST(MinUndetected, ImpureChain) {
    const auto a = Ambient::make(Field::prime(2), 1);
    const auto s = StabilizerGroup::from_code(AdditiveCode::make(a, 4, Linearity::prime, {{1, 0, 0, 0}}));
    const auto sim = qsim::simulate(Poset::chain(2), s);
    EXPECT_EQ(sim.dimQ, 2u);
    EXPECT_EQ(sim.min_undetected, 2);
    EXPECT_TRUE(sim.agree);
}

TEST(MinUndetected, KOne) {
    const auto a = Ambient::make(Field::prime(2), 1);
    const auto s = StabilizerGroup::from_code(AdditiveCode::make(a, 2, Linearity::prime, {{1, 0}}));
    EXPECT_FALSE(qsim::min_undetected_weight(Poset::antichain(1), s).has_value());
    EXPECT_TRUE(qsim::simulate(Poset::antichain(1), s).agree);
}

TEST(MinUndetected, AgreesWithParams) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        const auto s = StabilizerGroup::from_code(gen::random_self_orthogonal(Field::prime(2), n, trial % (n + 1), rng));
        const auto q = qsim::fixed_space(s);
        for (int pi = 0; pi < 3; ++pi) {
            const auto p = poset::random_poset(n, rng);
            const auto r = stabilizer::params(p, s);
            const auto w = qsim::min_undetected_weight(p, s, q);
            if (r.k_above_one()) {
                EXPECT_EQ(w, r.dP);
            } else {
                EXPECT_FALSE(w.has_value());
            }
        }
    }
}

TEST(MinUndetected, ScanCap) {
    const auto s = StabilizerGroup::from_code(AdditiveCode::zero(Ambient::make(Field::prime(2), 1), 18));
    try {
        qsim::min_undetected_weight(Poset::antichain(9), s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionCap);
    }
}
