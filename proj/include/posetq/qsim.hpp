#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "posetq/poset.hpp"
#include "posetq/stabilizer.hpp"

namespace posetq::qsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

constexpr std::size_t kMaxDim = 1024;
constexpr std::size_t kMaxScanDim = 256;
constexpr double kUnitaryTol = 1e-9;
constexpr double kDetectTol = 1e-8;
constexpr double kRankTol = 1e-9;

/// q^n, throwing DimensionCap above limit.
std::size_t dimension(const gf::Field& fq, std::size_t n, std::size_t limit = kMaxDim);

/// Basis index of |x⟩: x_1 is the most significant base-q digit.
std::size_t basis_index(const gf::Field& fq, const gf::Vec& x);

/// Operator with exactly one nonzero entry per column: column x maps to value[x] |target[x]⟩.
struct Monomial {
    std::vector<std::size_t> target;
    std::vector<Complex> value;

    Matrix dense() const;
    /// this · m
    Matrix apply(const Matrix& m) const;
};

Monomial realize_monomial(const gf::Field& fq, const stabilizer::ErrorOperator& g);
/// ξ^c X(a) Z(b) with X(a)|x⟩ = |x + a⟩ and Z(b)|x⟩ = ξ^{tr(b·x)}|x⟩.
Matrix realize(const gf::Field& fq, const stabilizer::ErrorOperator& g);

/// Unitary to kUnitaryTol in max norm, one nonzero per row and column, nonzeros on the unit circle.
bool is_unitary_monomial(const Matrix& m, double tol = kUnitaryTol);

/// Numerical rank of the q^2 operators X(a)Z(b) on GF(q) (q ≤ 16).
int nice_basis_rank(const gf::Field& fq);

/// Orthonormal basis (columns) of the joint stabilized space, from the product of generator projectors.
Matrix fixed_space(const stabilizer::StabilizerGroup& s);

struct Detection {
    bool detected = false;
    Complex lambda{0.0, 0.0};
    double residual = 0.0;
};

/// Fits Q† G Q = λ I; detected iff the max-norm residual is below kDetectTol.
Detection detects(const Matrix& q_basis, const Matrix& g);
Detection detects(const gf::Field& fq, const Matrix& q_basis, const stabilizer::ErrorOperator& g);

/// Least operator P-weight of an undetected error, scanning every X(a)Z(b); nullopt when all are detected.
std::optional<int> min_undetected_weight(const poset::Poset& p, const stabilizer::StabilizerGroup& s,
                                         const Matrix& q_basis);
std::optional<int> min_undetected_weight(const poset::Poset& p, const stabilizer::StabilizerGroup& s);

struct SimReport {
    std::size_t dimQ = 0;
    std::size_t expected_dim = 0;  // q^n / |C|
    std::optional<int> min_undetected;
    int dP = 0;
    bool agree = false;
};

/// Dense cross-check of dim Q and d_P against the symbolic parameters.
SimReport simulate(const poset::Poset& p, const stabilizer::StabilizerGroup& s);

}  // namespace posetq::qsim
