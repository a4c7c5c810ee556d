#include "posetq/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "posetq/error.hpp"

namespace posetq::qsim {

namespace {

Complex root_of_unity(std::uint32_t p, std::uint32_t k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % p) / static_cast<double>(p);
    return {std::cos(angle), std::sin(angle)};
}

gf::Vec decode(const gf::Field& fq, std::size_t index, std::size_t n) {
    gf::Vec x(n);
    for (std::size_t i = n; i-- > 0;) {
        x[i] = static_cast<gf::Elem>(index % fq.size());
        index /= fq.size();
    }
    return x;
}

Detection fit(const Matrix& q_basis, const Matrix& gq) {
    Detection out;
    const Eigen::Index k = q_basis.cols();
    if (k == 0) {
        out.detected = true;
        return out;
    }
    const Matrix m = q_basis.adjoint() * gq;
    out.lambda = m.trace() / static_cast<double>(k);
    out.residual = (m - out.lambda * Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
    out.detected = out.residual < kDetectTol;
    return out;
}

}  // namespace

std::size_t dimension(const gf::Field& fq, std::size_t n, std::size_t limit) {
    std::size_t d = 1;
    for (std::size_t i = 0; i < n; ++i) {
        d *= fq.size();
        if (d > limit) {
            throw Error(ErrorKind::DimensionCap, "state space of dimension " + std::to_string(fq.size()) + "^" +
                                                     std::to_string(n) + " exceeds " + std::to_string(limit));
        }
    }
    return d;
}

std::size_t basis_index(const gf::Field& fq, const gf::Vec& x) {
    std::size_t idx = 0;
    for (auto xi : x) idx = idx * fq.size() + xi;
    return idx;
}

Matrix Monomial::dense() const {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(target.size()), static_cast<Eigen::Index>(target.size()));
    for (std::size_t x = 0; x < target.size(); ++x)
        m(static_cast<Eigen::Index>(target[x]), static_cast<Eigen::Index>(x)) = value[x];
    return m;
}

Matrix Monomial::apply(const Matrix& m) const {
    Matrix out(m.rows(), m.cols());
    for (std::size_t x = 0; x < target.size(); ++x)
        out.row(static_cast<Eigen::Index>(target[x])) = value[x] * m.row(static_cast<Eigen::Index>(x));
    return out;
}

Monomial realize_monomial(const gf::Field& fq, const stabilizer::ErrorOperator& g) {
    const std::size_t n = g.length();
    const std::size_t dim = dimension(fq, n);
    const std::uint32_t p = fq.characteristic();
    Monomial out{std::vector<std::size_t>(dim), std::vector<Complex>(dim)};
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const auto x = decode(fq, idx, n);
        gf::Elem bx = 0;
        gf::Vec y(n);
        for (std::size_t i = 0; i < n; ++i) {
            bx = fq.add(bx, fq.mul(g.b[i], x[i]));
            y[i] = fq.add(x[i], g.a[i]);
        }
        out.target[idx] = basis_index(fq, y);
        out.value[idx] = root_of_unity(p, g.c + fq.trace(bx));
    }
    return out;
}

Matrix realize(const gf::Field& fq, const stabilizer::ErrorOperator& g) { return realize_monomial(fq, g).dense(); }

bool is_unitary_monomial(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    if ((m.adjoint() * m - id).cwiseAbs().maxCoeff() > tol) return false;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        int row_nonzero = 0, col_nonzero = 0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (std::abs(m(r, c)) > tol) {
                ++row_nonzero;
                if (std::abs(std::abs(m(r, c)) - 1.0) > tol) return false;
            }
            if (std::abs(m(c, r)) > tol) ++col_nonzero;
        }
        if (row_nonzero != 1 || col_nonzero != 1) return false;
    }
    return true;
}

int nice_basis_rank(const gf::Field& fq) {
    const std::uint32_t q = fq.size();
    if (q > 16) throw Error(ErrorKind::DimensionCap, "nice basis check supports q <= 16");
    Matrix flat(static_cast<Eigen::Index>(q) * q, static_cast<Eigen::Index>(q) * q);
    Eigen::Index col = 0;
    for (gf::Elem a = 0; a < q; ++a) {
        for (gf::Elem b = 0; b < q; ++b) {
            const Matrix m = realize(fq, {0, {a}, {b}});
            flat.col(col++) = Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
        }
    }
    Eigen::FullPivLU<Matrix> lu(flat);
    lu.setThreshold(kRankTol);
    return static_cast<int>(lu.rank());
}

Matrix fixed_space(const stabilizer::StabilizerGroup& s) {
    const gf::Field& fq = s.field();
    const auto dim = static_cast<Eigen::Index>(dimension(fq, s.n()));
    const std::uint32_t p = fq.characteristic();
    Matrix proj = Matrix::Identity(dim, dim);
    for (std::size_t j = 0; j < s.generators().size(); ++j) {
        auto g = realize_monomial(fq, s.generators()[j]);
        // the lifted generator acts as i^twist on Q; divide it out so Q is the +1-eigenspace
        const Complex lambda = std::pow(Complex(0.0, 1.0), s.twist()[j]);
        for (auto& v : g.value) v /= lambda;
        Matrix acc = proj;
        Matrix cur = proj;
        for (std::uint32_t k = 1; k < p; ++k) {
            cur = g.apply(cur);
            acc += cur;
        }
        proj = acc / static_cast<double>(p);
    }

    std::vector<Eigen::VectorXcd> basis;
    for (Eigen::Index c = 0; c < dim; ++c) {
        Eigen::VectorXcd v = proj.col(c);
        for (const auto& u : basis) v -= u.dot(v) * u;
        for (const auto& u : basis) v -= u.dot(v) * u;
        const double norm = v.norm();
        if (norm > 1e-6) basis.push_back(v / norm);
    }
    Matrix out(dim, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = basis[i];
    return out;
}

Detection detects(const Matrix& q_basis, const Matrix& g) { return fit(q_basis, g * q_basis); }

Detection detects(const gf::Field& fq, const Matrix& q_basis, const stabilizer::ErrorOperator& g) {
    return fit(q_basis, realize_monomial(fq, g).apply(q_basis));
}

std::optional<int> min_undetected_weight(const poset::Poset& p, const stabilizer::StabilizerGroup& s,
                                         const Matrix& q_basis) {
    const gf::Field& fq = s.field();
    const std::size_t n = s.n();
    const std::size_t dim = dimension(fq, n, kMaxScanDim);
    if (static_cast<std::size_t>(p.size()) != n) throw Error(ErrorKind::LengthMismatch, "poset size differs from n");

    // every X(a)Z(b) modulo phase, by ascending operator weight
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t ai = 0; ai < dim; ++ai) {
        for (std::size_t bi = 0; bi < dim; ++bi) {
            const stabilizer::ErrorOperator g{0, decode(fq, ai, n), decode(fq, bi, n)};
            order.emplace_back(stabilizer::op_weight_P(p, g), ai * dim + bi);
        }
    }
    std::sort(order.begin(), order.end());
    for (const auto& [w, key] : order) {
        if (w == 0) continue;
        const stabilizer::ErrorOperator g{0, decode(fq, key / dim, n), decode(fq, key % dim, n)};
        if (!detects(fq, q_basis, g).detected) return w;
    }
    return std::nullopt;
}

std::optional<int> min_undetected_weight(const poset::Poset& p, const stabilizer::StabilizerGroup& s) {
    dimension(s.field(), s.n(), kMaxScanDim);
    return min_undetected_weight(p, s, fixed_space(s));
}

SimReport simulate(const poset::Poset& p, const stabilizer::StabilizerGroup& s) {
    SimReport r;
    const auto params = stabilizer::params(p, s);
    const Matrix q = fixed_space(s);
    r.dimQ = static_cast<std::size_t>(q.cols());
    std::size_t k = 1;
    for (int i = 0; i < params.logpK; ++i) k *= params.p;
    r.expected_dim = k;
    r.min_undetected = min_undetected_weight(p, s, q);
    r.dP = params.dP;
    const bool distance_ok = params.k_above_one() ? r.min_undetected == params.dP : !r.min_undetected.has_value();
    r.agree = r.dimQ == r.expected_dim && distance_ok;
    return r;
}

}  // namespace posetq::qsim
