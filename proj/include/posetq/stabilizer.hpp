#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetq/code.hpp"
#include "posetq/poset.hpp"
#include "posetq/symplectic.hpp"

namespace posetq::stabilizer {

/// ξ^c X(a) Z(b) with ξ = e^{2πi/p}; c is taken mod p.
struct ErrorOperator {
    std::uint32_t c = 0;
    gf::Vec a;
    gf::Vec b;

    std::size_t length() const { return a.size(); }
    friend bool operator==(const ErrorOperator&, const ErrorOperator&) = default;
};

ErrorOperator identity(std::size_t n);
ErrorOperator scalar(std::size_t n, std::uint32_t c);
ErrorOperator from_symp(const symplectic::SympVector& v, std::uint32_t c = 0);

/// Product g·h = ξ^{c + c' + tr(g.b · h.a)} X(a + a') Z(b + b').
ErrorOperator op_mul(const gf::Field& fq, const ErrorOperator& g, const ErrorOperator& h);

/// Forgets the phase.
symplectic::SympVector phi(const ErrorOperator& g);

int op_weight_P(const poset::Poset& p, const ErrorOperator& g);

struct Commutation {
    bool commute = true;
    std::uint32_t phase = 0;  // g·h = ξ^phase h·g
};

Commutation commute_check(const gf::Field& fq, const ErrorOperator& g, const ErrorOperator& h);

/// Abelian subgroup S of the error group with φ(S) = C, for a symplectic self-orthogonal C in GF(q)^{2n}.
///
/// Each GF(p)-basis vector of C lifts to X(a)Z(b) with zero phase. In characteristic 2 a lift with
/// tr(a·b) = 1 squares to −I, so its stabilized eigenvalue is i instead of 1; twist() records this.
class StabilizerGroup {
public:
    static StabilizerGroup from_code(const code::AdditiveCode& c);

    const code::AdditiveCode& code() const { return code_; }
    const gf::Field& field() const { return code_.ambient().field(); }
    std::size_t n() const { return code_.length() / 2; }
    const std::vector<ErrorOperator>& generators() const { return gens_; }
    /// For generator j, the fixed space is the i^{twist(j)}-eigenspace (twist is 0 unless p = 2).
    const std::vector<int>& twist() const { return twist_; }
    /// log_p |C|
    int log_p_order() const { return code_.log_p_size(); }

private:
    explicit StabilizerGroup(code::AdditiveCode c) : code_(std::move(c)) {}
    code::AdditiveCode code_;
    std::vector<ErrorOperator> gens_;
    std::vector<int> twist_;
};

/// True iff g is detected: φ(g) ∈ C, or φ(g) ∉ C^⊥s.
bool algebraically_detectable(const StabilizerGroup& s, const code::AdditiveCode& dual_s, const ErrorOperator& g);

struct StabCodeParams {
    std::size_t n = 0;
    int m = 1;         // [GF(q) : GF(p)]
    std::uint32_t p = 2;
    int logpK = 0;     // K = p^logpK
    int dP = 0;
    bool pure = false;
    bool k1_convention = false;  // K = 1: dP is the minimum nonzero weight of C^⊥s

    code::Rational log_q_K() const { return code::Rational::of(logpK, m); }
    bool k_above_one() const { return logpK > 0; }
};

/// [[n, K, d_P]]_q of the stabilizer code together with P-pureness.
StabCodeParams params(const poset::Poset& p, const StabilizerGroup& s, std::uint64_t cap = code::kDefaultCap);

/// log_q K ≤ n − 2 d_P + 2, compared as m·log_q K = logpK ≤ m (n − 2 d_P + 2). Throws KNotAboveOne.
bool singleton_q_check(const StabCodeParams& r);
bool is_mds_stabilizer(const StabCodeParams& r);

struct Theorem2Report {
    int dP_symplectic = 0;  // over C^⊥s \ C
    int dP_alternating = 0; // over D^⊥a \ D with D = ψ^{-1}(C)
    bool holds = false;
};

/// Recomputes d_P in the GF(q^2)^n picture and compares with the symplectic computation.
Theorem2Report theorem2_verify(const poset::Poset& p, const StabilizerGroup& s, std::uint64_t cap = code::kDefaultCap);

struct Theorem3Report {
    bool stab_mds = false;
    bool dual_mds = false;           // D^⊥a is an MDS P-code
    bool part1_holds = false;        // stab_mds == dual_mds
    bool part2_applicable = false;   // stab_mds and n − d_P + 2 ≤ d_P(D)
    bool part2_holds = true;         // then D is an MDS P-code
    int dP_of_D = -1;                // -1 when D = {0}

    bool holds() const { return part1_holds && part2_holds; }
};

/// Requires a P-pure code with K > 1 (NotPure, KNotAboveOne).
Theorem3Report theorem3_verify(const poset::Poset& p, const StabilizerGroup& s, std::uint64_t cap = code::kDefaultCap);

struct Theorem5Report {
    bool stab_mds = false;
    bool log_q_K_integral = false;
    bool ideal_size_integral = false;  // log_{q^2} |D^⊥a| is an integer
    int ideal_size = -1;               // n − log_{q^2} |D^⊥a|
    std::size_t ideals_checked = 0;
    bool all_perfect = false;
    std::optional<poset::Ideal> witness;  // first ideal that is not perfect

    bool perfect_side() const { return log_q_K_integral && ideal_size_integral && all_perfect; }
    bool holds() const { return stab_mds == perfect_side(); }
};

/// Requires a P-pure code with K > 1 (NotPure, KNotAboveOne).
Theorem5Report theorem5_verify(const poset::Poset& p, const StabilizerGroup& s, std::uint64_t cap = code::kDefaultCap);

struct ConstructResult {
    poset::Poset poset;
    StabilizerGroup stab;
    StabCodeParams params;
    int k = 0;  // GF(q^2)-dimension of E
    std::uint64_t candidates_tried = 0;
    bool exhaustive = false;
};

constexpr std::uint64_t kDefaultSearchLimit = 20000;

/// Searches posets on [n] for one that makes ψ(E) the stabilizer of a P-pure MDS code
/// [[n, n − 2k, k + 1]]_q, where E ⊆ E^⊥a is GF(q^2)-linear of dimension k.
///
/// Every labeled poset is tried for n ≤ 5 (in all_posets order); beyond that, search_limit random
/// posets drawn from seed. The first success in candidate order is returned.
ConstructResult construct_mds(const code::AdditiveCode& e, std::uint64_t search_limit = kDefaultSearchLimit,
                              std::uint64_t seed = 0, std::uint64_t cap = code::kDefaultCap);

}  // namespace posetq::stabilizer
