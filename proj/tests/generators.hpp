#pragma once

// Random instance generators shared by the unit tests and the acceptance suite.

#include <random>
#include <vector>

#include "posetq/code.hpp"
#include "posetq/symplectic.hpp"

namespace gen {

inline posetq::gf::Vec random_vec(const posetq::gf::Field& f, std::size_t n, std::mt19937_64& rng) {
    posetq::gf::Vec v(n);
    for (auto& x : v) x = static_cast<posetq::gf::Elem>(rng() % f.size());
    return v;
}

/// Random code with up to max_gens random generators over the given linearity.
inline posetq::code::AdditiveCode random_code(const posetq::code::Ambient& a, std::size_t n,
                                              posetq::code::Linearity lin, int max_gens, std::mt19937_64& rng) {
    std::vector<posetq::gf::Vec> gens;
    const int count = static_cast<int>(rng() % static_cast<std::uint64_t>(max_gens + 1));
    for (int i = 0; i < count; ++i) gens.push_back(random_vec(a.field(), n, rng));
    return posetq::code::AdditiveCode::make(a, n, lin, std::move(gens));
}

/// Random symplectic self-orthogonal code in GF(q)^{2n}: random vectors are kept when they pair to
/// zero with every generator chosen so far.
inline posetq::code::AdditiveCode random_self_orthogonal(const posetq::gf::Field& fq, std::size_t n, int target_gens,
                                                         std::mt19937_64& rng) {
    const auto a = posetq::code::Ambient::make(fq, 1);
    std::vector<posetq::gf::Vec> gens;
    for (int attempt = 0; attempt < 200 && static_cast<int>(gens.size()) < target_gens; ++attempt) {
        auto v = random_vec(fq, 2 * n, rng);
        bool ok = true;
        for (const auto& g : gens) ok = ok && posetq::symplectic::form_symp(fq, g, v) == 0;
        if (!ok) continue;
        gens.push_back(std::move(v));
    }
    return posetq::code::AdditiveCode::make(a, 2 * n, posetq::code::Linearity::prime, std::move(gens));
}

}  // namespace gen
