#pragma once

// Brute-force reference implementations used only by the tests. They share no code with the
// library beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint32_t>;

/// GF(p)[x]/(poly) by schoolbook polynomial arithmetic on coefficient vectors.
struct PolyField {
    std::uint32_t p;
    std::vector<std::uint32_t> poly;  // monic, ascending

    int m() const { return static_cast<int>(poly.size()) - 1; }
    std::uint32_t size() const {
        std::uint32_t s = 1;
        for (int i = 0; i < m(); ++i) s *= p;
        return s;
    }
    Vec digits(std::uint32_t x) const {
        Vec c(static_cast<std::size_t>(m()));
        for (auto& d : c) {
            d = x % p;
            x /= p;
        }
        return c;
    }
    std::uint32_t pack(const Vec& c) const {
        std::uint32_t x = 0;
        for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
        return x;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto x = digits(a), y = digits(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
        return pack(x);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        const auto x = digits(a), y = digits(b);
        std::vector<std::uint64_t> prod(x.size() + y.size(), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        // reduce by the monic modulus from the top
        for (std::size_t d = prod.size(); d-- > static_cast<std::size_t>(m());) {
            const std::uint64_t c = prod[d];
            if (c == 0) continue;
            for (int k = 0; k <= m(); ++k) {
                const std::size_t idx = d - static_cast<std::size_t>(m()) + static_cast<std::size_t>(k);
                prod[idx] = (prod[idx] + (p - c) * poly[static_cast<std::size_t>(k)]) % p;
            }
        }
        Vec out(static_cast<std::size_t>(m()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(out);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
};

/// Order relation from covers by depth-first reachability (0-based, covers 1-based).
struct RelPoset {
    int n;
    std::vector<std::vector<bool>> le;  // le[i][j]: i <= j

    RelPoset(int size, const std::vector<std::pair<int, int>>& covers) : n(size), le(size, std::vector<bool>(size)) {
        std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
        for (auto [i, j] : covers) up[static_cast<std::size_t>(i - 1)].push_back(j - 1);
        for (int s = 0; s < n; ++s) {
            std::vector<int> stack{s};
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                if (le[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)]) continue;
                le[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)] = true;
                for (int y : up[static_cast<std::size_t>(x)]) stack.push_back(y);
            }
        }
    }
    bool leq(int i, int j) const { return le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool is_ideal(std::uint64_t a) const {
        for (int j = 0; j < n; ++j) {
            if (!((a >> j) & 1u)) continue;
            for (int i = 0; i < n; ++i)
                if (leq(i, j) && !((a >> i) & 1u)) return false;
        }
        return true;
    }
    std::uint64_t generated(std::uint64_t a) const {
        std::uint64_t out = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (((a >> j) & 1u) && leq(i, j)) out |= std::uint64_t{1} << i;
        return out;
    }
    std::vector<std::uint64_t> ideals() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
            if (is_ideal(a)) out.push_back(a);
        return out;
    }
};

/// Popcount without <bit>.
inline int count(std::uint64_t a) {
    int c = 0;
    for (; a != 0; a >>= 1) c += static_cast<int>(a & 1u);
    return c;
}

/// Closure of {0} under adding scalar multiples of the generators.
template <class Add, class Mul>
std::set<Vec> span_closure(std::size_t n, const std::vector<Vec>& gens, const std::vector<std::uint32_t>& scalars,
                           Add add, Mul mul) {
    std::set<Vec> span{Vec(n, 0)};
    for (const auto& g : gens) {
        std::set<Vec> next;
        for (const auto& v : span) {
            for (auto s : scalars) {
                Vec w = v;
                for (std::size_t i = 0; i < n; ++i) w[i] = add(w[i], mul(s, g[i]));
                next.insert(std::move(w));
            }
        }
        span = std::move(next);
    }
    return span;
}

/// Every vector of alphabet^n, in odometer order.
inline std::vector<Vec> all_vectors(std::uint32_t alphabet, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= alphabet;
    std::vector<Vec> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec v(n);
        std::uint64_t x = idx;
        for (std::size_t i = n; i-- > 0;) {
            v[i] = static_cast<std::uint32_t>(x % alphabet);
            x /= alphabet;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace oracle
