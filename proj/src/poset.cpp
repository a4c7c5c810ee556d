#include "posetq/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "posetq/error.hpp"

namespace posetq::poset {

namespace {

void check_size(int n) {
    if (n < 0 || n > kMaxElements) {
        throw Error(ErrorKind::IndexOutOfRange, "poset size " + std::to_string(n) + " outside [0, 64]");
    }
}

// Transitive closure of strict down-sets (Warshall on bitsets); reflexive bits are added after.
std::vector<Subset> close(int n, std::vector<Subset> below) {
    for (int k = 0; k < n; ++k) {
        const Subset bk = below[static_cast<std::size_t>(k)];
        for (int j = 0; j < n; ++j) {
            if ((below[static_cast<std::size_t>(j)] >> k) & 1u) below[static_cast<std::size_t>(j)] |= bk;
        }
    }
    return below;
}

bool has_cycle(int n, const std::vector<Subset>& closed_below) {
    for (int j = 0; j < n; ++j)
        if ((closed_below[static_cast<std::size_t>(j)] >> j) & 1u) return true;
    return false;
}

}  // namespace

std::vector<int> Ideal::members() const {
    std::vector<int> out;
    for (int i = 0; i < kMaxElements; ++i)
        if (contains(i)) out.push_back(i + 1);
    return out;
}

Poset Poset::from_covers(int n, std::span<const std::pair<int, int>> covers) {
    check_size(n);
    std::vector<Subset> below(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : covers) {
        if (i < 1 || i > n || j < 1 || j > n) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "cover (" + std::to_string(i) + "," + std::to_string(j) + ") outside [1, " + std::to_string(n) + "]");
        }
        if (i == j) throw Error(ErrorKind::CycleDetected, "self cover on " + std::to_string(i));
        below[static_cast<std::size_t>(j - 1)] |= Subset{1} << (i - 1);
    }
    below = close(n, std::move(below));
    if (has_cycle(n, below)) throw Error(ErrorKind::CycleDetected, "cover relations contain a cycle");
    for (int j = 0; j < n; ++j) below[static_cast<std::size_t>(j)] |= Subset{1} << j;
    return Poset(n, std::move(below));
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> c;
    for (int i = 1; i < n; ++i) c.emplace_back(i, i + 1);
    return from_covers(n, c);
}

Poset Poset::from_strict_below(int n, std::vector<Subset> below) {
    check_size(n);
    if (below.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::InvalidArgument, "relation size mismatch");
    const auto closed = close(n, below);
    if (closed != below) throw Error(ErrorKind::InvalidArgument, "relation is not transitive");
    if (has_cycle(n, closed)) throw Error(ErrorKind::CycleDetected, "relation is not antisymmetric");
    for (int j = 0; j < n; ++j) below[static_cast<std::size_t>(j)] |= Subset{1} << j;
    return Poset(n, std::move(below));
}

Ideal Poset::ideal_generated(Subset a) const {
    Subset out = 0;
    while (a != 0) {
        const int i = std::countr_zero(a);
        a &= a - 1;
        if (i >= n_) throw Error(ErrorKind::IndexOutOfRange, "element outside the poset");
        out |= down_[static_cast<std::size_t>(i)];
    }
    return Ideal(out);
}

bool Poset::is_ideal(Subset a) const {
    if ((a & ~all()) != 0) return false;
    Subset rest = a;
    while (rest != 0) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        if ((down_[static_cast<std::size_t>(i)] & ~a) != 0) return false;
    }
    return true;
}

Ideal Poset::as_ideal(Subset a) const {
    if (!is_ideal(a)) throw Error(ErrorKind::InvalidArgument, "subset is not a lower order ideal");
    return Ideal(a);
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < n_; ++j) {
        const Subset strict = down_[static_cast<std::size_t>(j)] & ~(Subset{1} << j);
        for (int i = 0; i < n_; ++i) {
            if (!((strict >> i) & 1u)) continue;
            // i is covered by j unless some k strictly between them exists
            const Subset between = strict & ~down_[static_cast<std::size_t>(i)];
            bool cover = true;
            for (Subset rest = between; rest != 0; rest &= rest - 1) {
                const int k = std::countr_zero(rest);
                if (leq(i, k)) {
                    cover = false;
                    break;
                }
            }
            if (cover) out.emplace_back(i + 1, j + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IdealEnumerator::IdealEnumerator(const Poset& p, int k) : poset_(&p), k_(k) {
    if (k < 0 || k > p.size()) throw Error(ErrorKind::IndexOutOfRange, "ideal size outside [0, n]");
    limit_ = static_cast<unsigned __int128>(1) << p.size();
    cur_ = (static_cast<unsigned __int128>(1) << k) - 1;
}

std::optional<Ideal> IdealEnumerator::next() {
    while (!done_) {
        const unsigned __int128 x = cur_;
        if (x >= limit_) {
            done_ = true;
            break;
        }
        // Gosper: next integer with the same popcount
        if (x == 0) {
            done_ = true;
        } else {
            const unsigned __int128 c = x & (~x + 1);
            const unsigned __int128 r = x + c;
            cur_ = (((r ^ x) >> 2) / c) | r;
        }
        const auto bits = static_cast<Subset>(x);
        if (poset_->is_ideal(bits)) return poset_->as_ideal(bits);
    }
    return std::nullopt;
}

std::vector<Ideal> ideals_of_size(const Poset& p, int k) {
    std::vector<Ideal> out;
    IdealEnumerator e(p, k);
    while (auto i = e.next()) out.push_back(*i);
    return out;
}

std::vector<Ideal> all_ideals(const Poset& p) {
    std::vector<Ideal> out;
    for (int k = 0; k <= p.size(); ++k) {
        auto part = ideals_of_size(p, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Poset> all_posets(int n) {
    if (n < 0 || n > 6) throw Error(ErrorKind::InvalidArgument, "exhaustive poset enumeration supports n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;

    std::vector<Poset> out;
    std::vector<Subset> below(static_cast<std::size_t>(n));
    for (std::uint64_t code = 0; code < total; ++code) {
        std::fill(below.begin(), below.end(), 0);
        std::uint64_t c = code;
        for (std::size_t k = pairs.size(); k-- > 0;) {
            const auto [i, j] = pairs[k];
            switch (c % 3) {
                case 1: below[static_cast<std::size_t>(j)] |= Subset{1} << i; break;
                case 2: below[static_cast<std::size_t>(i)] |= Subset{1} << j; break;
                default: break;
            }
            c /= 3;
        }
        if (close(n, below) != below) continue;
        out.push_back(Poset::from_strict_below(n, below));
    }
    return out;
}

Poset random_poset(int n, std::mt19937_64& rng) {
    check_size(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    std::vector<Subset> below(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (rng() & 1u) below[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])] |= Subset{1} << order[static_cast<std::size_t>(a)];
        }
    }
    return Poset::from_strict_below(n, close(n, below));
}

}  // namespace posetq::poset
