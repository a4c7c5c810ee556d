#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace posetq::poset {

/// Subset of [n] as a bitset: bit i is element i+1.
using Subset = std::uint64_t;

constexpr int kMaxElements = 64;

/// A downward-closed subset. Only produced by functions that guarantee closure.
class Ideal {
public:
    Ideal() = default;

    Subset bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool contains(int i) const { return ((bits_ >> i) & 1u) != 0; }  // 0-based
    bool subset_of(const Ideal& o) const { return (bits_ & ~o.bits_) == 0; }
    /// Members as 1-based labels, ascending.
    std::vector<int> members() const;

    friend bool operator==(const Ideal&, const Ideal&) = default;
    friend auto operator<=>(const Ideal&, const Ideal&) = default;

private:
    friend class Poset;
    explicit Ideal(Subset b) : bits_(b) {}
    Subset bits_ = 0;
};

/// Partial order on [n], stored as the down-set of every element.
///
/// Element indices are 0-based everywhere except from_covers() and covers(), which use the
/// 1-based labels of [n].
class Poset {
public:
    static Poset from_covers(int n, std::span<const std::pair<int, int>> covers);
    static Poset antichain(int n);
    static Poset chain(int n);
    /// Validates reflexivity, antisymmetry and transitivity of the given strict down-sets.
    static Poset from_strict_below(int n, std::vector<Subset> below);

    int size() const { return n_; }
    bool leq(int i, int j) const { return ((down_[static_cast<std::size_t>(j)] >> i) & 1u) != 0; }
    Subset down_set(int j) const { return down_[static_cast<std::size_t>(j)]; }
    Subset all() const { return n_ == 64 ? ~Subset{0} : ((Subset{1} << n_) - 1); }

    Ideal ideal_generated(Subset a) const;
    bool is_ideal(Subset a) const;
    /// Wraps a subset already known to be an ideal; throws InvalidArgument otherwise.
    Ideal as_ideal(Subset a) const;
    /// Cover relations as 1-based pairs (i, j) with i covered by j, sorted.
    std::vector<std::pair<int, int>> covers() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    Poset(int n, std::vector<Subset> down) : n_(n), down_(std::move(down)) {}
    int n_ = 0;
    std::vector<Subset> down_;  // down_[j] = { i : i <= j }
};

/// Ideals of a fixed size in ascending order of their bitset value.
class IdealEnumerator {
public:
    IdealEnumerator(const Poset& p, int k);
    std::optional<Ideal> next();

private:
    const Poset* poset_;
    int k_;
    unsigned __int128 cur_;
    unsigned __int128 limit_;
    bool done_ = false;
};

std::vector<Ideal> ideals_of_size(const Poset& p, int k);
std::vector<Ideal> all_ideals(const Poset& p);

/// Every labeled poset on [n] (n <= 6), in a fixed order starting with the antichain.
std::vector<Poset> all_posets(int n);

/// Random labeled poset: random linear order, each compatible pair related with probability 1/2,
/// then transitively closed.
Poset random_poset(int n, std::mt19937_64& rng);

}  // namespace posetq::poset
