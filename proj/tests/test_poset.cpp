#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "posetq/error.hpp"
#include "posetq/poset.hpp"

using posetq::Error;
using posetq::ErrorKind;
using posetq::poset::Ideal;
using posetq::poset::Poset;
using posetq::poset::Subset;

namespace {

const std::vector<std::pair<int, int>> kFigure1 = {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5},
                                                    {4, 6}, {4, 7}, {5, 7}, {6, 8}, {7, 8}};

Subset bits(std::initializer_list<int> labels) {
    Subset s = 0;
    for (int l : labels) s |= Subset{1} << (l - 1);
    return s;
}

std::vector<Subset> as_bits(const std::vector<Ideal>& v) {
    std::vector<Subset> out;
    for (const auto& i : v) out.push_back(i.bits());
    return out;
}

}  // namespace

TEST(FromCovers, Antichain) {
    const auto p = Poset::from_covers(3, {});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(p.leq(i, j), i == j);
}

TEST(FromCovers, Figure1MatchesReachability) {
    const auto p = Poset::from_covers(8, kFigure1);
    const oracle::RelPoset o(8, kFigure1);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) EXPECT_EQ(p.leq(i, j), o.leq(i, j)) << i << " " << j;
    EXPECT_EQ(p.covers(), kFigure1);
}

TEST(FromCovers, Rejections) {
    const std::vector<std::pair<int, int>> cyc = {{1, 2}, {2, 1}};
    try {
        Poset::from_covers(2, cyc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CycleDetected);
    }
    const std::vector<std::pair<int, int>> longcyc = {{1, 2}, {2, 3}, {3, 1}};
    EXPECT_THROW(Poset::from_covers(3, longcyc), Error);
    const std::vector<std::pair<int, int>> out_of_range = {{1, 4}};
    try {
        Poset::from_covers(3, out_of_range);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
    }
}

TEST(IdealGenerated, Examples) {
    const auto fig = Poset::from_covers(8, kFigure1);
    EXPECT_EQ(fig.ideal_generated(bits({5, 6})).members(), (std::vector<int>{1, 2, 3, 4, 5, 6}));
    const auto anti = Poset::antichain(5);
    EXPECT_EQ(anti.ideal_generated(bits({2, 4})).bits(), bits({2, 4}));
    const auto chain = Poset::chain(6);
    EXPECT_EQ(chain.ideal_generated(bits({4})).members(), (std::vector<int>{1, 2, 3, 4}));
}

TEST(IdealGenerated, MinimalAndMonotone) {
    const oracle::RelPoset o(8, kFigure1);
    const auto p = Poset::from_covers(8, kFigure1);
    const auto ideals = o.ideals();
    for (Subset a = 0; a < 256; ++a) {
        const Subset g = p.ideal_generated(a).bits();
        Subset smallest = 0xff;
        for (auto i : ideals)
            if ((a & ~i) == 0 && oracle::count(i) < oracle::count(smallest)) smallest = i;
        ASSERT_EQ(g, smallest);
        ASSERT_EQ(g, o.generated(a));
        for (Subset b = a; b < 256; b = (b + 1) | a) {
            ASSERT_EQ(g & ~p.ideal_generated(b).bits(), 0u);
            if (b == 255) break;
        }
    }
}

TEST(IsIdeal, Examples) {
    const auto p = Poset::from_covers(8, kFigure1);
    EXPECT_TRUE(p.is_ideal(bits({1, 2, 3})));
    EXPECT_FALSE(p.is_ideal(bits({5})));
    EXPECT_TRUE(p.is_ideal(0));
}

TEST(IdealsOfSize, Examples) {
    const auto anti = Poset::antichain(3);
    EXPECT_EQ(as_bits(posetq::poset::ideals_of_size(anti, 2)),
              (std::vector<Subset>{bits({1, 2}), bits({1, 3}), bits({2, 3})}));
    const auto chain = Poset::chain(7);
    for (int k = 0; k <= 7; ++k) {
        const auto v = posetq::poset::ideals_of_size(chain, k);
        ASSERT_EQ(v.size(), 1u);
        EXPECT_EQ(v.front().bits(), (Subset{1} << k) - 1);
    }
    const auto fig = Poset::from_covers(8, kFigure1);
    EXPECT_EQ(as_bits(posetq::poset::ideals_of_size(fig, 1)), (std::vector<Subset>{bits({1})}));
}

TEST(IdealsOfSize, MatchesSubsetFilter) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 10;
        const auto p = posetq::poset::random_poset(n, rng);
        const auto covers = p.covers();
        const oracle::RelPoset o(n, covers);
        const auto expected = o.ideals();
        std::vector<Subset> got;
        for (int k = 0; k <= n; ++k) {
            const auto part = as_bits(posetq::poset::ideals_of_size(p, k));
            EXPECT_TRUE(std::is_sorted(part.begin(), part.end()));
            for (auto s : part) EXPECT_EQ(oracle::count(s), k);
            got.insert(got.end(), part.begin(), part.end());
        }
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected) << "n=" << n;
    }
}

TEST(IdealsOfSize, AntichainAndChainCounts) {
    for (int n = 0; n <= 10; ++n) {
        EXPECT_EQ(posetq::poset::all_ideals(Poset::antichain(n)).size(), std::size_t{1} << n);
        EXPECT_EQ(posetq::poset::all_ideals(Poset::chain(n)).size(), static_cast<std::size_t>(n + 1));
    }
}

TEST(IdealEnumerator, FullWidth) {
    const auto p = Poset::chain(64);
    const auto v = posetq::poset::ideals_of_size(p, 64);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v.front().bits(), ~Subset{0});
}

TEST(AllPosets, LabeledCounts) {
    const std::vector<std::size_t> expected = {1, 1, 3, 19, 219, 4231};
    for (int n = 0; n <= 5; ++n) {
        const auto all = posetq::poset::all_posets(n);
        EXPECT_EQ(all.size(), expected[static_cast<std::size_t>(n)]);
        std::set<std::vector<std::pair<int, int>>> distinct;
        for (const auto& p : all) distinct.insert(p.covers());
        EXPECT_EQ(distinct.size(), all.size());
        EXPECT_EQ(all.front(), Poset::antichain(n));
    }
}

TEST(RandomPoset, ValidOrder) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 12;
        const auto p = posetq::poset::random_poset(n, rng);
        for (int i = 0; i < n; ++i) {
            EXPECT_TRUE(p.leq(i, i));
            for (int j = 0; j < n; ++j) {
                if (i != j) EXPECT_FALSE(p.leq(i, j) && p.leq(j, i));
                for (int k = 0; k < n; ++k)
                    if (p.leq(i, j) && p.leq(j, k)) EXPECT_TRUE(p.leq(i, k));
            }
        }
    }
}
