#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "nsymm/composition.hpp"

using nsymm::Composition;
using nsymm::compositions_of;

namespace {

// Brute force: every sequence over {1..n} of length <= n, kept when it sums to n.
std::set<std::vector<int>> brute_force_compositions(int n)
{
    std::set<std::vector<int>> out;
    if (n == 0) {
        out.insert(std::vector<int>{});
        return out;
    }
    for (int len = 1; len <= n; ++len) {
        std::vector<int> seq(static_cast<std::size_t>(len), 1);
        while (true) {
            int sum = 0;
            for (int v : seq) sum += v;
            if (sum == n) out.insert(seq);
            int k = 0;
            while (k < len && seq[k] == n) seq[k++] = 1;
            if (k == len) break;
            ++seq[k];
        }
    }
    return out;
}

}  // namespace

TEST(Composition, SmallCases)
{
    EXPECT_EQ(compositions_of(0), std::vector<Composition>{Composition{}});
    EXPECT_EQ(compositions_of(1), std::vector<Composition>{Composition{1}});
    // Term order: weight, then length, then lexicographic.
    std::vector<Composition> three{{3}, {1, 2}, {2, 1}, {1, 1, 1}};
    EXPECT_EQ(compositions_of(3), three);
}

TEST(Composition, MatchesBruteForce)
{
    for (int n = 0; n <= 7; ++n) {
        std::set<std::vector<int>> got;
        for (const auto& c : compositions_of(n)) got.insert(c.vector());
        EXPECT_EQ(got, brute_force_compositions(n)) << "n = " << n;
    }
}

TEST(Composition, CountDistinctWeight)
{
    for (int n = 1; n <= 12; ++n) {
        auto cs = compositions_of(n);
        EXPECT_EQ(cs.size(), std::size_t{1} << (n - 1));
        EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end()));
        EXPECT_EQ(std::adjacent_find(cs.begin(), cs.end()), cs.end());
        for (const auto& c : cs) ASSERT_EQ(c.weight(), n);
    }
}

TEST(Composition, ContractViolations)
{
    EXPECT_THROW(compositions_of(-1), std::invalid_argument);
    EXPECT_THROW(Composition({1, 0}), std::invalid_argument);
}

TEST(Composition, WordOperations)
{
    Composition a{1, 2};
    Composition b{3};
    EXPECT_EQ(a.concat(b), (Composition{1, 2, 3}));
    EXPECT_EQ(a.concat(b).weight(), 6);
    EXPECT_EQ((Composition{1, 2, 3}).reversed(), (Composition{3, 2, 1}));
    EXPECT_EQ((Composition{1, 2, 3}).prefix(1), Composition{1});
    EXPECT_EQ((Composition{1, 2, 3}).suffix_from(1), (Composition{2, 3}));
    EXPECT_EQ(Composition{}.to_string(), "()");
    EXPECT_EQ(a.to_string(), "(1,2)");
    EXPECT_LT(Composition{}, Composition{1});
    EXPECT_LT(Composition{3}, (Composition{1, 2}));
}
