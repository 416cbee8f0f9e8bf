#include <gtest/gtest.h>

#include <random>

#include "epr/rank_bit_vector.hpp"

namespace epr {
namespace {

std::vector<bool> random_bits(std::mt19937_64& rng, std::size_t n, unsigned density_percent) {
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = rng() % 100 < density_percent;
    return bits;
}

TEST(RankBitVector, Empty) {
    const RankBitVector bv(std::vector<bool>{});
    EXPECT_EQ(bv.size(), 0u);
    EXPECT_EQ(bv.rank1(0), 0u);
}

TEST(RankBitVector, AllZero) {
    const RankBitVector bv(std::vector<bool>(5000, false));
    for (auto s : bv.superblocks()) EXPECT_EQ(s, 0u);
    for (auto b : bv.blocks()) EXPECT_EQ(b, 0u);
    EXPECT_EQ(bv.rank1(5000), 0u);
}

TEST(RankBitVector, AllOne) {
    const RankBitVector bv(std::vector<bool>(1000, true));
    for (std::size_t m = 0; m < bv.superblocks().size(); ++m)
        EXPECT_EQ(bv.superblocks()[m], m * RankBitVector::superblock_bits);
    for (std::uint64_t i = 0; i <= 1000; ++i) EXPECT_EQ(bv.rank1(i), i);
}

TEST(RankBitVector, DirectoryMatchesNaivePrefixCounts) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto bits = random_bits(rng, 10'000, 1 + rng() % 99);
        const RankBitVector bv(bits);
        for (std::size_t m = 0; m < bv.superblocks().size(); ++m) {
            std::uint64_t expected = 0;
            for (std::size_t k = 0; k < std::min<std::size_t>(m * 256, bits.size()); ++k) expected += bits[k];
            ASSERT_EQ(bv.superblocks()[m], expected);
        }
        for (std::size_t p = 0; p < bv.blocks().size(); ++p) {
            std::uint64_t expected = 0;
            for (std::size_t k = (p / 4) * 256; k < std::min<std::size_t>(p * 64, bits.size()); ++k)
                expected += bits[k];
            ASSERT_EQ(bv.blocks()[p], expected);
        }
    }
}

// Step property, monotonicity and agreement with naive counting on 100 vectors up to 2^16 bits.
TEST(RankBitVector, RankProperties) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng() % (1u << 16) + 1;
        const auto bits = random_bits(rng, n, rng() % 101);
        const RankBitVector bv(bits);
        ASSERT_EQ(bv.rank1(0), 0u);
        std::uint64_t naive = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            naive += bits[i - 1];
            ASSERT_EQ(bv.rank1(i), naive);
            ASSERT_EQ(bv.rank1(i) - bv.rank1(i - 1), bits[i - 1] ? 1u : 0u);
            ASSERT_EQ(bv[i - 1], bits[i - 1]);
        }
    }
}

TEST(RankBitVector, WordConstructorClearsTail) {
    const RankBitVector bv(std::vector<std::uint64_t>{~std::uint64_t{0}}, 10);
    EXPECT_EQ(bv.rank1(10), 10u);
    EXPECT_EQ(bv.words()[0], 0x3ffu);
}

}  // namespace
}  // namespace epr
