#include <gtest/gtest.h>

#include <random>

#include "epr/alphabet.hpp"
#include "epr/errors.hpp"
#include "epr/fm_index.hpp"
#include "epr/packed_text.hpp"
#include "epr/text.hpp"
#include "oracles.hpp"

namespace epr {
namespace {

TEST(PackedText, Empty) {
    const PackedText p = pack({}, 3);
    EXPECT_EQ(p.size(), 0u);
    EXPECT_TRUE(p.words().empty());
}

TEST(PackedText, DnaBlockLayout) {
    const Alphabet dna("ACGT", false);
    const PackedText p = pack(dna.encode("ACGCGTAT"), 2);
    EXPECT_EQ(p.unpack(), (std::vector<std::uint8_t>{0, 1, 2, 1, 2, 3, 0, 3}));
    ASSERT_EQ(p.words().size(), 1u);
    // Character j at bits [2j, 2j+2): T A T G C G C A read from the top.
    EXPECT_EQ(p.words()[0], 0b1100111001100100u);
}

TEST(PackedText, RejectsOverflow) {
    const std::vector<std::uint8_t> ranks{0, 4};
    EXPECT_THROW(pack(ranks, 2), InvalidInputError);
}

TEST(PackedText, RandomRoundTripAndZeroTail) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned b = 1 + rng() % 5;
        const std::size_t n = rng() % 1001;
        const auto ranks = oracle::random_sequence(rng, n, 1u << b);
        const PackedText p = pack(ranks, b);
        ASSERT_EQ(p.unpack(), ranks);
        const std::uint64_t used = n * b;
        if (used % 64 != 0) {
            EXPECT_EQ(p.words().back() >> (used % 64), 0u) << "trailing bits must be zero";
        }
    }
}

TEST(SuffixArray, Mississippi) {
    const Alphabet a = Alphabet::from_text("mississippi");
    const RankString t = a.encode_with_sentinel("mississippi");
    const SuffixArray sa = build_suffix_array(t);
    EXPECT_EQ(sa.positions,
              (std::vector<std::uint64_t>{12, 11, 8, 5, 2, 1, 10, 9, 7, 4, 6, 3}));
    // First column of the sorted rotations: $ i i i i m p p s s s s
    std::string first;
    for (std::uint64_t i = 1; i <= sa.size(); ++i) first.push_back(a.symbol_of(t[sa[i] - 1]));
    EXPECT_EQ(first, "$iiiimppssss");
}

TEST(SuffixArray, TwoSymbols) {
    const std::vector<std::uint8_t> t{1, 0};
    EXPECT_EQ(build_suffix_array(t).positions, (std::vector<std::uint64_t>{2, 1}));
    const std::vector<std::uint8_t> only{0};
    EXPECT_EQ(build_suffix_array(only).positions, (std::vector<std::uint64_t>{1}));
}

TEST(SuffixArray, RejectsBadSentinel) {
    EXPECT_THROW(build_suffix_array(std::vector<std::uint8_t>{1, 2}), InvalidInputError);
    EXPECT_THROW(build_suffix_array(std::vector<std::uint8_t>{1, 0, 2, 0}), InvalidInputError);
    EXPECT_THROW(build_suffix_array(std::vector<std::uint8_t>{}), InvalidInputError);
}

TEST(SuffixArray, MatchesNaiveSortOnRandomTexts) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned sigma_eff = 2 + rng() % 26;
        const auto t = oracle::random_text(rng, rng() % 256, sigma_eff);
        ASSERT_EQ(build_suffix_array(t).positions, oracle::suffix_array(t)) << "trial " << trial;
    }
    // Highly repetitive inputs exercise the recursion.
    for (std::size_t n : {1, 2, 3, 64, 255, 1000}) {
        oracle::Ranks t(n, 1);
        t.push_back(0);
        ASSERT_EQ(build_suffix_array(t).positions, oracle::suffix_array(t));
        oracle::Ranks u;
        for (std::size_t i = 0; i < n; ++i) u.push_back(1 + (i % 3 == 2));
        u.push_back(0);
        ASSERT_EQ(build_suffix_array(u).positions, oracle::suffix_array(u));
    }
}

TEST(Bwt, Mississippi) {
    const Alphabet a = Alphabet::from_text("mississippi");
    const RankString t = a.encode_with_sentinel("mississippi");
    const PackedText bwt = bwt_from_sa(t, build_suffix_array(t), a.bits_per_char());
    EXPECT_EQ(a.decode(bwt.unpack()), "ipssm$pissii");
}

TEST(Bwt, TwoSymbols) {
    const Alphabet a("a", true);
    const RankString t = a.encode_with_sentinel("a");
    EXPECT_EQ(a.decode(bwt_from_sa(t, build_suffix_array(t), 1).unpack()), "a$");
}

TEST(Bwt, MatchesRotationMatrixOnRandomTexts) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned sigma_eff = 2 + rng() % 26;
        const auto t = oracle::random_text(rng, rng() % 256, sigma_eff);
        const PackedText bwt = bwt_from_sa(t, build_suffix_array(t), ceil_log2(sigma_eff));
        ASSERT_EQ(bwt.unpack(), oracle::rotation_bwt(t));
    }
}

TEST(ReverseText, Examples) {
    EXPECT_EQ(reverse_text(std::string("miss$")), "ssim$");
    EXPECT_EQ(reverse_text(std::string("mississippi$")), "ippississim$");
    EXPECT_EQ(reverse_text(reverse_text(std::string("mississippi$"))), "mississippi$");
    EXPECT_EQ(reverse_text(std::string("$")), "$");
    EXPECT_THROW(reverse_text(std::string()), InvalidInputError);
}

// LF walk with the index's C table and Occ reconstructs the text.
TEST(Bwt, InverseByLfWalk) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned sigma_eff = 2 + rng() % 26;
        std::string symbols;
        for (unsigned k = 1; k < sigma_eff; ++k) symbols.push_back(static_cast<char>('a' + k - 1));
        const Alphabet a(symbols, true);
        const auto t = oracle::random_text(rng, rng() % 257, sigma_eff);
        EXPECT_EQ(EprFmIndex(t, a).invert(), t);
        EXPECT_EQ(WtFmIndex(t, a).invert(), t);
    }
}

}  // namespace
}  // namespace epr
