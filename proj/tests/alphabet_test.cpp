#include <gtest/gtest.h>

#include <random>

#include "epr/alphabet.hpp"
#include "epr/errors.hpp"

namespace epr {
namespace {

TEST(Alphabet, DnaWithoutSentinelUsesTwoBitCodes) {
    const Alphabet dna("ACGT", false);
    EXPECT_EQ(dna.sigma_eff(), 4u);
    EXPECT_EQ(dna.bits_per_char(), 2u);
    EXPECT_EQ(dna.rank_of('A'), 0u);
    EXPECT_EQ(dna.rank_of('G'), 2u);  // 10
    EXPECT_EQ(dna.symbol_of(3), 'T');
}

TEST(Alphabet, SentinelTakesRankZero) {
    const Alphabet a = Alphabet::from_text("mississippi");
    EXPECT_EQ(a.symbols(), "imps");
    EXPECT_EQ(a.sigma_eff(), 5u);
    EXPECT_EQ(a.bits_per_char(), 3u);
    EXPECT_EQ(a.rank_of('s'), 4u);
    EXPECT_EQ(a.rank_of('$'), 0u);
    EXPECT_EQ(a.symbol_of(0), '$');
    EXPECT_EQ(Alphabet::named("dna").bits_per_char(), 3u);
}

TEST(Alphabet, NamedAlphabetSizes) {
    EXPECT_EQ(Alphabet::of_size(4).sigma(), 4u);
    EXPECT_EQ(Alphabet::of_size(10).sigma(), 10u);
    EXPECT_EQ(Alphabet::of_size(16).sigma(), 16u);
    EXPECT_EQ(Alphabet::of_size(27).sigma(), 27u);
    EXPECT_THROW(Alphabet::of_size(5), InvalidInputError);
}

TEST(Alphabet, Errors) {
    const Alphabet dna = Alphabet::named("dna");
    EXPECT_THROW(dna.rank_of('N'), UnknownSymbolError);
    EXPECT_THROW(dna.symbol_of(5), std::out_of_range);
    EXPECT_THROW(Alphabet("AA", false), InvalidInputError);
    EXPECT_THROW(Alphabet("A", false), InvalidInputError);
    EXPECT_THROW(Alphabet("A$", true), InvalidInputError);
    try {
        dna.encode("ACGXT");
        FAIL();
    } catch (const UnknownSymbolError& e) {
        EXPECT_EQ(e.position(), 4u);
        EXPECT_EQ(e.symbol(), 'X');
    }
}

TEST(Alphabet, BitWidthInvariant) {
    for (unsigned sigma_eff = 2; sigma_eff <= 32; ++sigma_eff) {
        std::string symbols;
        for (unsigned k = 0; k < sigma_eff; ++k) symbols.push_back(static_cast<char>('A' + k));
        const Alphabet a(symbols, false);
        const unsigned b = a.bits_per_char();
        EXPECT_GE(1u << b, sigma_eff);
        EXPECT_LT(1u << (b - 1), sigma_eff);
    }
}

// Round trip and order preservation over sigma_eff in [2, 32], with and without sentinel.
TEST(Alphabet, RoundTripAndOrderProperty) {
    std::mt19937_64 rng(7);
    for (unsigned sigma_eff = 2; sigma_eff <= 32; ++sigma_eff) {
        for (bool sentinel : {false, true}) {
            const unsigned sigma = sentinel ? sigma_eff - 1 : sigma_eff;
            if (sigma == 0) continue;
            std::string symbols;
            for (unsigned k = 0; k < sigma; ++k) symbols.push_back(static_cast<char>('a' + k));
            const Alphabet a(symbols, sentinel);
            ASSERT_EQ(a.sigma_eff(), sigma_eff);
            for (rank_type r = 0; r < sigma_eff; ++r) EXPECT_EQ(a.rank_of(a.symbol_of(r)), r);
            for (int trial = 0; trial < 50; ++trial) {
                const char x = symbols[rng() % sigma];
                const char y = symbols[rng() % sigma];
                EXPECT_EQ(static_cast<unsigned char>(x) < static_cast<unsigned char>(y),
                          a.rank_of(x) < a.rank_of(y));
            }
        }
    }
}

}  // namespace
}  // namespace epr
