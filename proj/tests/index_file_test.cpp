#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "epr/bench.hpp"
#include "epr/index_file.hpp"
#include "epr/serialization.hpp"

namespace epr {
namespace {

AnyIndex build(StructureTag tag, std::string_view text, const Alphabet& a, unsigned rate = 10,
               EprOptions options = {}) {
    switch (tag) {
        case StructureTag::epr_uni: return EprFmIndex::from_text(text, a, rate, options);
        case StructureTag::wt_uni: return WtFmIndex::from_text(text, a, rate);
        case StructureTag::epr_bi: return EprBiFmIndex::from_text(text, a, rate, options);
        case StructureTag::wt_bi: return WtBiFmIndex::from_text(text, a, rate);
    }
    throw std::logic_error("tag");
}

std::uint64_t count_any(const AnyIndex& idx, std::string_view p) {
    return std::visit(
        [&](const auto& x) -> std::uint64_t {
            if constexpr (requires { x.forward(); }) return x.forward().count(p);
            else return x.count(p);
        },
        idx);
}

std::vector<std::uint64_t> locate_any(const AnyIndex& idx, std::string_view p) {
    return std::visit(
        [&](const auto& x) {
            if constexpr (requires { x.forward(); }) return x.forward().locate(p);
            else return x.locate(p);
        },
        idx);
}

constexpr StructureTag all_tags[] = {StructureTag::epr_uni, StructureTag::wt_uni,
                                     StructureTag::epr_bi, StructureTag::wt_bi};

TEST(IndexFile, HeaderLayout) {
    const auto bytes = serialize_index(build(StructureTag::wt_bi, "GATTACA", Alphabet::named("dna")));
    ByteReader in(bytes);
    EXPECT_EQ(in.get_u8(), 'E');
    EXPECT_EQ(in.get_u8(), 'P');
    EXPECT_EQ(in.get_u8(), 'R');
    EXPECT_EQ(in.get_u8(), 'X');
    EXPECT_EQ(in.get_u32(), 1u);
    EXPECT_EQ(in.get_u32(), 0x01020304u);
    EXPECT_EQ(in.get_u8(), 1);  // sentinel
    EXPECT_EQ(in.get_u8(), 3);  // b
    EXPECT_EQ(in.get_u16(), 4);
    EXPECT_EQ(in.get_u8(), 'A');
    in.get_bytes(3);
    EXPECT_EQ(in.get_u8(), 3);  // wt_bi
    EXPECT_EQ(in.get_u64(), 8u);
    EXPECT_EQ(in.get_u8(), 3);
    EXPECT_EQ(in.get_u32(), 2u);
    const std::span<const std::uint8_t> all(bytes);
    std::uint64_t stored = 0;
    for (int k = 7; k >= 0; --k) stored = stored << 8 | bytes[bytes.size() - 8 + k];
    EXPECT_EQ(stored, fnv1a64(all.first(bytes.size() - 8)));
}

TEST(IndexFile, RandomRoundTrips) {
    std::mt19937_64 rng(71);
    const unsigned sigmas[] = {4, 10, 16, 27};
    for (int trial = 0; trial < 20; ++trial) {
        const Alphabet a = Alphabet::of_size(sigmas[trial % 4]);
        const std::string text = gen_text(a, 1 + rng() % 5000, rng());
        const StructureTag tag = all_tags[trial % 4];
        const EprOptions options{trial % 8 >= 4 ? EprLayout::interleaved : EprLayout::separate};
        const AnyIndex idx = build(tag, text, a, 1 + rng() % 32, options);
        const auto bytes = serialize_index(idx);
        const AnyIndex back = deserialize_index(bytes);
        ASSERT_EQ(back.index(), idx.index());
        ASSERT_TRUE(back == idx);
        ASSERT_EQ(serialize_index(back), bytes);
        for (int q = 0; q < 20; ++q) {
            const std::uint64_t m = 1 + rng() % 4;
            if (m > text.size()) continue;
            const std::string p = text.substr(rng() % (text.size() - m + 1), m);
            ASSERT_EQ(count_any(back, p), count_any(idx, p));
            ASSERT_EQ(locate_any(back, p), locate_any(idx, p));
        }
    }
}

TEST(IndexFile, SaveAndLoad) {
    const auto dir = std::filesystem::temp_directory_path() / "epr_index_file_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "x.eprx";
    const AnyIndex idx = build(StructureTag::epr_uni, "mississippi", Alphabet::from_text("mississippi"));
    save_index(path, idx);
    const AnyIndex back = load_index(path);
    EXPECT_TRUE(back == idx);
    EXPECT_EQ(count_any(back, "ssi"), 2u);
    EXPECT_THROW(load_index(dir / "missing.eprx"), std::runtime_error);
    std::filesystem::remove_all(dir);
}

class Corruption : public ::testing::Test {
protected:
    std::vector<std::uint8_t> bytes =
        serialize_index(build(StructureTag::epr_bi, "ACGTTGCAACGT", Alphabet::named("dna")));

    void reseal() {
        const std::span<const std::uint8_t> all(bytes);
        const std::uint64_t h = fnv1a64(all.first(bytes.size() - 8));
        for (int k = 0; k < 8; ++k) bytes[bytes.size() - 8 + k] = static_cast<std::uint8_t>(h >> (8 * k));
    }
};

TEST_F(Corruption, Magic) {
    bytes[0] = 'X';
    EXPECT_THROW(deserialize_index(bytes), BadMagicError);
}

TEST_F(Corruption, Version) {
    bytes[4] = 2;
    reseal();
    EXPECT_THROW(deserialize_index(bytes), VersionMismatchError);
}

TEST_F(Corruption, Endianness) {
    bytes[8] = 0x01;
    bytes[11] = 0x04;
    EXPECT_THROW(deserialize_index(bytes), IndexFormatError);
}

TEST_F(Corruption, PayloadByteFlipped) {
    for (std::size_t pos : {bytes.size() / 2, bytes.size() - 20, bytes.size() - 1}) {
        auto copy = bytes;
        copy[pos] ^= 0x10;
        EXPECT_THROW(deserialize_index(copy), ChecksumMismatchError) << pos;
    }
}

TEST_F(Corruption, Truncated) {
    for (std::size_t len : {std::size_t{0}, std::size_t{3}, std::size_t{10}, bytes.size() / 2,
                            bytes.size() - 9, bytes.size() - 1}) {
        const std::span<const std::uint8_t> cut(bytes.data(), len);
        EXPECT_THROW(deserialize_index(cut), TruncatedFileError) << len;
    }
}

TEST_F(Corruption, TrailingBytes) {
    bytes.push_back(0);
    EXPECT_THROW(deserialize_index(bytes), IndexFormatError);
}

TEST_F(Corruption, UnknownStructureTag) {
    // Offset of the tag: 12 header bytes + 4 alphabet header bytes + 4 symbols.
    bytes[20] = 9;
    reseal();
    EXPECT_THROW(deserialize_index(bytes), IndexFormatError);
}

TEST_F(Corruption, ErrorHierarchy) {
    bytes[0] = 0;
    try {
        deserialize_index(bytes);
        FAIL();
    } catch (const IndexFormatError&) {
    }
}

}  // namespace
}  // namespace epr
