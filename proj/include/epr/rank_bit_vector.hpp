#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace epr {

class ByteWriter;
class ByteReader;

/// Plain bit vector with a two-level constant-time rank directory.
///
/// A block is one 64-bit word; a superblock is four blocks. superblocks()[m] holds the number
/// of ones before superblock m (i.e. through the end of superblock m - 1), blocks()[p] the
/// number of ones between the start of p's superblock and the start of block p. The in-block
/// part is a masked popcount.
class RankBitVector {
public:
    static constexpr unsigned block_bits = 64;
    static constexpr unsigned blocks_per_superblock = 4;
    static constexpr unsigned superblock_bits = block_bits * blocks_per_superblock;

    RankBitVector() : RankBitVector(std::vector<std::uint64_t>{}, 0) {}
    /// Takes ownership of `words` holding `size` bits; bits past `size` are cleared.
    RankBitVector(std::vector<std::uint64_t> words, std::uint64_t size);
    explicit RankBitVector(const std::vector<bool>& bits);

    /// Number of ones among the first i bits; 0 <= i <= size().
    std::uint64_t rank1(std::uint64_t i) const noexcept {
        const std::uint64_t block = i / block_bits;
        const unsigned offset = i % block_bits;
        const std::uint64_t partial =
            offset == 0 ? 0 : std::popcount(words_[block] << (block_bits - offset));
        return superblocks_[i / superblock_bits] + blocks_[block] + partial;
    }

    std::uint64_t rank0(std::uint64_t i) const noexcept { return i - rank1(i); }

    /// 0-based bit access.
    bool operator[](std::uint64_t i) const noexcept {
        return (words_[i / block_bits] >> (i % block_bits)) & 1u;
    }

    std::uint64_t size() const noexcept { return size_; }
    std::span<const std::uint64_t> words() const noexcept {
        return {words_.data(), words_.size() - 1};
    }
    std::span<const std::uint64_t> superblocks() const noexcept { return superblocks_; }
    std::span<const std::uint16_t> blocks() const noexcept { return blocks_; }

    /// Bytes held by bits plus directory.
    std::uint64_t bit_bytes() const noexcept { return words_.size() * 8; }
    std::uint64_t directory_bytes() const noexcept {
        return superblocks_.size() * 8 + blocks_.size() * 2;
    }

    void write(ByteWriter& out) const;
    static RankBitVector read(ByteReader& in);

    friend bool operator==(const RankBitVector&, const RankBitVector&) = default;

private:
    void build_directory();

    // One extra zero word so rank1(size()) never reads past the end.
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> superblocks_;
    std::vector<std::uint16_t> blocks_;
    std::uint64_t size_ = 0;
};

}  // namespace epr
