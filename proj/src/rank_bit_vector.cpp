#include "epr/rank_bit_vector.hpp"

#include "epr/errors.hpp"
#include "epr/serialization.hpp"

namespace epr {

RankBitVector::RankBitVector(std::vector<std::uint64_t> words, std::uint64_t size)
    : words_(std::move(words)), size_(size) {
    const std::uint64_t word_count = size / block_bits + 1;
    if (words_.size() > word_count)
        throw InvalidInputError("bit vector has more words than its size needs");
    words_.resize(word_count, 0);
    if (size % block_bits != 0)
        words_[size / block_bits] &= (std::uint64_t{1} << (size % block_bits)) - 1;
    else
        words_.back() = 0;
    build_directory();
}

RankBitVector::RankBitVector(const std::vector<bool>& bits) : size_(bits.size()) {
    words_.assign(size_ / block_bits + 1, 0);
    for (std::uint64_t i = 0; i < size_; ++i)
        if (bits[i]) words_[i / block_bits] |= std::uint64_t{1} << (i % block_bits);
    build_directory();
}

void RankBitVector::build_directory() {
    const std::uint64_t block_count = words_.size();
    blocks_.assign(block_count, 0);
    superblocks_.assign((block_count - 1) / blocks_per_superblock + 1, 0);
    std::uint64_t total = 0;
    std::uint64_t in_superblock = 0;
    for (std::uint64_t p = 0; p < block_count; ++p) {
        if (p % blocks_per_superblock == 0) {
            superblocks_[p / blocks_per_superblock] = total;
            in_superblock = 0;
        }
        blocks_[p] = static_cast<std::uint16_t>(in_superblock);
        const auto ones = static_cast<std::uint64_t>(std::popcount(words_[p]));
        in_superblock += ones;
        total += ones;
    }
}

void RankBitVector::write(ByteWriter& out) const {
    out.put_u32(block_bits);
    out.put_u32(blocks_per_superblock);
    out.put_u64(size_);
    out.put_array(std::span<const std::uint64_t>(words_));
    out.put_array(std::span<const std::uint64_t>(superblocks_));
    out.put_array(std::span<const std::uint16_t>(blocks_));
}

RankBitVector RankBitVector::read(ByteReader& in) {
    if (in.get_u32() != block_bits || in.get_u32() != blocks_per_superblock)
        throw IndexFormatError("unsupported bit vector layout");
    RankBitVector bv;
    bv.size_ = in.get_u64();
    bv.words_ = in.get_array<std::uint64_t>();
    bv.superblocks_ = in.get_array<std::uint64_t>();
    bv.blocks_ = in.get_array<std::uint16_t>();
    if (bv.words_.size() != bv.size_ / block_bits + 1 ||
        bv.blocks_.size() != bv.words_.size() ||
        bv.superblocks_.size() != (bv.words_.size() - 1) / blocks_per_superblock + 1)
        throw IndexFormatError("inconsistent bit vector dimensions");
    return bv;
}

}  // namespace epr
