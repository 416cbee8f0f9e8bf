#include "epr/epr_dictionary.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "epr/errors.hpp"
#include "epr/serialization.hpp"

namespace epr {

LaneMasks::LaneMasks(unsigned bits_per_char, unsigned sigma_eff)
    : bits_(bits_per_char) {
    if (bits_per_char == 0 || bits_per_char > 8)
        throw InvalidInputError("bits per char must be in [1, 8]");
    chars_per_block_ = word_bits / bits_per_char;
    block_magic_ = ~std::uint64_t{0} / chars_per_block_ + 1;
    if (sigma_eff > (1u << bits_per_char))
        throw InvalidInputError("alphabet does not fit the character width");

    const unsigned lane_bits = 2 * bits_;
    const unsigned lanes = (chars_per_block_ + 1) / 2;
    const std::uint64_t slot = (std::uint64_t{1} << bits_) - 1;
    for (unsigned k = 0; k < lanes; ++k) {
        even_slots_ |= slot << (k * lane_bits);
        guard_ |= std::uint64_t{1} << (k * lane_bits + bits_);
    }
    rank_masks_.assign(sigma_eff, 0);
    for (rank_type c = 0; c < sigma_eff; ++c)
        for (unsigned k = 0; k < lanes; ++k)
            rank_masks_[c] |= ((std::uint64_t{1} << bits_) + c) << (k * lane_bits);

    // Character j's guard bit in the merged word: bit b of its lane for the low slot, one
    // above for the high slot (rotated, hence mod 64).
    prefix_guard_[0] = 0;
    for (unsigned t = 1; t <= chars_per_block_; ++t) {
        const unsigned j = t - 1;
        const unsigned bit = (j / 2) * lane_bits + bits_ + (j % 2);
        prefix_guard_[t] = prefix_guard_[t - 1] | (std::uint64_t{1} << (bit % word_bits));
    }
    for (unsigned t = chars_per_block_ + 1; t <= word_bits; ++t)
        prefix_guard_[t] = prefix_guard_[chars_per_block_];
}

EprDictionary::EprDictionary(const PackedText& bwt, unsigned sigma_eff, Options options)
    : size_(bwt.size()), sigma_eff_(sigma_eff), masks_(bwt.bits_per_char(), sigma_eff) {
    if (bwt.bits_per_char() != ceil_log2(sigma_eff))
        throw InvalidInputError("BWT must be packed at ceil(log2(sigma_eff)) bits per char");
    if (size_ >= (std::uint64_t{1} << 32)) throw InvalidInputError("BWT too long");
    const unsigned per = masks_.chars_per_block();
    const unsigned b = masks_.bits_per_char();
    block_total_ = size_ / per + 1;
    blocks_words_.assign(block_total_, 0);
    for (std::uint64_t j = 0; j < size_; ++j) {
        const std::uint64_t code = bwt.get(j);
        if (code >= sigma_eff_)
            throw InvalidInputError("BWT code " + std::to_string(code) + " at position " +
                                    std::to_string(j + 1) + " exceeds the alphabet");
        blocks_words_[j / per] |= code << ((j % per) * b);
    }
    build_counts();
    if (options.layout == EprLayout::interleaved) interleave();
}

void EprDictionary::interleave() {
    const std::uint64_t stride = sigma_eff_ - 1;
    layout_ = EprLayout::interleaved;
    record_words_ = static_cast<unsigned>(1 + (stride + 3) / 4);
    records_.assign(block_total_ * record_words_, 0);
    for (std::uint64_t p = 0; p < block_total_; ++p) {
        std::uint64_t* record = records_.data() + p * record_words_;
        record[0] = blocks_words_[p];
        for (rank_type c = 0; c < stride; ++c)
            record[1 + c / 4] |= std::uint64_t{blocks_[p * stride + c]} << (16 * (c % 4));
    }
    std::vector<std::uint64_t>().swap(blocks_words_);
    std::vector<std::uint16_t>().swap(blocks_);
}

void EprDictionary::build_counts() {
    const unsigned per = masks_.chars_per_block();
    const unsigned b = masks_.bits_per_char();
    const std::uint64_t stride = sigma_eff_ - 1;
    const std::uint64_t block_total = blocks_words_.size();
    const std::uint64_t superblock_total = (block_total - 1) / blocks_per_superblock_ + 1;
    blocks_.assign(block_total * stride, 0);
    superblocks_.assign(superblock_total * stride, 0);
    if (stride == 0) return;

    // Running occurrence counts per rank, turned into <= counts at each boundary.
    std::vector<std::uint64_t> total(sigma_eff_, 0);
    std::vector<std::uint64_t> at_superblock(stride, 0);
    for (std::uint64_t p = 0; p < block_total; ++p) {
        std::uint64_t cumulative = 0;
        const bool superblock_start = p % blocks_per_superblock_ == 0;
        for (rank_type c = 0; c < stride; ++c) {
            cumulative += total[c];
            if (superblock_start) {
                superblocks_[(p / blocks_per_superblock_) * stride + c] = cumulative;
                at_superblock[c] = cumulative;
            }
            blocks_[p * stride + c] = static_cast<std::uint16_t>(cumulative - at_superblock[c]);
        }
        const std::uint64_t begin = p * per;
        const std::uint64_t end = std::min<std::uint64_t>(begin + per, size_);
        const std::uint64_t word = blocks_words_[p];
        const std::uint64_t slot = (std::uint64_t{1} << b) - 1;
        for (std::uint64_t j = begin; j < end; ++j) ++total[(word >> ((j - begin) * b)) & slot];
    }
}

std::uint64_t EprDictionary::prefix_occ_at(rank_type c, std::uint64_t i) const {
    if (c >= sigma_eff_) throw std::out_of_range("rank outside the alphabet");
    if (i > size_) throw std::out_of_range("position past the end of the BWT");
    return prefix_occ(c, i);
}

std::uint64_t EprDictionary::occ_at(rank_type c, std::uint64_t i) const {
    if (c >= sigma_eff_) throw std::out_of_range("rank outside the alphabet");
    if (i > size_) throw std::out_of_range("position past the end of the BWT");
    return occ(c, i);
}

void EprDictionary::write(ByteWriter& out) const {
    out.put_u32(masks_.chars_per_block());
    out.put_u32(blocks_per_superblock_);
    out.put_u8(static_cast<std::uint8_t>(layout_));
    out.put_u64(size_);
    if (layout_ == EprLayout::interleaved) {
        out.put_array(std::span<const std::uint64_t>(records_));
    } else {
        out.put_array(std::span<const std::uint64_t>(blocks_words_));
        out.put_array(std::span<const std::uint16_t>(blocks_));
    }
    out.put_array(std::span<const std::uint64_t>(superblocks_));
}

EprDictionary EprDictionary::read(ByteReader& in, unsigned sigma_eff) {
    EprDictionary d;
    d.sigma_eff_ = sigma_eff;
    d.masks_ = LaneMasks(ceil_log2(sigma_eff), sigma_eff);
    if (in.get_u32() != d.masks_.chars_per_block())
        throw IndexFormatError("EPR block width does not match the alphabet");
    d.blocks_per_superblock_ = in.get_u32();
    if (!std::has_single_bit(d.blocks_per_superblock_) ||
        d.blocks_per_superblock_ * d.masks_.chars_per_block() > 0xffff)
        throw IndexFormatError("invalid EPR superblock layout");
    d.superblock_shift_ = static_cast<unsigned>(std::countr_zero(d.blocks_per_superblock_));
    const std::uint8_t layout = in.get_u8();
    if (layout > 1) throw IndexFormatError("unknown EPR layout");
    d.layout_ = static_cast<EprLayout>(layout);
    d.size_ = in.get_u64();
    if (d.size_ >= (std::uint64_t{1} << 32)) throw IndexFormatError("EPR dictionary too long");
    const std::uint64_t stride = sigma_eff - 1;
    d.block_total_ = d.size_ / d.masks_.chars_per_block() + 1;
    bool consistent = true;
    if (d.layout_ == EprLayout::interleaved) {
        d.record_words_ = static_cast<unsigned>(1 + (stride + 3) / 4);
        d.records_ = in.get_array<std::uint64_t>();
        consistent = d.records_.size() == d.block_total_ * d.record_words_;
    } else {
        d.blocks_words_ = in.get_array<std::uint64_t>();
        d.blocks_ = in.get_array<std::uint16_t>();
        consistent = d.blocks_words_.size() == d.block_total_ && d.blocks_.size() == d.block_total_ * stride;
    }
    d.superblocks_ = in.get_array<std::uint64_t>();
    if (!consistent ||
        d.superblocks_.size() != ((d.block_total_ - 1) / d.blocks_per_superblock_ + 1) * stride)
        throw IndexFormatError("inconsistent EPR dictionary dimensions");
    return d;
}

}  // namespace epr
