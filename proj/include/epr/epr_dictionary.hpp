#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "epr/alphabet.hpp"
#include "epr/packed_text.hpp"

namespace epr {

class ByteWriter;
class ByteReader;

/// Word-wide masks for the in-block prefix rank.
///
/// Characters sit in b-bit slots from the least significant end of a 64-bit word, character j
/// at bit j*b. Pairs of slots form 2b-bit lanes; lane k covers characters 2k (low slot) and
/// 2k+1 (high slot). Within a lane, rank_mask(c) holds 2^b + c, even_slots selects the low
/// slot, and guard selects bit b, the bit that survives the subtraction iff the subtracted
/// character is <= c.
class LaneMasks {
public:
    static constexpr unsigned word_bits = 64;

    LaneMasks() = default;
    LaneMasks(unsigned bits_per_char, unsigned sigma_eff);

    unsigned bits_per_char() const noexcept { return bits_; }
    unsigned chars_per_block() const noexcept { return chars_per_block_; }
    /// i / chars_per_block by multiplication; exact for i < 2^32.
    std::uint64_t block_of(std::uint64_t i) const noexcept {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(block_magic_) * i) >> 64);
    }
    std::uint64_t rank_mask(rank_type c) const noexcept { return rank_masks_[c]; }
    std::uint64_t even_slots() const noexcept { return even_slots_; }
    std::uint64_t guard() const noexcept { return guard_; }
    /// Merged-word positions of the first t characters' guard bits.
    std::uint64_t prefix_guard(unsigned t) const noexcept { return prefix_guard_[t]; }

    /// Guard bits for the characters in low slots: (rb(c) - (word & M_E)) & BM.
    std::uint64_t even_guard_bits(std::uint64_t word, rank_type c) const noexcept {
        return (rank_masks_[c] - (word & even_slots_)) & guard_;
    }

    /// Guard bits for the characters in high slots: (rb(c) - ((word >> b) & M_E)) & BM.
    std::uint64_t odd_guard_bits(std::uint64_t word, rank_type c) const noexcept {
        return (rank_masks_[c] - ((word >> bits_) & even_slots_)) & guard_;
    }

    /// Combines both guard words so a single popcount counts them. The odd word moves up by one
    /// bit; a rotate instead of a shift keeps the top lane's guard when b = 1.
    static std::uint64_t merge_guard_bits(std::uint64_t even, std::uint64_t odd) noexcept {
        return even | std::rotl(odd, 1);
    }

    /// Number of the first t characters of `word` that are <= c.
    unsigned in_block_prefix_rank(std::uint64_t word, rank_type c, unsigned t) const noexcept {
        const std::uint64_t merged =
            merge_guard_bits(even_guard_bits(word, c), odd_guard_bits(word, c));
        return static_cast<unsigned>(std::popcount(merged & prefix_guard_[t]));
    }

    friend bool operator==(const LaneMasks&, const LaneMasks&) = default;

private:
    unsigned bits_ = 0;
    unsigned chars_per_block_ = 0;
    std::uint64_t block_magic_ = 0;
    std::uint64_t even_slots_ = 0;
    std::uint64_t guard_ = 0;
    std::vector<std::uint64_t> rank_masks_;
    std::array<std::uint64_t, word_bits + 1> prefix_guard_{};
};

/// Where block counts live. `separate` keeps BWT words and block counts in two arrays;
/// `interleaved` stores each block's word followed by its counts, four per 64-bit word.
enum class EprLayout : std::uint8_t { separate = 0, interleaved = 1 };

struct EprOptions {
    EprLayout layout = EprLayout::separate;
};

/// Enhanced prefix-sum rank dictionary over a BWT.
///
/// Keeps the BWT packed at floor(64/b) characters per word (one word per block) and, for every
/// rank except the largest, a 64-bit count per superblock and a 16-bit count per block.
/// prefix_occ(c, i) is one superblock read, one block read and one in-block word operation.
class EprDictionary {
public:
    static constexpr unsigned default_blocks_per_superblock = 64;

    using Options = EprOptions;

    EprDictionary() = default;
    /// Throws InvalidInputError if a BWT code is >= sigma_eff or the BWT has 2^32 or more
    /// characters.
    EprDictionary(const PackedText& bwt, unsigned sigma_eff, Options options = {});

    std::uint64_t size() const noexcept { return size_; }
    unsigned sigma_eff() const noexcept { return sigma_eff_; }
    const LaneMasks& masks() const noexcept { return masks_; }
    unsigned chars_per_block() const noexcept { return masks_.chars_per_block(); }
    unsigned blocks_per_superblock() const noexcept { return blocks_per_superblock_; }
    EprLayout layout() const noexcept { return layout_; }
    std::uint64_t block_total() const noexcept { return block_total_; }

    /// #{k <= i : L[k] <= c}, 0 <= i <= n.
    std::uint64_t prefix_occ(rank_type c, std::uint64_t i) const noexcept {
        if (c == sigma_eff_ - 1) return i;
        const std::uint64_t block = masks_.block_of(i);
        return prefix_occ_stored(c, block, static_cast<unsigned>(i - block * chars_per_block()));
    }

    /// #{k <= i : L[k] = c}.
    std::uint64_t occ(rank_type c, std::uint64_t i) const noexcept {
        const std::uint64_t upto = prefix_occ(c, i);
        return c == 0 ? upto : upto - prefix_occ(c - 1, i);
    }

    /// Bounds-checked variants; throw std::out_of_range.
    std::uint64_t prefix_occ_at(rank_type c, std::uint64_t i) const;
    std::uint64_t occ_at(rank_type c, std::uint64_t i) const;

    struct RankPair {
        std::uint64_t smaller;  ///< #{k <= i : L[k] < c}
        std::uint64_t equal;    ///< #{k <= i : L[k] = c}
    };

    RankPair rank_pair(rank_type c, std::uint64_t i) const noexcept {
        const std::uint64_t block = masks_.block_of(i);
        const auto t = static_cast<unsigned>(i - block * chars_per_block());
        const std::uint64_t upto = c == sigma_eff_ - 1 ? i : prefix_occ_stored(c, block, t);
        const std::uint64_t below = c == 0 ? 0 : prefix_occ_stored(c - 1, block, t);
        return {below, upto - below};
    }

    /// 1-based access L[i].
    rank_type access(std::uint64_t i) const noexcept {
        const std::uint64_t j = i - 1;
        const unsigned per = masks_.chars_per_block();
        const unsigned b = masks_.bits_per_char();
        return static_cast<rank_type>((bwt_word(j / per) >> ((j % per) * b)) &
                                      ((std::uint64_t{1} << b) - 1));
    }

    std::uint64_t bwt_word(std::uint64_t p) const noexcept {
        return layout_ == EprLayout::interleaved ? records_[p * record_words_] : blocks_words_[p];
    }
    std::span<const std::uint64_t> superblock_counts() const noexcept { return superblocks_; }

    /// Stored count for rank c (< sigma_eff - 1) before superblock m / within block p.
    std::uint64_t superblock_count(std::uint64_t m, rank_type c) const noexcept {
        return superblocks_[m * (sigma_eff_ - 1) + c];
    }
    std::uint64_t block_count(std::uint64_t p, rank_type c) const noexcept {
        if (layout_ == EprLayout::interleaved) return record_count(records_.data() + p * record_words_, c);
        return blocks_[p * (sigma_eff_ - 1) + c];
    }

    std::uint64_t bwt_bytes() const noexcept { return block_total_ * 8; }
    /// Interleaved records count their padding here.
    std::uint64_t count_bytes() const noexcept {
        if (layout_ == EprLayout::interleaved)
            return superblocks_.size() * 8 + block_total_ * (record_words_ - 1) * 8;
        return superblocks_.size() * 8 + blocks_.size() * 2;
    }
    /// Per-structure constants: masks and layout fields.
    std::uint64_t fixed_bytes() const noexcept {
        return sizeof(*this) + sigma_eff_ * 8 + sizeof(std::uint64_t) * (LaneMasks::word_bits + 1);
    }

    void write(ByteWriter& out) const;
    static EprDictionary read(ByteReader& in, unsigned sigma_eff);

    friend bool operator==(const EprDictionary&, const EprDictionary&) = default;

private:
    static std::uint64_t record_count(const std::uint64_t* record, rank_type c) noexcept {
        return (record[1 + c / 4] >> (16 * (c % 4))) & 0xffff;
    }

    std::uint64_t prefix_occ_stored(rank_type c, std::uint64_t block, unsigned t) const noexcept {
        const std::uint64_t stride = sigma_eff_ - 1;
        const std::uint64_t above = superblocks_[(block >> superblock_shift_) * stride + c];
        if (layout_ == EprLayout::interleaved) {
            const std::uint64_t* record = records_.data() + block * record_words_;
            return above + record_count(record, c) + masks_.in_block_prefix_rank(record[0], c, t);
        }
        return above + blocks_[block * stride + c] +
               masks_.in_block_prefix_rank(blocks_words_[block], c, t);
    }

    void build_counts();
    void interleave();

    std::uint64_t size_ = 0;
    std::uint64_t block_total_ = 0;
    unsigned sigma_eff_ = 0;
    EprLayout layout_ = EprLayout::separate;
    unsigned record_words_ = 0;
    unsigned blocks_per_superblock_ = default_blocks_per_superblock;
    unsigned superblock_shift_ = std::countr_zero(default_blocks_per_superblock);
    LaneMasks masks_;
    // floor(n / chars_per_block) + 1 words; the last one covers i = n.
    std::vector<std::uint64_t> blocks_words_;
    std::vector<std::uint64_t> superblocks_;
    std::vector<std::uint16_t> blocks_;
    // Interleaved layout only: record_words_ words per block, BWT word first.
    std::vector<std::uint64_t> records_;
};

}  // namespace epr
