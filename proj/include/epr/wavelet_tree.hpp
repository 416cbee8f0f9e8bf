#pragma once

#include <cstdint>
#include <vector>

#include "epr/alphabet.hpp"
#include "epr/packed_text.hpp"
#include "epr/rank_bit_vector.hpp"

namespace epr {

class ByteWriter;
class ByteReader;

/// Balanced binary wavelet tree over b-bit codes, stored level by level.
///
/// Level k holds bit (b - 1 - k) of every character, with positions grouped by their code
/// prefix of length k in increasing prefix order. Node boundaries are not stored per node:
/// node_begin(k, prefix) comes from a table of symbol counts. Each level costs two rank1
/// queries, so occ and prefix_occ take O(log sigma).
class WaveletTree {
public:
    struct Options {};

    WaveletTree() = default;
    WaveletTree(const PackedText& bwt, unsigned sigma_eff, Options = {});

    std::uint64_t size() const noexcept { return size_; }
    unsigned sigma_eff() const noexcept { return sigma_eff_; }
    unsigned levels() const noexcept { return static_cast<unsigned>(levels_.size()); }
    const RankBitVector& level(unsigned k) const noexcept { return levels_[k]; }

    struct RankPair {
        std::uint64_t smaller;
        std::uint64_t equal;
    };

    /// Counts of characters < c and = c among L[1..i], from one root-to-leaf walk.
    RankPair rank_pair(rank_type c, std::uint64_t i) const noexcept {
        std::uint64_t smaller = 0;
        std::uint64_t begin = 0;
        const unsigned depth = levels();
        for (unsigned k = 0; k < depth; ++k) {
            const RankBitVector& bv = levels_[k];
            const unsigned shift = depth - 1 - k;
            const std::uint64_t ones_before = bv.rank1(begin);
            const std::uint64_t ones = bv.rank1(begin + i) - ones_before;
            const std::uint64_t prefix = std::uint64_t{c} >> shift;
            if (prefix & 1u) {
                smaller += i - ones;
                i = ones;
            } else {
                i -= ones;
            }
            begin = node_begin(k + 1, prefix);
        }
        return {smaller, i};
    }

    std::uint64_t occ(rank_type c, std::uint64_t i) const noexcept {
        return rank_pair(c, i).equal;
    }

    std::uint64_t prefix_occ(rank_type c, std::uint64_t i) const noexcept {
        if (c == sigma_eff_ - 1) return i;
        const RankPair r = rank_pair(c, i);
        return r.smaller + r.equal;
    }

    std::uint64_t prefix_occ_at(rank_type c, std::uint64_t i) const;
    std::uint64_t occ_at(rank_type c, std::uint64_t i) const;

    /// 1-based access L[i].
    rank_type access(std::uint64_t i) const noexcept {
        std::uint64_t pos = i - 1;
        std::uint64_t begin = 0;
        std::uint64_t code = 0;
        for (unsigned k = 0; k < levels(); ++k) {
            const RankBitVector& bv = levels_[k];
            const bool bit = bv[begin + pos];
            code = (code << 1) | (bit ? 1u : 0u);
            pos = bit ? bv.rank1(begin + pos) - bv.rank1(begin) : bv.rank0(begin + pos) - bv.rank0(begin);
            begin = node_begin(k + 1, code);
        }
        return static_cast<rank_type>(code);
    }

    std::uint64_t bwt_bytes() const noexcept;
    std::uint64_t count_bytes() const noexcept;
    std::uint64_t fixed_bytes() const noexcept {
        return sizeof(*this) + node_begins_.size() * 8;
    }

    void write(ByteWriter& out) const;
    static WaveletTree read(ByteReader& in, unsigned sigma_eff);

    friend bool operator==(const WaveletTree&, const WaveletTree&) = default;

private:
    /// Start of the node for `prefix` (k bits) at level k.
    std::uint64_t node_begin(unsigned k, std::uint64_t prefix) const noexcept {
        return node_begins_[(std::uint64_t{1} << k) - 1 + prefix];
    }

    void build_node_table(const std::vector<std::uint64_t>& symbol_counts);

    std::uint64_t size_ = 0;
    unsigned sigma_eff_ = 0;
    std::vector<RankBitVector> levels_;
    // Level k occupies entries [2^k - 1, 2^(k+1) - 1); level b is included for the leaves.
    std::vector<std::uint64_t> node_begins_;
};

}  // namespace epr
