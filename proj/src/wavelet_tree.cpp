#include "epr/wavelet_tree.hpp"

#include <stdexcept>
#include <string>

#include "epr/errors.hpp"
#include "epr/serialization.hpp"

namespace epr {

WaveletTree::WaveletTree(const PackedText& bwt, unsigned sigma_eff, Options)
    : size_(bwt.size()), sigma_eff_(sigma_eff) {
    if (sigma_eff < 2 || sigma_eff > 256) throw InvalidInputError("sigma_eff must be in [2, 256]");
    const unsigned depth = ceil_log2(sigma_eff);

    std::vector<std::uint8_t> seq = bwt.unpack();
    std::vector<std::uint64_t> symbol_counts(std::size_t{1} << depth, 0);
    for (std::uint64_t j = 0; j < seq.size(); ++j) {
        if (seq[j] >= sigma_eff)
            throw InvalidInputError("BWT code " + std::to_string(seq[j]) + " at position " +
                                    std::to_string(j + 1) + " exceeds the alphabet");
        ++symbol_counts[seq[j]];
    }

    std::vector<std::uint8_t> next(seq.size());
    levels_.reserve(depth);
    for (unsigned k = 0; k < depth; ++k) {
        const unsigned shift = depth - 1 - k;
        std::vector<std::uint64_t> words(size_ / 64 + 1, 0);
        for (std::uint64_t j = 0; j < seq.size(); ++j)
            if ((seq[j] >> shift) & 1u) words[j / 64] |= std::uint64_t{1} << (j % 64);
        levels_.emplace_back(std::move(words), size_);

        // Stable counting sort by the (k+1)-bit prefix for the next level.
        std::vector<std::uint64_t> start((std::size_t{1} << (k + 1)) + 1, 0);
        for (auto s : seq) ++start[(s >> shift) + 1];
        for (std::size_t p = 1; p < start.size(); ++p) start[p] += start[p - 1];
        for (auto s : seq) next[start[s >> shift]++] = s;
        seq.swap(next);
    }
    build_node_table(symbol_counts);
}

void WaveletTree::build_node_table(const std::vector<std::uint64_t>& symbol_counts) {
    const unsigned depth = levels();
    node_begins_.assign((std::size_t{1} << (depth + 1)) - 1, 0);
    for (unsigned k = 0; k <= depth; ++k) {
        const unsigned shift = depth - k;
        std::uint64_t sum = 0;
        for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << k); ++prefix) {
            node_begins_[(std::uint64_t{1} << k) - 1 + prefix] = sum;
            for (std::uint64_t s = prefix << shift; s < ((prefix + 1) << shift); ++s)
                sum += symbol_counts[s];
        }
    }
}

std::uint64_t WaveletTree::prefix_occ_at(rank_type c, std::uint64_t i) const {
    if (c >= sigma_eff_) throw std::out_of_range("rank outside the alphabet");
    if (i > size_) throw std::out_of_range("position past the end of the BWT");
    return prefix_occ(c, i);
}

std::uint64_t WaveletTree::occ_at(rank_type c, std::uint64_t i) const {
    if (c >= sigma_eff_) throw std::out_of_range("rank outside the alphabet");
    if (i > size_) throw std::out_of_range("position past the end of the BWT");
    return occ(c, i);
}

std::uint64_t WaveletTree::bwt_bytes() const noexcept {
    std::uint64_t bytes = 0;
    for (const auto& bv : levels_) bytes += bv.bit_bytes();
    return bytes;
}

std::uint64_t WaveletTree::count_bytes() const noexcept {
    std::uint64_t bytes = 0;
    for (const auto& bv : levels_) bytes += bv.directory_bytes();
    return bytes;
}

void WaveletTree::write(ByteWriter& out) const {
    out.put_u64(size_);
    out.put_u32(levels());
    for (const auto& bv : levels_) bv.write(out);
    out.put_array(std::span<const std::uint64_t>(node_begins_));
}

WaveletTree WaveletTree::read(ByteReader& in, unsigned sigma_eff) {
    WaveletTree wt;
    wt.sigma_eff_ = sigma_eff;
    wt.size_ = in.get_u64();
    const std::uint32_t depth = in.get_u32();
    if (depth != ceil_log2(sigma_eff)) throw IndexFormatError("wavelet tree depth mismatch");
    for (std::uint32_t k = 0; k < depth; ++k) {
        wt.levels_.push_back(RankBitVector::read(in));
        if (wt.levels_.back().size() != wt.size_)
            throw IndexFormatError("wavelet tree level length mismatch");
    }
    wt.node_begins_ = in.get_array<std::uint64_t>();
    if (wt.node_begins_.size() != (std::uint64_t{1} << (depth + 1)) - 1)
        throw IndexFormatError("wavelet tree node table size mismatch");
    return wt;
}

}  // namespace epr
