#pragma once

#include <cstdint>
#include <vector>

#include "epr/rank_bit_vector.hpp"
#include "epr/text.hpp"

namespace epr {

class ByteWriter;
class ByteReader;

/// Suffix array samples taken on the text: row i is sampled iff (SA[i] - 1) is a multiple of
/// the rate. Every text position is at most rate - 1 LF steps away from a sample.
class SampledSuffixArray {
public:
    SampledSuffixArray() = default;
    SampledSuffixArray(const SuffixArray& sa, unsigned rate);

    unsigned rate() const noexcept { return rate_; }
    /// 1-based row.
    bool is_sampled(std::uint64_t row) const noexcept { return marked_[row - 1]; }
    /// Text position stored for a sampled 1-based row.
    std::uint64_t value(std::uint64_t row) const noexcept {
        return values_[marked_.rank1(row - 1)];
    }
    std::uint64_t sample_count() const noexcept { return values_.size(); }

    std::uint64_t bytes() const noexcept {
        return marked_.bit_bytes() + marked_.directory_bytes() + values_.size() * 8;
    }

    void write(ByteWriter& out) const;
    static SampledSuffixArray read(ByteReader& in);

    friend bool operator==(const SampledSuffixArray&, const SampledSuffixArray&) = default;

private:
    unsigned rate_ = 0;
    RankBitVector marked_;
    std::vector<std::uint64_t> values_;
};

}  // namespace epr
