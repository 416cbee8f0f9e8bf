#include "epr/sampled_sa.hpp"

#include "epr/errors.hpp"
#include "epr/serialization.hpp"

namespace epr {

SampledSuffixArray::SampledSuffixArray(const SuffixArray& sa, unsigned rate) : rate_(rate) {
    if (rate == 0) throw InvalidInputError("sampling rate must be positive");
    std::vector<bool> marked(sa.size(), false);
    for (std::uint64_t row = 1; row <= sa.size(); ++row) {
        if ((sa[row] - 1) % rate == 0) {
            marked[row - 1] = true;
            values_.push_back(sa[row]);
        }
    }
    marked_ = RankBitVector(marked);
}

void SampledSuffixArray::write(ByteWriter& out) const {
    out.put_u32(rate_);
    marked_.write(out);
    out.put_array(std::span<const std::uint64_t>(values_));
}

SampledSuffixArray SampledSuffixArray::read(ByteReader& in) {
    SampledSuffixArray s;
    s.rate_ = in.get_u32();
    if (s.rate_ == 0) throw IndexFormatError("sampling rate must be positive");
    s.marked_ = RankBitVector::read(in);
    s.values_ = in.get_array<std::uint64_t>();
    if (s.values_.size() != s.marked_.rank1(s.marked_.size()))
        throw IndexFormatError("sample count does not match the sample marks");
    return s;
}

}  // namespace epr
