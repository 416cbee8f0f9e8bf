#include "epr/packed_text.hpp"

#include <string>

#include "epr/errors.hpp"

namespace epr {

PackedText::PackedText(std::uint64_t length, unsigned bits_per_char)
    : words_((length * bits_per_char + 63) / 64, 0), length_(length), bits_(bits_per_char) {
    if (bits_per_char == 0 || bits_per_char > 64)
        throw InvalidInputError("bits per char must be in [1, 64]");
}

void PackedText::set(std::uint64_t j, std::uint64_t value) noexcept {
    value &= mask();
    const std::uint64_t bit = j * bits_;
    const std::uint64_t word = bit >> 6;
    const unsigned offset = bit & 63;
    words_[word] = (words_[word] & ~(mask() << offset)) | (value << offset);
    if (offset + bits_ > 64) {
        const unsigned spill = offset + bits_ - 64;
        const std::uint64_t high_mask = (std::uint64_t{1} << spill) - 1;
        words_[word + 1] = (words_[word + 1] & ~high_mask) | (value >> (64 - offset));
    }
}

std::vector<std::uint8_t> PackedText::unpack() const {
    std::vector<std::uint8_t> out(length_);
    for (std::uint64_t j = 0; j < length_; ++j) out[j] = static_cast<std::uint8_t>(get(j));
    return out;
}

PackedText pack(std::span<const std::uint8_t> ranks, unsigned bits_per_char) {
    PackedText packed(ranks.size(), bits_per_char);
    const std::uint64_t limit = bits_per_char >= 8 ? 256 : (std::uint64_t{1} << bits_per_char);
    for (std::size_t j = 0; j < ranks.size(); ++j) {
        if (ranks[j] >= limit)
            throw InvalidInputError("rank " + std::to_string(ranks[j]) + " at position " +
                                    std::to_string(j) + " does not fit in " +
                                    std::to_string(bits_per_char) + " bits");
        packed.set(j, ranks[j]);
    }
    return packed;
}

}  // namespace epr
