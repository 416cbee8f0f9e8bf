#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace epr {

/// b-bit-per-symbol packed sequence. Symbol j occupies stream bits [j*b, (j+1)*b),
/// least-significant bit first within each 64-bit word; a symbol may straddle two words.
/// Unused trailing bits of the last word are always zero.
class PackedText {
public:
    PackedText() = default;
    PackedText(std::uint64_t length, unsigned bits_per_char);

    std::uint64_t get(std::uint64_t j) const noexcept {
        const std::uint64_t bit = j * bits_;
        const std::uint64_t word = bit >> 6;
        const unsigned offset = bit & 63;
        std::uint64_t value = words_[word] >> offset;
        if (offset + bits_ > 64) value |= words_[word + 1] << (64 - offset);
        return value & mask();
    }

    void set(std::uint64_t j, std::uint64_t value) noexcept;

    std::uint64_t size() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }
    unsigned bits_per_char() const noexcept { return bits_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::vector<std::uint8_t> unpack() const;

    friend bool operator==(const PackedText&, const PackedText&) = default;

private:
    std::uint64_t mask() const noexcept {
        return bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
    }

    std::vector<std::uint64_t> words_;
    std::uint64_t length_ = 0;
    unsigned bits_ = 1;
};

/// Packs `ranks` at `bits_per_char` bits each. Throws InvalidInputError if a rank needs more bits.
PackedText pack(std::span<const std::uint8_t> ranks, unsigned bits_per_char);

}  // namespace epr
