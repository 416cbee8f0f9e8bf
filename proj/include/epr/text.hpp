#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "epr/alphabet.hpp"
#include "epr/errors.hpp"
#include "epr/packed_text.hpp"

namespace epr {

/// 1-based suffix array: positions[i - 1] is the text position of the i-th smallest suffix.
struct SuffixArray {
    std::vector<std::uint64_t> positions;

    std::uint64_t size() const noexcept { return positions.size(); }
    /// 1-based access.
    std::uint64_t operator[](std::uint64_t i) const noexcept { return positions[i - 1]; }
};

/// Suffix array of a sentinel-terminated rank string (SA-IS, linear time).
/// Throws InvalidInputError unless rank 0 occurs exactly once, at the last position.
SuffixArray build_suffix_array(std::span<const std::uint8_t> text);

/// The BWT L: L[i] = T[SA[i] - 1], or T[n] where SA[i] = 1.
PackedText bwt_from_sa(std::span<const std::uint8_t> text, const SuffixArray& sa,
                       unsigned bits_per_char);

/// Reverses everything but the final (sentinel) element.
template <class Sequence>
Sequence reverse_text(const Sequence& text) {
    if (text.empty()) throw InvalidInputError("cannot reverse an empty text");
    Sequence out(text);
    std::reverse(out.begin(), out.end() - 1);
    return out;
}

}  // namespace epr
