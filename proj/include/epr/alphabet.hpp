#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epr {

using rank_type = std::uint32_t;

/// Dense rank sequence; one byte per symbol (sigma_eff <= 256).
using RankString = std::vector<std::uint8_t>;

/// Ordered finite alphabet over byte symbols.
///
/// Symbols are ranked by their position in the list handed to the constructor. When the
/// sentinel is included it takes rank 0 and every symbol shifts up by one. The sentinel has no
/// byte value of its own; `'$'` is reserved as its printable form and may not be a symbol.
class Alphabet {
public:
    static constexpr unsigned char sentinel_symbol = '$';
    static constexpr std::uint8_t no_rank = 0xff;

    Alphabet() = default;
    Alphabet(std::string_view symbols, bool sentinel_included);

    /// Named alphabets: dna, murphy10, iupac, protein. Symbols in byte order.
    static Alphabet named(std::string_view name, bool sentinel_included = true);
    /// One of the named alphabets by size: 4, 10, 16 or 27.
    static Alphabet of_size(unsigned sigma, bool sentinel_included = true);
    /// Distinct bytes of `text` in byte order.
    static Alphabet from_text(std::string_view text, bool sentinel_included = true);

    rank_type rank_of(unsigned char symbol) const;
    unsigned char symbol_of(rank_type rank) const;

    bool contains(unsigned char symbol) const noexcept {
        return ranks_[symbol] != no_rank;
    }

    /// Encodes `text`; throws UnknownSymbolError naming the first offending position. The
    /// sentinel symbol is rejected.
    RankString encode(std::string_view text) const;
    /// `encode(text)` followed by the sentinel rank 0. Requires sentinel_included.
    RankString encode_with_sentinel(std::string_view text) const;
    std::string decode(std::span<const std::uint8_t> ranks) const;

    const std::string& symbols() const noexcept { return symbols_; }
    unsigned sigma() const noexcept { return static_cast<unsigned>(symbols_.size()); }
    unsigned sigma_eff() const noexcept { return sigma() + (sentinel_ ? 1u : 0u); }
    bool sentinel_included() const noexcept { return sentinel_; }
    unsigned bits_per_char() const noexcept { return bits_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
        return a.symbols_ == b.symbols_ && a.sentinel_ == b.sentinel_;
    }

private:
    std::string symbols_;
    bool sentinel_ = false;
    unsigned bits_ = 0;
    std::array<std::uint8_t, 256> ranks_{};
};

/// ceil(log2(x)) for x >= 1.
constexpr unsigned ceil_log2(std::uint64_t x) noexcept {
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < x) ++bits;
    return bits;
}

}  // namespace epr
