#include "epr/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

#include "epr/errors.hpp"

namespace epr {

Alphabet::Alphabet(std::string_view symbols, bool sentinel_included)
    : symbols_(symbols), sentinel_(sentinel_included) {
    ranks_.fill(no_rank);
    if (sigma_eff() < 2) throw InvalidInputError("alphabet needs at least two effective symbols");
    if (sigma_eff() > 256) throw InvalidInputError("alphabet too large: sigma_eff must be <= 256");
    const unsigned offset = sentinel_ ? 1 : 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto c = static_cast<unsigned char>(symbols_[i]);
        if (sentinel_ && c == sentinel_symbol)
            throw InvalidInputError("'$' is reserved for the sentinel");
        if (ranks_[c] != no_rank) throw InvalidInputError("duplicate symbol in alphabet");
        ranks_[c] = static_cast<std::uint8_t>(i + offset);
    }
    bits_ = ceil_log2(sigma_eff());
}

Alphabet Alphabet::named(std::string_view name, bool sentinel_included) {
    if (name == "dna") return Alphabet("ACGT", sentinel_included);
    // Murphy et al. 10-letter reduced amino acid alphabet, one representative per group.
    if (name == "murphy10") return Alphabet("ACEFGHKLPS", sentinel_included);
    if (name == "iupac") return Alphabet("ABCDGHKMNRSTUVWY", sentinel_included);
    if (name == "protein") return Alphabet("*ABCDEFGHIJKLMNOPQRSTUVWXYZ", sentinel_included);
    throw InvalidInputError("unknown alphabet name: " + std::string(name));
}

Alphabet Alphabet::of_size(unsigned sigma, bool sentinel_included) {
    switch (sigma) {
        case 4: return named("dna", sentinel_included);
        case 10: return named("murphy10", sentinel_included);
        case 16: return named("iupac", sentinel_included);
        case 27: return named("protein", sentinel_included);
        default: break;
    }
    throw InvalidInputError("no named alphabet of size " + std::to_string(sigma));
}

Alphabet Alphabet::from_text(std::string_view text, bool sentinel_included) {
    std::array<bool, 256> seen{};
    for (char c : text) seen[static_cast<unsigned char>(c)] = true;
    std::string symbols;
    for (unsigned c = 0; c < 256; ++c)
        if (seen[c]) symbols.push_back(static_cast<char>(c));
    return Alphabet(symbols, sentinel_included);
}

rank_type Alphabet::rank_of(unsigned char symbol) const {
    if (ranks_[symbol] != no_rank) return ranks_[symbol];
    if (sentinel_ && symbol == sentinel_symbol) return 0;
    throw UnknownSymbolError(symbol, 0);
}

unsigned char Alphabet::symbol_of(rank_type rank) const {
    if (rank >= sigma_eff()) throw std::out_of_range("rank outside the alphabet");
    if (sentinel_) {
        if (rank == 0) return sentinel_symbol;
        return static_cast<unsigned char>(symbols_[rank - 1]);
    }
    return static_cast<unsigned char>(symbols_[rank]);
}

RankString Alphabet::encode(std::string_view text) const {
    RankString out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (ranks_[c] == no_rank) throw UnknownSymbolError(c, i + 1);
        out[i] = ranks_[c];
    }
    return out;
}

RankString Alphabet::encode_with_sentinel(std::string_view text) const {
    if (!sentinel_) throw InvalidInputError("alphabet has no sentinel");
    RankString out = encode(text);
    out.push_back(0);
    return out;
}

std::string Alphabet::decode(std::span<const std::uint8_t> ranks) const {
    std::string out;
    out.reserve(ranks.size());
    for (auto r : ranks) out.push_back(static_cast<char>(symbol_of(r)));
    return out;
}

}  // namespace epr
