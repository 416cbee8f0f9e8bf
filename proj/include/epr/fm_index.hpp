#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "epr/alphabet.hpp"
#include "epr/epr_dictionary.hpp"
#include "epr/errors.hpp"
#include "epr/sampled_sa.hpp"
#include "epr/serialization.hpp"
#include "epr/text.hpp"
#include "epr/wavelet_tree.hpp"

namespace epr {

/// Occ / Prefix-Occ provider over a BWT. EprDictionary and WaveletTree both model it.
template <class D>
concept RankDictionary = requires(const D& d, rank_type c, std::uint64_t i, ByteWriter& w,
                                  ByteReader& r, const PackedText& bwt, typename D::Options o) {
    { d.size() } -> std::convertible_to<std::uint64_t>;
    { d.sigma_eff() } -> std::convertible_to<unsigned>;
    { d.occ(c, i) } -> std::convertible_to<std::uint64_t>;
    { d.prefix_occ(c, i) } -> std::convertible_to<std::uint64_t>;
    { d.rank_pair(c, i).smaller } -> std::convertible_to<std::uint64_t>;
    { d.rank_pair(c, i).equal } -> std::convertible_to<std::uint64_t>;
    { d.access(i) } -> std::convertible_to<rank_type>;
    { d.bwt_bytes() } -> std::convertible_to<std::uint64_t>;
    { d.count_bytes() } -> std::convertible_to<std::uint64_t>;
    { d.fixed_bytes() } -> std::convertible_to<std::uint64_t>;
    d.write(w);
    { D::read(r, 2u) } -> std::same_as<D>;
    D(bwt, 2u, o);
};

/// 1-based inclusive range of rows in suffix order. Empty iff a > b.
struct SearchRange {
    std::uint64_t a = 1;
    std::uint64_t b = 0;

    bool empty() const noexcept { return a > b; }
    std::uint64_t size() const noexcept { return empty() ? 0 : b - a + 1; }

    friend bool operator==(const SearchRange&, const SearchRange&) = default;
};

/// Unidirectional FM index: C table, rank dictionary and text-sampled suffix array.
template <RankDictionary Dict>
class FmIndex {
public:
    static constexpr unsigned default_sample_rate = 10;

    FmIndex() = default;

    /// `text` is a rank string ending with the sentinel (rank 0) over `alphabet`.
    FmIndex(std::span<const std::uint8_t> text, const Alphabet& alphabet,
            unsigned sample_rate = default_sample_rate, typename Dict::Options options = {})
        : FmIndex(text, build_suffix_array(text), alphabet, sample_rate, options) {}

    FmIndex(std::span<const std::uint8_t> text, const SuffixArray& sa, const Alphabet& alphabet,
            unsigned sample_rate, typename Dict::Options options = {})
        : alphabet_(alphabet),
          dict_(bwt_from_sa(text, sa, alphabet.bits_per_char()), alphabet.sigma_eff(), options),
          samples_(sa, sample_rate) {
        if (!alphabet.sentinel_included())
            throw InvalidInputError("FM index alphabets must include the sentinel");
        build_counts_table();
    }

    static FmIndex from_text(std::string_view text, const Alphabet& alphabet,
                             unsigned sample_rate = default_sample_rate,
                             typename Dict::Options options = {}) {
        const RankString ranks = alphabet.encode_with_sentinel(text);
        return FmIndex(ranks, alphabet, sample_rate, options);
    }

    std::uint64_t size() const noexcept { return dict_.size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Dict& dictionary() const noexcept { return dict_; }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    const SampledSuffixArray& samples() const noexcept { return samples_; }

    SearchRange full_range() const noexcept { return {1, size()}; }

    /// Range of cP from the range of P.
    SearchRange backward_extend(SearchRange range, rank_type c) const noexcept {
        if (range.empty()) return range;
        return {counts_[c] + dict_.occ(c, range.a - 1) + 1, counts_[c] + dict_.occ(c, range.b)};
    }

    SearchRange backward_extend_at(SearchRange range, rank_type c) const {
        if (c >= alphabet_.sigma_eff()) throw std::out_of_range("rank outside the alphabet");
        return backward_extend(range, c);
    }

    /// Throws InvalidInputError for the sentinel and UnknownSymbolError for other symbols.
    RankString encode_pattern(std::string_view pattern) const {
        if (alphabet_.sentinel_included()) {
            const auto pos = pattern.find(static_cast<char>(Alphabet::sentinel_symbol));
            if (pos != std::string_view::npos)
                throw InvalidInputError("pattern contains the sentinel at position " +
                                        std::to_string(pos + 1));
        }
        return alphabet_.encode(pattern);
    }

    SearchRange find(std::span<const std::uint8_t> pattern) const noexcept {
        SearchRange range = full_range();
        for (auto it = pattern.rbegin(); it != pattern.rend() && !range.empty(); ++it)
            range = backward_extend(range, *it);
        return range;
    }

    SearchRange find(std::string_view pattern) const { return find(encode_pattern(pattern)); }

    std::uint64_t count(std::string_view pattern) const { return find(pattern).size(); }
    std::uint64_t count(std::span<const std::uint8_t> pattern) const noexcept {
        return find(pattern).size();
    }

    /// LF(i) = C[L[i]] + Occ(L[i], i).
    std::uint64_t lf(std::uint64_t row) const noexcept {
        const rank_type c = dict_.access(row);
        return counts_[c] + dict_.occ(c, row);
    }

    /// Text position of a 1-based row: walk LF to the nearest sample.
    std::uint64_t locate_row(std::uint64_t row) const noexcept {
        std::uint64_t steps = 0;
        while (!samples_.is_sampled(row)) {
            row = lf(row);
            ++steps;
        }
        return samples_.value(row) + steps;
    }

    /// Sorted 1-based text positions of all rows in `range`.
    std::vector<std::uint64_t> locate(SearchRange range) const {
        std::vector<std::uint64_t> out;
        if (range.empty()) return out;
        if (range.b > size()) throw std::out_of_range("range past the end of the index");
        out.reserve(range.size());
        for (std::uint64_t row = range.a; row <= range.b; ++row) out.push_back(locate_row(row));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<std::uint64_t> locate(std::string_view pattern) const {
        return locate(find(pattern));
    }

    /// Reconstructs T (including the sentinel) by walking LF from the sentinel row.
    RankString invert() const {
        const std::uint64_t n = size();
        RankString text(n);
        text[n - 1] = 0;
        std::uint64_t row = 1;  // the suffix "$"
        for (std::uint64_t j = n - 1; j-- > 0;) {
            const rank_type c = dict_.access(row);
            text[j] = static_cast<std::uint8_t>(c);
            row = counts_[c] + dict_.occ(c, row);
        }
        return text;
    }

    void write(ByteWriter& out) const {
        ByteWriter dict;
        dict_.write(dict);
        out.put_blob(dict.bytes());
        ByteWriter counts;
        counts.put_array(std::span<const std::uint64_t>(counts_));
        out.put_blob(counts.bytes());
        ByteWriter samples;
        samples_.write(samples);
        out.put_blob(samples.bytes());
    }

    static FmIndex read(ByteReader& in, const Alphabet& alphabet) {
        FmIndex idx;
        idx.alphabet_ = alphabet;
        ByteReader dict(in.get_blob());
        idx.dict_ = Dict::read(dict, alphabet.sigma_eff());
        ByteReader counts(in.get_blob());
        idx.counts_ = counts.get_array<std::uint64_t>();
        ByteReader samples(in.get_blob());
        idx.samples_ = SampledSuffixArray::read(samples);
        if (!dict.at_end() || !counts.at_end() || !samples.at_end())
            throw IndexFormatError("trailing bytes in FM index blob");
        if (idx.counts_.size() != alphabet.sigma_eff())
            throw IndexFormatError("C table size does not match the alphabet");
        return idx;
    }

    friend bool operator==(const FmIndex&, const FmIndex&) = default;

private:
    void build_counts_table() {
        const unsigned sigma = alphabet_.sigma_eff();
        counts_.assign(sigma, 0);
        for (rank_type c = 1; c < sigma; ++c) counts_[c] = dict_.prefix_occ(c - 1, size());
    }

    Alphabet alphabet_;
    Dict dict_;
    std::vector<std::uint64_t> counts_;
    SampledSuffixArray samples_;
};

using EprFmIndex = FmIndex<EprDictionary>;
using WtFmIndex = FmIndex<WaveletTree>;

}  // namespace epr
