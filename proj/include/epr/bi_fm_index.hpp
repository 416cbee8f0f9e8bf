#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "epr/fm_index.hpp"

namespace epr {

/// Ranges of the current infix P in the index of T and of P_rev in the index of T_rev.
/// Both are empty together and always have equal size.
struct BiSearchRange {
    SearchRange fwd;
    SearchRange rev;

    bool empty() const noexcept { return fwd.empty(); }
    std::uint64_t size() const noexcept { return fwd.size(); }

    static constexpr BiSearchRange none() noexcept { return {}; }

    friend bool operator==(const BiSearchRange&, const BiSearchRange&) = default;
};

/// Bidirectional FM index: one FM index over T, one over T_rev, extended in lockstep.
///
/// Extending P to Pc runs a backward step for c on the reverse index; the forward range is
/// then shifted by `smaller`, the number of rows of P_rev prefixed by a character below c.
/// `smaller` is a difference of two Prefix-Occ values for c - 1, so each step stays constant
/// time with the EPR dictionary.
template <RankDictionary Dict>
class BiFmIndex {
public:
    BiFmIndex() = default;

    BiFmIndex(std::span<const std::uint8_t> text, const Alphabet& alphabet,
              unsigned sample_rate = FmIndex<Dict>::default_sample_rate,
              typename Dict::Options options = {})
        : fwd_(text, alphabet, sample_rate, options) {
        const RankString reversed = reverse_text(RankString(text.begin(), text.end()));
        rev_ = FmIndex<Dict>(reversed, alphabet, sample_rate, options);
    }

    static BiFmIndex from_text(std::string_view text, const Alphabet& alphabet,
                               unsigned sample_rate = FmIndex<Dict>::default_sample_rate,
                               typename Dict::Options options = {}) {
        const RankString ranks = alphabet.encode_with_sentinel(text);
        return BiFmIndex(ranks, alphabet, sample_rate, options);
    }

    BiFmIndex(FmIndex<Dict> fwd, FmIndex<Dict> rev) : fwd_(std::move(fwd)), rev_(std::move(rev)) {
        if (!(fwd_.alphabet() == rev_.alphabet()) || fwd_.size() != rev_.size())
            throw InvalidInputError("forward and reverse indices disagree");
    }

    const FmIndex<Dict>& forward() const noexcept { return fwd_; }
    const FmIndex<Dict>& reverse() const noexcept { return rev_; }
    const Alphabet& alphabet() const noexcept { return fwd_.alphabet(); }
    std::uint64_t size() const noexcept { return fwd_.size(); }

    BiSearchRange init_range() const noexcept { return {fwd_.full_range(), rev_.full_range()}; }

    /// P -> Pc.
    BiSearchRange extend_right(BiSearchRange st, rank_type c) const noexcept {
        if (st.empty()) return st;
        const auto [rev, smaller] = step(rev_, st.rev, c);
        if (rev.empty()) return BiSearchRange::none();
        const std::uint64_t a = st.fwd.a + smaller;
        return {{a, a + (rev.b - rev.a)}, rev};
    }

    /// P -> cP.
    BiSearchRange extend_left(BiSearchRange st, rank_type c) const noexcept {
        if (st.empty()) return st;
        const auto [fwd, smaller] = step(fwd_, st.fwd, c);
        if (fwd.empty()) return BiSearchRange::none();
        const std::uint64_t a = st.rev.a + smaller;
        return {fwd, {a, a + (fwd.b - fwd.a)}};
    }

    BiSearchRange extend_right_at(BiSearchRange st, rank_type c) const {
        check_rank(c);
        return extend_right(st, c);
    }
    BiSearchRange extend_left_at(BiSearchRange st, rank_type c) const {
        check_rank(c);
        return extend_left(st, c);
    }

    std::uint64_t count(BiSearchRange st) const noexcept { return st.size(); }

    friend bool operator==(const BiFmIndex&, const BiFmIndex&) = default;

    /// The offset of cP (or Pc) inside P's range in the other index:
    /// Prefix-Occ(c - 1, b) - Prefix-Occ(c - 1, a - 1) on the stepped index.
    static std::uint64_t smaller(const FmIndex<Dict>& idx, SearchRange range, rank_type c) noexcept {
        if (c == 0 || range.empty()) return 0;
        const auto& d = idx.dictionary();
        return d.prefix_occ(c - 1, range.b) - d.prefix_occ(c - 1, range.a - 1);
    }

private:
    struct Step {
        SearchRange range;
        std::uint64_t smaller;
    };

    // Backward step for c on `idx`, plus `smaller`, from two rank pairs.
    static Step step(const FmIndex<Dict>& idx, SearchRange range, rank_type c) noexcept {
        const auto& d = idx.dictionary();
        const auto lo = d.rank_pair(c, range.a - 1);
        const auto hi = d.rank_pair(c, range.b);
        const std::uint64_t base = idx.counts()[c];
        return {{base + lo.equal + 1, base + hi.equal}, hi.smaller - lo.smaller};
    }

    void check_rank(rank_type c) const {
        if (c >= alphabet().sigma_eff()) throw std::out_of_range("rank outside the alphabet");
    }

    FmIndex<Dict> fwd_;
    FmIndex<Dict> rev_;
};

using EprBiFmIndex = BiFmIndex<EprDictionary>;
using WtBiFmIndex = BiFmIndex<WaveletTree>;

}  // namespace epr
