#include "epr/text.hpp"

#include <limits>
#include <string>

namespace epr {
namespace {

// Induced sorting (Nong, Zhang & Chan). `s` must end with a unique smallest symbol.
constexpr std::uint32_t empty = std::numeric_limits<std::uint32_t>::max();

template <class Char>
class Sais {
public:
    Sais(const Char* s, std::uint32_t* sa, std::uint32_t n, std::uint32_t k)
        : s_(s), sa_(sa), n_(n), k_(k), stype_(n), bucket_(k) {}

    void run() {
        stype_[n_ - 1] = true;
        for (std::uint32_t i = n_ - 1; i-- > 0;)
            stype_[i] = s_[i] < s_[i + 1] || (s_[i] == s_[i + 1] && stype_[i + 1]);

        // Sort LMS substrings.
        std::fill(sa_, sa_ + n_, empty);
        bucket_ends();
        for (std::uint32_t i = 1; i < n_; ++i)
            if (is_lms(i)) sa_[--bucket_[s_[i]]] = i;
        induce();

        std::uint32_t n1 = 0;
        for (std::uint32_t i = 0; i < n_; ++i)
            if (is_lms(sa_[i])) sa_[n1++] = sa_[i];

        // Name the LMS substrings; names go to sa_[n1 + pos / 2].
        std::fill(sa_ + n1, sa_ + n_, empty);
        std::uint32_t names = 0;
        std::uint32_t prev = empty;
        for (std::uint32_t i = 0; i < n1; ++i) {
            const std::uint32_t pos = sa_[i];
            bool differs = false;
            for (std::uint32_t d = 0; d < n_; ++d) {
                if (prev == empty || s_[pos + d] != s_[prev + d] ||
                    stype_[pos + d] != stype_[prev + d]) {
                    differs = true;
                    break;
                }
                if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
            }
            if (differs) {
                ++names;
                prev = pos;
            }
            sa_[n1 + pos / 2] = names - 1;
        }
        for (std::uint32_t i = n_ - 1, j = n_ - 1; i >= n1; --i) {
            if (sa_[i] != empty) sa_[j--] = sa_[i];
            if (i == 0) break;
        }

        // Sort the reduced problem.
        std::uint32_t* reduced = sa_ + n_ - n1;
        if (names < n1) {
            Sais<std::uint32_t>(reduced, sa_, n1, names).run();
        } else {
            for (std::uint32_t i = 0; i < n1; ++i) sa_[reduced[i]] = i;
        }

        // Induce the final order from the sorted LMS suffixes.
        for (std::uint32_t i = 1, j = 0; i < n_; ++i)
            if (is_lms(i)) reduced[j++] = i;
        for (std::uint32_t i = 0; i < n1; ++i) sa_[i] = reduced[sa_[i]];
        std::fill(sa_ + n1, sa_ + n_, empty);
        bucket_ends();
        for (std::uint32_t i = n1; i-- > 0;) {
            const std::uint32_t j = sa_[i];
            sa_[i] = empty;
            sa_[--bucket_[s_[j]]] = j;
        }
        induce();
    }

private:
    bool is_lms(std::uint32_t i) const noexcept {
        return i != empty && i > 0 && stype_[i] && !stype_[i - 1];
    }

    void bucket_counts() {
        std::fill(bucket_.begin(), bucket_.end(), 0);
        for (std::uint32_t i = 0; i < n_; ++i) ++bucket_[s_[i]];
    }

    void bucket_starts() {
        bucket_counts();
        std::uint32_t sum = 0;
        for (auto& b : bucket_) {
            const std::uint32_t c = b;
            b = sum;
            sum += c;
        }
    }

    void bucket_ends() {
        bucket_counts();
        std::uint32_t sum = 0;
        for (auto& b : bucket_) {
            sum += b;
            b = sum;
        }
    }

    void induce() {
        bucket_starts();
        for (std::uint32_t i = 0; i < n_; ++i) {
            const std::uint32_t j = sa_[i];
            if (j != empty && j > 0 && !stype_[j - 1]) sa_[bucket_[s_[j - 1]]++] = j - 1;
        }
        bucket_ends();
        for (std::uint32_t i = n_; i-- > 0;) {
            const std::uint32_t j = sa_[i];
            if (j != empty && j > 0 && stype_[j - 1]) sa_[--bucket_[s_[j - 1]]] = j - 1;
        }
    }

    const Char* s_;
    std::uint32_t* sa_;
    std::uint32_t n_;
    std::uint32_t k_;
    std::vector<bool> stype_;
    std::vector<std::uint32_t> bucket_;
};

}  // namespace

SuffixArray build_suffix_array(std::span<const std::uint8_t> text) {
    if (text.empty() || text.back() != 0)
        throw InvalidInputError("text must end with the sentinel");
    if (std::find(text.begin(), text.end() - 1, 0) != text.end() - 1)
        throw InvalidInputError("sentinel must occur exactly once");
    if (text.size() >= empty) throw InvalidInputError("text too long for 32-bit construction");

    const auto n = static_cast<std::uint32_t>(text.size());
    std::vector<std::uint32_t> sa(n);
    if (n == 1) {
        sa[0] = 0;
    } else {
        const std::uint32_t k = *std::max_element(text.begin(), text.end()) + 1u;
        Sais<std::uint8_t>(text.data(), sa.data(), n, k).run();
    }

    SuffixArray out;
    out.positions.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) out.positions[i] = std::uint64_t{sa[i]} + 1;
    return out;
}

PackedText bwt_from_sa(std::span<const std::uint8_t> text, const SuffixArray& sa,
                       unsigned bits_per_char) {
    if (sa.size() != text.size()) throw InvalidInputError("suffix array length mismatch");
    PackedText bwt(text.size(), bits_per_char);
    const std::uint64_t n = text.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t pos = sa.positions[i];
        bwt.set(i, pos > 1 ? text[pos - 2] : text[n - 1]);
    }
    return bwt;
}

}  // namespace epr
