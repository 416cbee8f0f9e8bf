#pragma once

#include <cstdint>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "epr/bi_fm_index.hpp"
#include "epr/fm_index.hpp"

namespace epr {

/// Searches `pattern` the way the bidirectional benchmark does: the right half
/// (ceil(m/2) characters, starting at the middle) by forward steps, then the left half by
/// backward steps. `steps` receives the number of extensions performed.
template <RankDictionary Dict>
BiSearchRange search_from_middle(const BiFmIndex<Dict>& index, std::span<const std::uint8_t> pattern,
                                 std::uint64_t& steps) noexcept {
    BiSearchRange st = index.init_range();
    const std::size_t mid = pattern.size() / 2;
    for (std::size_t j = mid; j < pattern.size() && !st.empty(); ++j, ++steps)
        st = index.extend_right(st, pattern[j]);
    for (std::size_t j = mid; j-- > 0 && !st.empty(); ++steps)
        st = index.extend_left(st, pattern[j]);
    return st;
}

template <RankDictionary Dict>
std::uint64_t count_pattern(const FmIndex<Dict>& index, std::span<const std::uint8_t> pattern) noexcept {
    return index.count(pattern);
}

template <RankDictionary Dict>
std::uint64_t count_pattern(const BiFmIndex<Dict>& index, std::span<const std::uint8_t> pattern) noexcept {
    std::uint64_t steps = 0;
    return search_from_middle(index, pattern, steps).size();
}

/// Occurrence counts for a batch of encoded patterns. Reference loop.
template <class Index>
std::vector<std::uint64_t> count_batch_serial(const Index& index,
                                              std::span<const RankString> patterns) {
    std::vector<std::uint64_t> counts(patterns.size());
    for (std::size_t k = 0; k < patterns.size(); ++k) counts[k] = count_pattern(index, patterns[k]);
    return counts;
}

/// Same result as count_batch_serial, patterns spread over OpenMP threads.
template <class Index>
std::vector<std::uint64_t> count_batch_parallel(const Index& index,
                                                std::span<const RankString> patterns) {
    std::vector<std::uint64_t> counts(patterns.size());
    const auto total = static_cast<std::int64_t>(patterns.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t k = 0; k < total; ++k) counts[k] = count_pattern(index, patterns[k]);
    return counts;
}

/// Sorted occurrence positions per pattern. Reference loop.
template <RankDictionary Dict>
std::vector<std::vector<std::uint64_t>> locate_batch_serial(const FmIndex<Dict>& index,
                                                            std::span<const RankString> patterns) {
    std::vector<std::vector<std::uint64_t>> out(patterns.size());
    for (std::size_t k = 0; k < patterns.size(); ++k) out[k] = index.locate(index.find(patterns[k]));
    return out;
}

template <RankDictionary Dict>
std::vector<std::vector<std::uint64_t>> locate_batch_parallel(
    const FmIndex<Dict>& index, std::span<const RankString> patterns) {
    std::vector<std::vector<std::uint64_t>> out(patterns.size());
    const auto total = static_cast<std::int64_t>(patterns.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < total; ++k) out[k] = index.locate(index.find(patterns[k]));
    return out;
}

inline int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace epr
