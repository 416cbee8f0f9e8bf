#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "epr/alphabet.hpp"
#include "epr/bi_fm_index.hpp"
#include "epr/fm_index.hpp"

namespace epr {

enum class DictKind { epr, wt };
enum class SearchMode { uni, bi };

std::string_view to_string(DictKind kind) noexcept;
std::string_view to_string(SearchMode mode) noexcept;
DictKind parse_dict_kind(std::string_view s);
SearchMode parse_search_mode(std::string_view s);

struct BenchConfig {
    unsigned sigma = 4;  ///< 4, 10, 16 or 27; the sentinel makes sigma_eff one larger
    std::uint64_t n = 1'000'000;
    std::uint64_t queries = 10'000;
    std::uint64_t length = 50;
    DictKind dict = DictKind::epr;
    SearchMode mode = SearchMode::bi;
    std::uint64_t seed = 42;
    unsigned warmup = 3;
    unsigned repetitions = 5;
    unsigned sample_rate = 10;
    EprLayout layout = EprLayout::separate;  ///< EPR only
};

/// Byte counts of an index. index_bytes() is the rank structure (BWT plus counts plus fixed
/// per-structure data), summed over both directions for bidirectional indices.
struct SpaceReport {
    std::uint64_t n = 0;
    unsigned sigma_eff = 0;
    std::uint64_t bwt_bytes = 0;
    std::uint64_t count_bytes = 0;
    std::uint64_t fixed_bytes = 0;
    std::uint64_t c_table_bytes = 0;
    std::uint64_t sample_bytes = 0;

    std::uint64_t index_bytes() const noexcept { return bwt_bytes + count_bytes + fixed_bytes; }
    /// index bits / (log2(sigma_eff) * n).
    double ratio() const noexcept {
        return static_cast<double>(index_bytes()) * 8.0 /
               (std::log2(static_cast<double>(sigma_eff)) * static_cast<double>(n));
    }
};

struct BenchReport {
    BenchConfig config;
    unsigned sigma_eff = 0;
    std::uint64_t steps = 0;           ///< extensions per repetition, counted
    double seconds = 0.0;              ///< median over measured repetitions
    std::vector<double> rep_seconds;   ///< every measured repetition
    std::uint64_t checksum = 0;        ///< sum of occurrence counts
    SpaceReport space;

    double ns_per_step() const noexcept {
        return steps == 0 ? 0.0 : seconds * 1e9 / static_cast<double>(steps);
    }
};

/// Uniform random text over the alphabet's symbols, deterministic for a seed.
std::string gen_text(const Alphabet& alphabet, std::uint64_t n, std::uint64_t seed);

/// q substrings of length m at uniformly random offsets. Throws InvalidInputError if m > n.
std::vector<std::string> sample_queries(std::string_view text, std::uint64_t q, std::uint64_t m,
                                        std::uint64_t seed);

template <RankDictionary Dict>
SpaceReport space_report(const FmIndex<Dict>& index) {
    SpaceReport r;
    const auto& d = index.dictionary();
    r.n = index.size();
    r.sigma_eff = index.alphabet().sigma_eff();
    r.bwt_bytes = d.bwt_bytes();
    r.count_bytes = d.count_bytes();
    r.fixed_bytes = d.fixed_bytes();
    r.c_table_bytes = index.counts().size() * 8;
    r.sample_bytes = index.samples().bytes();
    return r;
}

template <RankDictionary Dict>
SpaceReport space_report(const BiFmIndex<Dict>& index) {
    SpaceReport a = space_report(index.forward());
    const SpaceReport b = space_report(index.reverse());
    a.bwt_bytes += b.bwt_bytes;
    a.count_bytes += b.count_bytes;
    a.fixed_bytes += b.fixed_bytes;
    a.c_table_bytes += b.c_table_bytes;
    a.sample_bytes += b.sample_bytes;
    return a;
}

/// Builds the configured index (untimed), then times the query loop: `warmup` unmeasured
/// runs and `repetitions` measured runs, reporting the median.
BenchReport run_bench(const BenchConfig& config);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchReport& report);

}  // namespace epr
