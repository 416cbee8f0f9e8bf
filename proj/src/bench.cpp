#include "epr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>

#include "epr/batch.hpp"
#include "epr/errors.hpp"

namespace epr {
namespace {

using Clock = std::chrono::steady_clock;

template <class Index, class Search>
BenchReport time_queries(const BenchConfig& config, const Index& index,
                         const std::vector<RankString>& queries, Search search) {
    BenchReport report;
    report.config = config;
    report.sigma_eff = index.alphabet().sigma_eff();
    report.space = space_report(index);

    bool first = true;
    for (unsigned rep = 0; rep < config.warmup + config.repetitions; ++rep) {
        std::uint64_t steps = 0;
        std::uint64_t checksum = 0;
        const auto start = Clock::now();
        for (const auto& q : queries) checksum += search(index, q, steps);
        const auto stop = Clock::now();
        if (first) {
            report.steps = steps;
            report.checksum = checksum;
            first = false;
        } else if (steps != report.steps || checksum != report.checksum) {
            throw Error("benchmark repetitions disagree");
        }
        if (rep >= config.warmup)
            report.rep_seconds.push_back(std::chrono::duration<double>(stop - start).count());
    }
    if (!report.rep_seconds.empty()) {
        std::vector<double> sorted = report.rep_seconds;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t mid = sorted.size() / 2;
        report.seconds =
            sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    }
    return report;
}

template <RankDictionary Dict>
BenchReport run_with(const BenchConfig& config, const Alphabet& alphabet, const RankString& text,
                     const std::vector<RankString>& queries, typename Dict::Options options = {}) {
    if (config.mode == SearchMode::uni) {
        const FmIndex<Dict> index(text, alphabet, config.sample_rate, options);
        return time_queries(config, index, queries,
                            [](const FmIndex<Dict>& idx, const RankString& q, std::uint64_t& steps) {
                                SearchRange range = idx.full_range();
                                for (auto it = q.rbegin(); it != q.rend() && !range.empty(); ++it) {
                                    range = idx.backward_extend(range, *it);
                                    ++steps;
                                }
                                return range.size();
                            });
    }
    const BiFmIndex<Dict> index(text, alphabet, config.sample_rate, options);
    return time_queries(config, index, queries,
                        [](const BiFmIndex<Dict>& idx, const RankString& q, std::uint64_t& steps) {
                            return search_from_middle(idx, q, steps).size();
                        });
}

}  // namespace

std::string_view to_string(DictKind kind) noexcept {
    return kind == DictKind::epr ? "epr" : "wt";
}

std::string_view to_string(SearchMode mode) noexcept {
    return mode == SearchMode::uni ? "uni" : "bi";
}

DictKind parse_dict_kind(std::string_view s) {
    if (s == "epr") return DictKind::epr;
    if (s == "wt") return DictKind::wt;
    throw InvalidInputError("unknown dictionary kind: " + std::string(s));
}

SearchMode parse_search_mode(std::string_view s) {
    if (s == "uni") return SearchMode::uni;
    if (s == "bi") return SearchMode::bi;
    throw InvalidInputError("unknown search mode: " + std::string(s));
}

std::string gen_text(const Alphabet& alphabet, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) throw InvalidInputError("text length must be positive");
    std::mt19937_64 rng(seed);
    const std::string& symbols = alphabet.symbols();
    std::string text(n, '\0');
    for (auto& c : text) c = symbols[rng() % symbols.size()];
    return text;
}

std::vector<std::string> sample_queries(std::string_view text, std::uint64_t q, std::uint64_t m,
                                        std::uint64_t seed) {
    if (m > text.size()) throw InvalidInputError("query length exceeds text length");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const std::uint64_t offsets = text.size() - m + 1;
    std::vector<std::string> out;
    out.reserve(q);
    for (std::uint64_t k = 0; k < q; ++k) out.emplace_back(text.substr(rng() % offsets, m));
    return out;
}

BenchReport run_bench(const BenchConfig& config) {
    if (config.length == 0) throw InvalidInputError("query length must be positive");
    const Alphabet alphabet = Alphabet::of_size(config.sigma);
    const std::string text = gen_text(alphabet, config.n, config.seed);
    const RankString ranks = alphabet.encode_with_sentinel(text);
    std::vector<RankString> queries;
    for (const auto& q : sample_queries(text, config.queries, config.length, config.seed))
        queries.push_back(alphabet.encode(q));

    if (config.dict == DictKind::epr)
        return run_with<EprDictionary>(config, alphabet, ranks, queries, {config.layout});
    return run_with<WaveletTree>(config, alphabet, ranks, queries);
}

void write_csv_header(std::ostream& out) {
    out << "dict,sigma_eff,n,q,m,mode,steps,ns_per_step,index_bytes,ratio,checksum\n";
}

void write_csv_row(std::ostream& out, const BenchReport& r) {
    const auto flags = out.flags();
    out << to_string(r.config.dict) << ',' << r.sigma_eff << ',' << r.config.n << ','
        << r.config.queries << ',' << r.config.length << ',' << to_string(r.config.mode) << ','
        << r.steps << ',' << std::fixed << std::setprecision(3) << r.ns_per_step() << ','
        << r.space.index_bytes() << ',' << std::setprecision(4) << r.space.ratio() << ','
        << r.checksum << '\n';
    out.flags(flags);
}

}  // namespace epr
