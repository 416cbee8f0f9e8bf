#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>

#include "epr/batch.hpp"
#include "epr/bench.hpp"
#include "epr/index_file.hpp"
#include "epr/text_io.hpp"

namespace epr::cli {
namespace {

struct BuildOptions {
    std::string input;
    std::string output;
    std::string alphabet = "auto";
    std::string format = "auto";
    std::string dict = "epr";
    bool bidirectional = false;
    bool interleaved = false;
    unsigned sample_rate = 10;
};

struct QueryOptions {
    std::string index;
    std::optional<std::string> pattern;
    std::string patterns_file;
};

struct BenchOptions {
    std::vector<unsigned> sigmas{4, 10, 16, 27};
    std::vector<std::string> dicts{"epr", "wt"};
    std::vector<std::string> modes{"bi"};
    BenchConfig config;
};

struct GenOptions {
    std::string alphabet = "dna";
    std::uint64_t n = 1'000'000;
    std::uint64_t seed = 42;
    std::string output;
};

Alphabet choose_alphabet(const std::string& choice, std::string_view text) {
    if (choice == "auto") return Alphabet::from_text(text);
    for (const char* name : {"dna", "murphy10", "iupac", "protein"})
        if (choice == name) return Alphabet::named(choice);
    return Alphabet(choice, true);
}

RankString encode_pattern(const AnyIndex& index, std::string_view p) {
    return std::visit(
        [&](const auto& x) {
            if constexpr (requires { x.forward(); }) return x.forward().encode_pattern(p);
            else return x.encode_pattern(p);
        },
        index);
}

std::uint64_t text_length(const AnyIndex& index) {
    return std::visit(
        [](const auto& x) {
            if constexpr (requires { x.forward(); }) return x.forward().size();
            else return x.size();
        },
        index);
}

int cmd_build(const BuildOptions& o, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const std::string text = read_text(o.input, parse_text_format(o.format));
    const Alphabet alphabet = choose_alphabet(o.alphabet, text);
    const DictKind kind = parse_dict_kind(o.dict);
    if (o.sample_rate == 0) throw InvalidInputError("sample rate must be positive");

    if (o.interleaved && kind != DictKind::epr)
        throw InvalidInputError("--interleaved applies to the epr dictionary only");
    const EprOptions epr_options{o.interleaved ? EprLayout::interleaved : EprLayout::separate};

    AnyIndex index = [&]() -> AnyIndex {
        if (o.bidirectional) {
            if (kind == DictKind::epr)
                return EprBiFmIndex::from_text(text, alphabet, o.sample_rate, epr_options);
            return WtBiFmIndex::from_text(text, alphabet, o.sample_rate);
        }
        if (kind == DictKind::epr) return EprFmIndex::from_text(text, alphabet, o.sample_rate, epr_options);
        return WtFmIndex::from_text(text, alphabet, o.sample_rate);
    }();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const auto bytes = serialize_index(index);
    std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open " + o.output + " for writing");
    file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!file) throw Error("failed writing " + o.output);

    out << structure_name(static_cast<StructureTag>(index.index())) << " index: n=" << text_length(index)
        << " sigma_eff=" << alphabet.sigma_eff() << " bytes=" << bytes.size() << " build_ms=" << ms
        << '\n';
    return ok;
}

std::vector<std::string> read_patterns(const QueryOptions& o) {
    std::vector<std::string> patterns;
    if (o.pattern) patterns.push_back(*o.pattern);
    if (!o.patterns_file.empty()) {
        std::ifstream in(o.patterns_file);
        if (!in) throw Error("cannot open " + o.patterns_file);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            patterns.push_back(line);
        }
    }
    return patterns;
}

int cmd_count(const QueryOptions& o, std::ostream& out) {
    const auto patterns = read_patterns(o);
    const AnyIndex index = load_index(o.index);
    std::vector<RankString> encoded;
    encoded.reserve(patterns.size());
    for (const auto& p : patterns) encoded.push_back(encode_pattern(index, p));
    const auto counts = std::visit(
        [&](const auto& x) { return count_batch_parallel(x, std::span<const RankString>(encoded)); },
        index);
    for (std::uint64_t c : counts) out << c << '\n';
    return ok;
}

int cmd_locate(const QueryOptions& o, std::ostream& out) {
    const AnyIndex index = load_index(o.index);
    const RankString p = encode_pattern(index, *o.pattern);
    const auto positions = std::visit(
        [&](const auto& x) {
            if constexpr (requires { x.forward(); }) return x.forward().locate(x.forward().find(p));
            else return x.locate(x.find(p));
        },
        index);
    for (std::uint64_t pos : positions) out << pos << '\n';
    return ok;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
    std::vector<DictKind> dicts;
    std::vector<SearchMode> modes;
    for (const auto& d : o.dicts) dicts.push_back(parse_dict_kind(d));
    for (const auto& m : o.modes) modes.push_back(parse_search_mode(m));
    for (unsigned s : o.sigmas) Alphabet::of_size(s);

    write_csv_header(out);
    for (unsigned sigma : o.sigmas)
        for (DictKind d : dicts)
            for (SearchMode m : modes) {
                BenchConfig c = o.config;
                c.sigma = sigma;
                c.dict = d;
                c.mode = m;
                write_csv_row(out, run_bench(c));
                out.flush();
            }
    return ok;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
    const Alphabet alphabet = choose_alphabet(o.alphabet, "");
    const std::string text = gen_text(alphabet, o.n, o.seed);
    if (o.output.empty()) {
        out << text << '\n';
        return ok;
    }
    std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open " + o.output + " for writing");
    file << text << '\n';
    if (!file) throw Error("failed writing " + o.output);
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Succinct FM index: build, query and benchmark"};
    app.name("epr");
    app.require_subcommand(1);

    BuildOptions build;
    auto* b = app.add_subcommand("build", "Build an index from a text file");
    b->add_option("input", build.input, "Text file (raw bytes or FASTA)")->required();
    b->add_option("-o,--output", build.output, "Index file to write")->required();
    b->add_option("-a,--alphabet", build.alphabet,
                  "dna, murphy10, iupac, protein, auto, or the symbols themselves")
        ->capture_default_str();
    b->add_option("-f,--format", build.format, "auto, raw or fasta")->capture_default_str();
    b->add_option("-d,--dict", build.dict, "epr or wt")->capture_default_str();
    b->add_flag("-b,--bidirectional", build.bidirectional, "Build a bidirectional index");
    b->add_flag("--interleaved", build.interleaved, "Store EPR block counts next to the BWT words");
    b->add_option("-s,--sample-rate", build.sample_rate, "Suffix array sampling rate")
        ->capture_default_str();

    QueryOptions count;
    auto* c = app.add_subcommand("count", "Count pattern occurrences, one line per pattern");
    c->add_option("index", count.index, "Index file")->required();
    c->add_option("pattern", count.pattern, "Pattern");
    c->add_option("-p,--patterns-file", count.patterns_file, "File with one pattern per line");

    QueryOptions locate;
    auto* l = app.add_subcommand("locate", "Print sorted 1-based occurrence positions");
    l->add_option("index", locate.index, "Index file")->required();
    l->add_option("pattern", locate.pattern, "Pattern")->required();

    BenchOptions bench;
    auto* be = app.add_subcommand("bench", "Time random searches and print CSV");
    be->add_option("--sigma", bench.sigmas, "Alphabet sizes (4, 10, 16, 27)")
        ->delimiter(',')
        ->capture_default_str();
    be->add_option("--dict", bench.dicts, "Dictionaries (epr, wt)")->delimiter(',')->capture_default_str();
    be->add_option("--mode", bench.modes, "Search modes (uni, bi)")->delimiter(',')->capture_default_str();
    be->add_option("-n,--length", bench.config.n, "Text length")->capture_default_str();
    be->add_option("-q,--queries", bench.config.queries, "Queries per repetition")->capture_default_str();
    be->add_option("-m,--pattern-length", bench.config.length, "Pattern length")->capture_default_str();
    be->add_option("--seed", bench.config.seed, "Random seed")->capture_default_str();
    be->add_option("--warmup", bench.config.warmup, "Unmeasured repetitions")->capture_default_str();
    be->add_option("--reps", bench.config.repetitions, "Measured repetitions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    be->add_option("-s,--sample-rate", bench.config.sample_rate, "Suffix array sampling rate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    be->add_flag_callback(
        "--interleaved", [&bench] { bench.config.layout = EprLayout::interleaved; },
        "Use the interleaved EPR layout");

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "Write a uniform random text");
    g->add_option("-a,--alphabet", gen.alphabet, "dna, murphy10, iupac, protein, or the symbols")
        ->capture_default_str();
    g->add_option("-n,--length", gen.n, "Text length")->capture_default_str();
    g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    g->add_option("-o,--output", gen.output, "Output file (default standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (c->parsed() && !count.pattern && count.patterns_file.empty())
            throw CLI::ValidationError("count", "needs a pattern or --patterns-file");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (b->parsed()) return cmd_build(build, out);
        if (c->parsed()) return cmd_count(count, out);
        if (l->parsed()) return cmd_locate(locate, out);
        if (be->parsed()) return cmd_bench(bench, out);
        return cmd_gen(gen, out);
    } catch (const IndexFormatError& e) {
        err << "error: corrupt index: " << e.what() << '\n';
        return corrupt_index;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return data;
    }
}

}  // namespace epr::cli
