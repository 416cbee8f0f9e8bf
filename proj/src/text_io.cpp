#include "epr/text_io.hpp"

#include <fstream>
#include <iterator>

#include "epr/errors.hpp"

namespace epr {

TextFormat parse_text_format(std::string_view s) {
    if (s == "auto") return TextFormat::automatic;
    if (s == "raw") return TextFormat::raw;
    if (s == "fasta") return TextFormat::fasta;
    throw InvalidInputError("unknown text format: " + std::string(s));
}

std::string parse_fasta(std::string_view data) {
    std::string out;
    out.reserve(data.size());
    std::size_t pos = 0;
    while (pos < data.size()) {
        std::size_t end = data.find('\n', pos);
        if (end == std::string_view::npos) end = data.size();
        const std::string_view line = data.substr(pos, end - pos);
        if (line.empty() || (line.front() != '>' && line.front() != ';'))
            for (char c : line)
                if (c != ' ' && c != '\t' && c != '\r' && c != '\v' && c != '\f') out.push_back(c);
        pos = end + 1;
    }
    return out;
}

std::string parse_raw(std::string_view data) {
    if (data.ends_with("\r\n")) data.remove_suffix(2);
    else if (data.ends_with('\n')) data.remove_suffix(1);
    return std::string(data);
}

std::string parse_text(std::string_view data, TextFormat format) {
    if (format == TextFormat::automatic) {
        const std::size_t first = data.find_first_not_of(" \t\r\n");
        format = first != std::string_view::npos && data[first] == '>' ? TextFormat::fasta
                                                                      : TextFormat::raw;
    }
    return format == TextFormat::fasta ? parse_fasta(data) : parse_raw(data);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error("failed reading " + path.string());
    return data;
}

std::string read_text(const std::filesystem::path& path, TextFormat format) {
    return parse_text(read_file(path), format);
}

}  // namespace epr
