#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace epr {

enum class TextFormat { automatic, raw, fasta };

TextFormat parse_text_format(std::string_view s);

/// Sequence lines concatenated, '>' and ';' header lines dropped, whitespace removed.
std::string parse_fasta(std::string_view data);

/// Raw bytes minus one trailing line terminator ("\n" or "\r\n").
std::string parse_raw(std::string_view data);

/// `automatic` picks FASTA when the first non-blank byte is '>'.
std::string parse_text(std::string_view data, TextFormat format);

std::string read_file(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path, TextFormat format);

}  // namespace epr
