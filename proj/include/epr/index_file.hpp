#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "epr/bi_fm_index.hpp"
#include "epr/fm_index.hpp"

namespace epr {

/// Any persisted index. The variant index doubles as the structure tag in the file.
using AnyIndex = std::variant<EprFmIndex, WtFmIndex, EprBiFmIndex, WtBiFmIndex>;

enum class StructureTag : std::uint8_t { epr_uni = 0, wt_uni = 1, epr_bi = 2, wt_bi = 3 };

std::string_view structure_name(StructureTag tag) noexcept;

/// Index file layout, all integers little-endian:
///
///   magic "EPRX" | u32 version | u32 endianness tag 0x01020304
///   alphabet: u8 sentinel flag | u8 bits per char | u16 symbol count | symbol bytes
///   u8 structure tag | u64 n | u8 bits per char
///   u32 blob count | blobs, each u64 length + bytes (one FM index blob, two for bidirectional)
///   u64 FNV-1a checksum of every preceding byte
///
/// An FM index blob is three length-prefixed blobs: dictionary, C table, suffix array samples.
namespace index_format {
inline constexpr std::uint8_t magic[4] = {'E', 'P', 'R', 'X'};
inline constexpr std::uint32_t version = 1;
inline constexpr std::uint32_t endianness_tag = 0x01020304;
}  // namespace index_format

std::vector<std::uint8_t> serialize_index(const AnyIndex& index);
/// Throws BadMagicError, VersionMismatchError, TruncatedFileError, ChecksumMismatchError or
/// IndexFormatError.
AnyIndex deserialize_index(std::span<const std::uint8_t> bytes);

void save_index(const std::filesystem::path& path, const AnyIndex& index);
AnyIndex load_index(const std::filesystem::path& path);

}  // namespace epr
