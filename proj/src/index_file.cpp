#include "epr/index_file.hpp"

#include <fstream>
#include <iterator>

namespace epr {
namespace {

template <class T>
constexpr StructureTag tag_of() {
    if constexpr (std::is_same_v<T, EprFmIndex>) return StructureTag::epr_uni;
    else if constexpr (std::is_same_v<T, WtFmIndex>) return StructureTag::wt_uni;
    else if constexpr (std::is_same_v<T, EprBiFmIndex>) return StructureTag::epr_bi;
    else return StructureTag::wt_bi;
}

void write_alphabet(ByteWriter& out, const Alphabet& alphabet) {
    out.put_u8(alphabet.sentinel_included() ? 1 : 0);
    out.put_u8(static_cast<std::uint8_t>(alphabet.bits_per_char()));
    out.put_u16(static_cast<std::uint16_t>(alphabet.sigma()));
    const auto& s = alphabet.symbols();
    out.put_bytes({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

Alphabet read_alphabet(ByteReader& in) {
    const std::uint8_t sentinel = in.get_u8();
    const std::uint8_t bits = in.get_u8();
    const std::uint16_t sigma = in.get_u16();
    const auto symbols = in.get_bytes(sigma);
    if (sentinel > 1) throw IndexFormatError("invalid sentinel flag");
    Alphabet alphabet;
    try {
        alphabet = Alphabet({reinterpret_cast<const char*>(symbols.data()), symbols.size()},
                            sentinel == 1);
    } catch (const InvalidInputError& e) {
        throw IndexFormatError(std::string("invalid alphabet descriptor: ") + e.what());
    }
    if (alphabet.bits_per_char() != bits) throw IndexFormatError("alphabet bit width mismatch");
    return alphabet;
}

template <class Index>
std::vector<std::uint8_t> fm_blob(const Index& idx) {
    ByteWriter w;
    idx.write(w);
    return w.take();
}

template <RankDictionary Dict>
FmIndex<Dict> read_fm_blob(std::span<const std::uint8_t> blob, const Alphabet& alphabet,
                           std::uint64_t n) {
    ByteReader r(blob);
    auto idx = FmIndex<Dict>::read(r, alphabet);
    if (!r.at_end()) throw IndexFormatError("trailing bytes after FM index");
    if (idx.size() != n) throw IndexFormatError("FM index length does not match header");
    return idx;
}

}  // namespace

std::string_view structure_name(StructureTag tag) noexcept {
    switch (tag) {
        case StructureTag::epr_uni: return "EPR-uni";
        case StructureTag::wt_uni: return "WT-uni";
        case StructureTag::epr_bi: return "EPR-bi";
        case StructureTag::wt_bi: return "WT-bi";
    }
    return "unknown";
}

std::vector<std::uint8_t> serialize_index(const AnyIndex& index) {
    ByteWriter out;
    out.put_bytes(index_format::magic);
    out.put_u32(index_format::version);
    out.put_u32(index_format::endianness_tag);
    std::visit(
        [&](const auto& idx) {
            using T = std::decay_t<decltype(idx)>;
            write_alphabet(out, idx.alphabet());
            out.put_u8(static_cast<std::uint8_t>(tag_of<T>()));
            out.put_u64(idx.size());
            out.put_u8(static_cast<std::uint8_t>(idx.alphabet().bits_per_char()));
            if constexpr (tag_of<T>() == StructureTag::epr_uni ||
                          tag_of<T>() == StructureTag::wt_uni) {
                out.put_u32(1);
                out.put_blob(fm_blob(idx));
            } else {
                out.put_u32(2);
                out.put_blob(fm_blob(idx.forward()));
                out.put_blob(fm_blob(idx.reverse()));
            }
        },
        index);
    out.put_u64(fnv1a64(out.bytes()));
    return out.take();
}

AnyIndex deserialize_index(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);
    const auto magic = in.get_bytes(4);
    if (!std::equal(magic.begin(), magic.end(), std::begin(index_format::magic)))
        throw BadMagicError("not an index file (bad magic)");
    const std::uint32_t version = in.get_u32();
    if (version != index_format::version)
        throw VersionMismatchError("unsupported index format version " + std::to_string(version));
    if (in.get_u32() != index_format::endianness_tag)
        throw IndexFormatError("unexpected endianness tag");

    const Alphabet alphabet = read_alphabet(in);
    const std::uint8_t tag = in.get_u8();
    const std::uint64_t n = in.get_u64();
    const std::uint8_t bits = in.get_u8();
    const std::uint32_t blob_count = in.get_u32();
    if (blob_count > 2) throw IndexFormatError("unexpected blob count");
    std::vector<std::span<const std::uint8_t>> blobs;
    for (std::uint32_t k = 0; k < blob_count; ++k) blobs.push_back(in.get_blob());

    const std::uint64_t covered = in.position();
    const std::uint64_t stored = in.get_u64();
    if (!in.at_end()) throw IndexFormatError("trailing bytes after checksum");
    if (fnv1a64(bytes.first(covered)) != stored)
        throw ChecksumMismatchError("index checksum mismatch");

    if (bits != alphabet.bits_per_char()) throw IndexFormatError("header bit width mismatch");
    if (tag > 3) throw IndexFormatError("unknown structure tag " + std::to_string(tag));
    const auto structure = static_cast<StructureTag>(tag);
    const bool bidirectional =
        structure == StructureTag::epr_bi || structure == StructureTag::wt_bi;
    if (blob_count != (bidirectional ? 2u : 1u))
        throw IndexFormatError("blob count does not match structure tag");

    switch (structure) {
        case StructureTag::epr_uni:
            return read_fm_blob<EprDictionary>(blobs[0], alphabet, n);
        case StructureTag::wt_uni:
            return read_fm_blob<WaveletTree>(blobs[0], alphabet, n);
        case StructureTag::epr_bi:
            return EprBiFmIndex(read_fm_blob<EprDictionary>(blobs[0], alphabet, n),
                                read_fm_blob<EprDictionary>(blobs[1], alphabet, n));
        case StructureTag::wt_bi:
            return WtBiFmIndex(read_fm_blob<WaveletTree>(blobs[0], alphabet, n),
                               read_fm_blob<WaveletTree>(blobs[1], alphabet, n));
    }
    throw IndexFormatError("unknown structure tag");
}

void save_index(const std::filesystem::path& path, const AnyIndex& index) {
    const auto bytes = serialize_index(index);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("failed writing " + path.string());
}

AnyIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return deserialize_index(bytes);
}

}  // namespace epr
