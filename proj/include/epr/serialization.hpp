#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "epr/errors.hpp"

namespace epr {

/// Appends little-endian integers to a byte buffer.
class ByteWriter {
public:
    void put_u8(std::uint8_t v) { bytes_.push_back(v); }
    void put_u16(std::uint16_t v) { put_le(v); }
    void put_u32(std::uint32_t v) { put_le(v); }
    void put_u64(std::uint64_t v) { put_le(v); }

    void put_bytes(std::span<const std::uint8_t> data) {
        bytes_.insert(bytes_.end(), data.begin(), data.end());
    }

    /// u64 element count followed by the elements.
    template <class T>
    void put_array(std::span<const T> values) {
        static_assert(std::is_unsigned_v<T>);
        put_u64(values.size());
        for (T v : values) put_le(v);
    }

    /// u64 byte length followed by the bytes.
    void put_blob(std::span<const std::uint8_t> blob) {
        put_u64(blob.size());
        put_bytes(blob);
    }

    std::uint64_t size() const noexcept { return bytes_.size(); }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    template <class T>
    void put_le(T v) {
        for (unsigned i = 0; i < sizeof(T); ++i)
            bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    std::vector<std::uint8_t> bytes_;
};

/// Bounds-checked little-endian reader; running off the end throws TruncatedFileError.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t get_u8() { return get_le<std::uint8_t>(); }
    std::uint16_t get_u16() { return get_le<std::uint16_t>(); }
    std::uint32_t get_u32() { return get_le<std::uint32_t>(); }
    std::uint64_t get_u64() { return get_le<std::uint64_t>(); }

    std::span<const std::uint8_t> get_bytes(std::uint64_t count) {
        require(count);
        auto out = data_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    template <class T>
    std::vector<T> get_array() {
        const std::uint64_t count = get_u64();
        if (count > remaining() / sizeof(T)) throw TruncatedFileError("array runs past end of data");
        std::vector<T> out(count);
        for (auto& v : out) v = get_le<T>();
        return out;
    }

    std::span<const std::uint8_t> get_blob() { return get_bytes(get_u64()); }

    std::uint64_t position() const noexcept { return pos_; }
    std::uint64_t remaining() const noexcept { return data_.size() - pos_; }
    bool at_end() const noexcept { return pos_ == data_.size(); }

private:
    void require(std::uint64_t count) const {
        if (count > remaining()) throw TruncatedFileError("unexpected end of data");
    }

    template <class T>
    T get_le() {
        require(sizeof(T));
        T v = 0;
        for (unsigned i = 0; i < sizeof(T); ++i)
            v |= static_cast<T>(static_cast<T>(data_[pos_ + i]) << (8 * i));
        pos_ += sizeof(T);
        return v;
    }

    std::span<const std::uint8_t> data_;
    std::uint64_t pos_ = 0;
};

/// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::span<const std::uint8_t> data) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto b : data) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace epr
