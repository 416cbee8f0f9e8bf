#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace epr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A symbol outside the alphabet. `position` is 1-based, 0 when there is no position.
class UnknownSymbolError : public Error {
public:
    UnknownSymbolError(unsigned char symbol, std::uint64_t position)
        : Error("symbol '" + printable(symbol) + "'" +
                (position ? " at position " + std::to_string(position) : std::string()) +
                " is not part of the alphabet"),
          symbol_(symbol), position_(position) {}

    unsigned char symbol() const noexcept { return symbol_; }
    std::uint64_t position() const noexcept { return position_; }

private:
    static std::string printable(unsigned char c) {
        if (c >= 0x20 && c < 0x7f) return std::string(1, static_cast<char>(c));
        static constexpr char hex[] = "0123456789abcdef";
        return std::string{'\\', 'x', hex[c >> 4], hex[c & 15]};
    }

    unsigned char symbol_;
    std::uint64_t position_;
};

/// Input violates a documented precondition (missing sentinel, sentinel inside a pattern, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Index file problems. Each failure mode has its own type so callers can tell them apart.
class IndexFormatError : public Error {
public:
    using Error::Error;
};

class BadMagicError : public IndexFormatError {
public:
    using IndexFormatError::IndexFormatError;
};

class VersionMismatchError : public IndexFormatError {
public:
    using IndexFormatError::IndexFormatError;
};

class TruncatedFileError : public IndexFormatError {
public:
    using IndexFormatError::IndexFormatError;
};

class ChecksumMismatchError : public IndexFormatError {
public:
    using IndexFormatError::IndexFormatError;
};

}  // namespace epr
