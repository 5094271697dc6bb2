#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsbs {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A header, config or label file is missing a field or holds a value that does not parse.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Raw payload is shorter or longer than its header declares.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, std::uintmax_t expected, std::uintmax_t actual)
        : Error(what), expected_(expected), actual_(actual) {}

    std::uintmax_t expected_bytes() const noexcept { return expected_; }
    std::uintmax_t actual_bytes() const noexcept { return actual_; }

private:
    std::uintmax_t expected_;
    std::uintmax_t actual_;
};

class UnsupportedFormatError : public Error {
public:
    using Error::Error;
};

/// Raster dimensions disagree (cube vs ground truth, or declared vs parsed).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A caller broke a precondition: length mismatch, alphabet mismatch, empty input.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Inconsistent synthetic dataset specification.
class SpecError : public Error {
public:
    using Error::Error;
};

/// A class has too few labeled pixels to be split.
class DegenerateClassError : public Error {
public:
    DegenerateClassError(const std::string& what, int label) : Error(what), label_(label) {}
    int label() const noexcept { return label_; }

private:
    int label_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace hsbs
