#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsbs/cube.hpp"

namespace hsbs {

enum class Interleave { bsq, bil, bip };

/// ENVI `data type` codes understood by the loader.
enum class SampleType : int { u8 = 1, i16 = 2, f32 = 4, u16 = 12 };

enum class ByteOrder : int { little = 0, big = 1 };

std::size_t sample_size(SampleType type);
std::string_view to_string(Interleave interleave);

struct EnviHeader {
    std::size_t samples = 0;  // width
    std::size_t lines = 0;    // height
    std::size_t bands = 0;
    Interleave interleave = Interleave::bsq;
    SampleType data_type = SampleType::u16;
    ByteOrder byte_order = ByteOrder::little;
    std::size_t header_offset = 0;
    /// Value of the optional `data file` key, empty when absent.
    std::string data_file;

    std::size_t payload_bytes() const { return samples * lines * bands * sample_size(data_type); }
};

/// Throws FormatError naming the missing or garbled field and
/// UnsupportedFormatError for data type codes outside {1, 2, 4, 12}.
EnviHeader parse_envi_header(std::string_view text);

/// Locates the raw file for a header: the `data file` key if present, else the
/// header path without `.hdr`, else that stem with .img/.raw/.dat/.bsq/.bil/.bip.
std::filesystem::path resolve_data_file(const std::filesystem::path& header_path, const EnviHeader& header);

/// Decodes a raw payload (without header offset) into a band-major cube.
HyperCube decode_cube(std::span<const unsigned char> payload, const EnviHeader& header);

HyperCube load_cube(const std::filesystem::path& header_path);

struct CubeWriteOptions {
    Interleave interleave = Interleave::bsq;
    SampleType data_type = SampleType::f32;
    ByteOrder byte_order = ByteOrder::little;
};

/// Encodes a cube into a raw payload. Throws ContractError when a sample is not
/// representable in the requested integer type.
std::vector<unsigned char> encode_cube(const HyperCube& cube, const CubeWriteOptions& options);

std::string format_envi_header(const HyperCube& cube, const CubeWriteOptions& options,
                               std::string_view data_file = {});

/// Writes `<header_path>` plus the raw payload next to it (`.hdr` replaced by `.raw`).
void write_cube(const HyperCube& cube, const std::filesystem::path& header_path,
                const CubeWriteOptions& options = {});

}  // namespace hsbs
