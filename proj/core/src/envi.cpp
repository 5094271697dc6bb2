#include "hsbs/envi.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>

#include "hsbs/error.hpp"
#include "hsbs/io.hpp"
#include "hsbs/key_value.hpp"

namespace hsbs {

std::size_t sample_size(SampleType type) {
    switch (type) {
        case SampleType::u8: return 1;
        case SampleType::i16: return 2;
        case SampleType::u16: return 2;
        case SampleType::f32: return 4;
    }
    throw UnsupportedFormatError("unknown sample type");
}

std::string_view to_string(Interleave interleave) {
    switch (interleave) {
        case Interleave::bsq: return "bsq";
        case Interleave::bil: return "bil";
        case Interleave::bip: return "bip";
    }
    return "?";
}

namespace {

std::size_t positive_field(const KeyValues& kv, std::string_view key) {
    const auto value = parse_uint(kv.require(key), key);
    if (value == 0) throw FormatError("field `" + std::string(key) + "` must be positive");
    return static_cast<std::size_t>(value);
}

// Offset of sample (band, row, col) in units of samples for a given interleave.
std::size_t file_index(Interleave il, std::size_t band, std::size_t row, std::size_t col, std::size_t width,
                       std::size_t height, std::size_t bands) {
    switch (il) {
        case Interleave::bsq: return (band * height + row) * width + col;
        case Interleave::bil: return (row * bands + band) * width + col;
        case Interleave::bip: return (row * width + col) * bands + band;
    }
    return 0;
}

template <typename T>
T load_scalar(const unsigned char* p, ByteOrder order) {
    std::array<unsigned char, sizeof(T)> bytes{};
    std::memcpy(bytes.data(), p, sizeof(T));
    const bool host_little = std::endian::native == std::endian::little;
    if ((order == ByteOrder::little) != host_little) std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

template <typename T>
void store_scalar(unsigned char* p, T value, ByteOrder order) {
    std::array<unsigned char, sizeof(T)> bytes{};
    std::memcpy(bytes.data(), &value, sizeof(T));
    const bool host_little = std::endian::native == std::endian::little;
    if ((order == ByteOrder::little) != host_little) std::reverse(bytes.begin(), bytes.end());
    std::memcpy(p, bytes.data(), sizeof(T));
}

double load_sample(const unsigned char* p, SampleType type, ByteOrder order) {
    switch (type) {
        case SampleType::u8: return *p;
        case SampleType::i16: return load_scalar<std::int16_t>(p, order);
        case SampleType::u16: return load_scalar<std::uint16_t>(p, order);
        case SampleType::f32: return load_scalar<float>(p, order);
    }
    return 0.0;
}

template <typename T>
T checked_integer(double v) {
    if (v != std::floor(v) || v < static_cast<double>(std::numeric_limits<T>::min()) ||
        v > static_cast<double>(std::numeric_limits<T>::max())) {
        throw ContractError("sample " + std::to_string(v) + " is not representable in the target integer type");
    }
    return static_cast<T>(v);
}

void store_sample(unsigned char* p, double v, SampleType type, ByteOrder order) {
    switch (type) {
        case SampleType::u8: *p = checked_integer<std::uint8_t>(v); return;
        case SampleType::i16: store_scalar(p, checked_integer<std::int16_t>(v), order); return;
        case SampleType::u16: store_scalar(p, checked_integer<std::uint16_t>(v), order); return;
        case SampleType::f32: {
            const auto f = static_cast<float>(v);
            if (static_cast<double>(f) != v) {
                throw ContractError("sample " + std::to_string(v) + " is not exactly representable as f32");
            }
            store_scalar(p, f, order);
            return;
        }
    }
}

}  // namespace

EnviHeader parse_envi_header(std::string_view text) {
    const auto kv = KeyValues::parse(text);
    EnviHeader h;
    h.samples = positive_field(kv, "samples");
    h.lines = positive_field(kv, "lines");
    h.bands = positive_field(kv, "bands");

    const std::string il = to_lower(kv.require("interleave"));
    if (il == "bsq") {
        h.interleave = Interleave::bsq;
    } else if (il == "bil") {
        h.interleave = Interleave::bil;
    } else if (il == "bip") {
        h.interleave = Interleave::bip;
    } else {
        throw FormatError("field `interleave`: expected bsq, bil or bip, got `" + il + "`");
    }

    const auto code = parse_int(kv.require("data type"), "data type");
    switch (code) {
        case 1: h.data_type = SampleType::u8; break;
        case 2: h.data_type = SampleType::i16; break;
        case 4: h.data_type = SampleType::f32; break;
        case 12: h.data_type = SampleType::u16; break;
        default:
            throw UnsupportedFormatError("field `data type`: unsupported ENVI code " + std::to_string(code) +
                                         " (supported: 1, 2, 4, 12)");
    }

    if (auto bo = kv.find("byte order")) {
        const auto order = parse_int(*bo, "byte order");
        if (order != 0 && order != 1) throw FormatError("field `byte order`: expected 0 or 1");
        h.byte_order = static_cast<ByteOrder>(order);
    }
    if (auto off = kv.find("header offset")) h.header_offset = parse_uint(*off, "header offset");
    if (auto df = kv.find("data file")) h.data_file = trim(*df);
    return h;
}

std::filesystem::path resolve_data_file(const std::filesystem::path& header_path, const EnviHeader& header) {
    namespace fs = std::filesystem;
    if (!header.data_file.empty()) {
        fs::path p = header.data_file;
        if (p.is_relative()) p = header_path.parent_path() / p;
        if (!fs::exists(p)) throw IoError("data file named by header not found: " + p.string());
        return p;
    }
    fs::path stem = header_path;
    if (to_lower(stem.extension().string()) == ".hdr") stem.replace_extension();
    if (fs::exists(stem) && fs::is_regular_file(stem)) return stem;
    for (const char* ext : {".img", ".raw", ".dat", ".bsq", ".bil", ".bip"}) {
        fs::path candidate = stem;
        candidate += ext;
        if (fs::exists(candidate)) return candidate;
    }
    throw IoError("no data file found next to header " + header_path.string());
}

HyperCube decode_cube(std::span<const unsigned char> payload, const EnviHeader& header) {
    const std::size_t expected = header.payload_bytes();
    if (payload.size() != expected) {
        throw TruncationError("cube payload is " + std::to_string(payload.size()) + " bytes, expected " +
                                  std::to_string(expected),
                              expected, payload.size());
    }
    const std::size_t width = header.samples;
    const std::size_t height = header.lines;
    const std::size_t bands = header.bands;
    const std::size_t ss = sample_size(header.data_type);
    std::vector<double> values(width * height * bands);
    for (std::size_t b = 0; b < bands; ++b) {
        for (std::size_t r = 0; r < height; ++r) {
            for (std::size_t c = 0; c < width; ++c) {
                const std::size_t src = file_index(header.interleave, b, r, c, width, height, bands);
                values[(b * height + r) * width + c] =
                    load_sample(payload.data() + src * ss, header.data_type, header.byte_order);
            }
        }
    }
    return HyperCube(width, height, bands, std::move(values));
}

HyperCube load_cube(const std::filesystem::path& header_path) {
    EnviHeader header;
    try {
        header = parse_envi_header(read_text_file(header_path));
    } catch (const FormatError& e) {
        throw FormatError(header_path.string() + ": " + e.what());
    } catch (const UnsupportedFormatError& e) {
        throw UnsupportedFormatError(header_path.string() + ": " + e.what());
    }
    const auto data_path = resolve_data_file(header_path, header);
    auto bytes = read_binary_file(data_path);
    const std::size_t expected = header.header_offset + header.payload_bytes();
    if (bytes.size() != expected) {
        throw TruncationError(data_path.string() + ": file is " + std::to_string(bytes.size()) +
                                  " bytes, header declares " + std::to_string(expected),
                              expected, bytes.size());
    }
    return decode_cube(std::span<const unsigned char>(bytes).subspan(header.header_offset), header);
}

std::vector<unsigned char> encode_cube(const HyperCube& cube, const CubeWriteOptions& options) {
    const std::size_t width = cube.width();
    const std::size_t height = cube.height();
    const std::size_t bands = cube.n_bands();
    const std::size_t ss = sample_size(options.data_type);
    std::vector<unsigned char> payload(width * height * bands * ss);
    for (std::size_t b = 0; b < bands; ++b) {
        for (std::size_t r = 0; r < height; ++r) {
            for (std::size_t c = 0; c < width; ++c) {
                const std::size_t dst = file_index(options.interleave, b, r, c, width, height, bands);
                store_sample(payload.data() + dst * ss, cube.at(b, r, c), options.data_type, options.byte_order);
            }
        }
    }
    return payload;
}

std::string format_envi_header(const HyperCube& cube, const CubeWriteOptions& options, std::string_view data_file) {
    std::string out = "ENVI\n";
    out += "samples = " + std::to_string(cube.width()) + "\n";
    out += "lines = " + std::to_string(cube.height()) + "\n";
    out += "bands = " + std::to_string(cube.n_bands()) + "\n";
    out += "header offset = 0\n";
    out += "data type = " + std::to_string(static_cast<int>(options.data_type)) + "\n";
    out += "interleave = " + std::string(to_string(options.interleave)) + "\n";
    out += "byte order = " + std::to_string(static_cast<int>(options.byte_order)) + "\n";
    if (!data_file.empty()) out += "data file = " + std::string(data_file) + "\n";
    return out;
}

void write_cube(const HyperCube& cube, const std::filesystem::path& header_path, const CubeWriteOptions& options) {
    auto data_path = header_path;
    data_path.replace_extension(".raw");
    const auto payload = encode_cube(cube, options);
    write_file_atomic(data_path,
                      std::string_view(reinterpret_cast<const char*>(payload.data()), payload.size()));
    write_file_atomic(header_path, format_envi_header(cube, options, data_path.filename().string()));
}

}  // namespace hsbs
