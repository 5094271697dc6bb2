#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "hsbs/coded_variable.hpp"

namespace fixtures {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::uint64_t counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("hsbs_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline hsbs::CodedVariable coded(std::vector<std::uint32_t> codes, std::uint32_t alphabet) {
    return hsbs::CodedVariable(std::move(codes), alphabet);
}

/// Random coded variable; the test's own engine keeps generators independent of hsbs::Rng.
inline hsbs::CodedVariable random_coded(std::mt19937& gen, std::size_t length, std::uint32_t alphabet) {
    std::uniform_int_distribution<std::uint32_t> pick(0, alphabet - 1);
    std::vector<std::uint32_t> codes(length);
    for (auto& c : codes) c = pick(gen);
    return hsbs::CodedVariable(std::move(codes), alphabet);
}

inline std::vector<std::uint32_t> as_vector(const hsbs::CodedVariable& v) {
    return {v.codes().begin(), v.codes().end()};
}

}  // namespace fixtures
