#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace hsbs {

/// Flat `key = value` text, as used by ENVI headers and run/synthetic configs.
///
/// Keys are trimmed and lower-cased, inner whitespace collapsed to one space
/// ("data  type" == "data type"). Values are trimmed; a value opening with `{`
/// may continue over several lines until the matching `}`. Blank lines and
/// lines starting with `#` or `;` are skipped. A line holding only `ENVI` is
/// accepted as a magic marker. Later duplicates override earlier ones.
class KeyValues {
public:
    static KeyValues parse(std::string_view text);
    static KeyValues load(const std::filesystem::path& path);

    bool contains(std::string_view key) const;
    std::optional<std::string> find(std::string_view key) const;
    /// Throws FormatError naming the key when absent.
    const std::string& require(std::string_view key) const;

    const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }

private:
    std::map<std::string, std::string, std::less<>> entries_;
};

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Strict scalar parsers; `field` names the offending entry in the FormatError.
long long parse_int(std::string_view text, std::string_view field);
unsigned long long parse_uint(std::string_view text, std::string_view field);
double parse_double(std::string_view text, std::string_view field);
bool parse_bool(std::string_view text, std::string_view field);

}  // namespace hsbs
