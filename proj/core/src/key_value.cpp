#include "hsbs/key_value.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hsbs/error.hpp"

namespace hsbs {

namespace {

std::string normalize_key(std::string_view raw) {
    std::string out;
    bool pending_space = false;
    for (char c : trim(raw)) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

}  // namespace

std::string trim(std::string_view s) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return std::string(s);
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

KeyValues KeyValues::parse(std::string_view text) {
    KeyValues kv;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#' || stripped.front() == ';') continue;
        if (line_no == 1 && to_lower(stripped) == "envi") continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw FormatError("line " + std::to_string(line_no) + ": expected `key = value`, got `" +
                              stripped + "`");
        }
        std::string key = normalize_key(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.empty()) throw FormatError("line " + std::to_string(line_no) + ": empty key");

        if (!value.empty() && value.front() == '{') {
            while (value.find('}') == std::string::npos) {
                std::string more;
                if (!std::getline(in, more)) {
                    throw FormatError("unterminated `{` in value of `" + key + "`");
                }
                ++line_no;
                value += ' ';
                value += trim(more);
            }
        }
        kv.entries_.insert_or_assign(std::move(key), std::move(value));
    }
    return kv;
}

KeyValues KeyValues::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

bool KeyValues::contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

std::optional<std::string> KeyValues::find(std::string_view key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

const std::string& KeyValues::require(std::string_view key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw FormatError("missing required field `" + std::string(key) + "`");
    return it->second;
}

long long parse_int(std::string_view text, std::string_view field) {
    const std::string t = trim(text);
    long long value = 0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (t.empty() || ec != std::errc{} || ptr != last) {
        throw FormatError("field `" + std::string(field) + "`: not an integer: `" + t + "`");
    }
    return value;
}

unsigned long long parse_uint(std::string_view text, std::string_view field) {
    const long long v = parse_int(text, field);
    if (v < 0) {
        throw FormatError("field `" + std::string(field) + "`: must be non-negative, got " +
                          std::to_string(v));
    }
    return static_cast<unsigned long long>(v);
}

double parse_double(std::string_view text, std::string_view field) {
    const std::string t = trim(text);
    // strtod accepts "inf"/"nan" and hex floats, which config files should not need.
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(t, &consumed);
    } catch (const std::exception&) {
        consumed = 0;
    }
    if (t.empty() || consumed != t.size() || !std::isfinite(value)) {
        throw FormatError("field `" + std::string(field) + "`: not a finite number: `" + t + "`");
    }
    return value;
}

bool parse_bool(std::string_view text, std::string_view field) {
    const std::string t = to_lower(trim(text));
    if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
    if (t == "0" || t == "false" || t == "no" || t == "off") return false;
    throw FormatError("field `" + std::string(field) + "`: not a boolean: `" + t + "`");
}

}  // namespace hsbs
