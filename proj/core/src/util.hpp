#ifndef XPPKIT_SRC_UTIL_HPP
#define XPPKIT_SRC_UTIL_HPP

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xpp::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::vector<std::string_view> split_char(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// Locale-independent numeric parse; accepts integer, fixed and exponent
// notation. Rejects trailing junk.
inline std::optional<double> parse_number(std::string_view s) {
    double value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

// Canonical fixed-width-free number text used by every serializer.
inline std::string fmt_g15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i]))
            != std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

// Iterates non-empty, non-comment lines, reporting 1-based line numbers.
struct LineReader {
    std::string_view src;
    std::size_t pos = 0;
    long line_no = 0;

    // Returns the next raw line (may be blank or a comment).
    std::optional<std::string_view> next_raw() {
        if (pos >= src.size()) return std::nullopt;
        std::size_t end = src.find('\n', pos);
        std::string_view line = (end == std::string_view::npos)
                                    ? src.substr(pos)
                                    : src.substr(pos, end - pos);
        pos = (end == std::string_view::npos) ? src.size() : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    }

    // Skips blank lines and `#` comments.
    std::optional<std::string_view> next() {
        while (auto raw = next_raw()) {
            auto t = trim(*raw);
            if (t.empty() || t.front() == '#') continue;
            return t;
        }
        return std::nullopt;
    }
};

} // namespace xpp::detail

#endif
