#include "qwalk/text.hpp"
#include "qwalk/lattice.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace qwalk::text {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("failed to format double");
    }
    return std::string(buf.data(), end);
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view raw, std::string_view what) {
    const auto s = trim(raw);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ValidationError("invalid number for " + std::string(what) + ": '" + std::string(raw) + "'");
    }
    return v;
}

int parse_int(std::string_view raw, std::string_view what) {
    const auto s = trim(raw);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ValidationError("invalid integer for " + std::string(what) + ": '" + std::string(raw) + "'");
    }
    return v;
}

bool parse_bool(std::string_view raw, std::string_view what) {
    const auto s = trim(raw);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ValidationError("invalid boolean for " + std::string(what) + ": '" + std::string(raw) + "'");
}

}  // namespace qwalk::text
