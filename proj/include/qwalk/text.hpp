#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qwalk::text {

// Shortest representation that round-trips; locale independent.
std::string format_double(double v);

double parse_double(std::string_view s, std::string_view what);
int parse_int(std::string_view s, std::string_view what);
bool parse_bool(std::string_view s, std::string_view what);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

}  // namespace qwalk::text
