#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pvshare::detail {

std::string_view trim(std::string_view text);

// Split on a delimiter, keeping empty fields.
std::vector<std::string_view> split(std::string_view text, char delimiter);

// Strict full-string numeric parses; nullopt on any leftover characters.
std::optional<double> parse_double(std::string_view text);
std::optional<long> parse_long(std::string_view text);

// Shortest decimal form that round-trips the exact double.
std::string format_double(double value);

// Reads one line, tolerating LF and CRLF endings. False at end of input.
bool next_line(std::string_view& input, std::string_view& line);

} // namespace pvshare::detail
