#include "text_util.hpp"

#include <charconv>

namespace pvshare::detail {

std::string_view trim(std::string_view text) {
    const auto* ws = " \t\r\n";
    const auto begin = text.find_first_not_of(ws);
    if (begin == std::string_view::npos)
        return {};
    const auto end = text.find_last_not_of(ws);
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split(std::string_view text, char delimiter) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        const auto pos = text.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(text.substr(start));
            return fields;
        }
        fields.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::optional<double> parse_double(std::string_view text) {
    text = trim(text);
    if (text.empty())
        return std::nullopt;
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto result = std::from_chars(text.data(), end, value);
    if (result.ec != std::errc{} || result.ptr != end)
        return std::nullopt;
    return value;
}

std::optional<long> parse_long(std::string_view text) {
    text = trim(text);
    if (text.empty())
        return std::nullopt;
    long value = 0;
    const auto* end = text.data() + text.size();
    const auto result = std::from_chars(text.data(), end, value);
    if (result.ec != std::errc{} || result.ptr != end)
        return std::nullopt;
    return value;
}

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

bool next_line(std::string_view& input, std::string_view& line) {
    if (input.empty())
        return false;
    const auto pos = input.find('\n');
    if (pos == std::string_view::npos) {
        line = input;
        input = {};
    } else {
        line = input.substr(0, pos);
        input.remove_prefix(pos + 1);
    }
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return true;
}

} // namespace pvshare::detail
