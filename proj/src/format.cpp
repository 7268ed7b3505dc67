#include "ktrans/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "ktrans/errors.hpp"

namespace ktrans {

std::string format_shortest(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw IoError("failed to format double");
    return std::string(buf, ptr);
}

std::string format_digits(double v, int digits) {
    char buf[48];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
    if (ec != std::errc{}) throw IoError("failed to format double");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw IoError("malformed numeric field: '" + std::string(text) + "'");
    return value;
}

} // namespace ktrans
