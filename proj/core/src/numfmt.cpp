#include "avgsearch/numfmt.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

namespace avgsearch {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_hex_double(double v) {
    char buf[64];
    int n = std::snprintf(buf, sizeof(buf), "%a", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

} // namespace avgsearch
