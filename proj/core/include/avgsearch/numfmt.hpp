#pragma once

#include <string>

namespace avgsearch {

// Shortest decimal that round-trips the exact double (std::to_chars).
std::string format_double(double v);

// printf %a hex float; parses back bit-exactly with strtod.
std::string format_hex_double(double v);

} // namespace avgsearch
