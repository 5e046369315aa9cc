#pragma once

#include <string>

namespace avgsearch {

// Write-temp-then-rename so readers never observe a half-written file.
void write_text_atomic(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

} // namespace avgsearch
