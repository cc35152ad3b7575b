#pragma once

#include <filesystem>
#include <string>

namespace qaoabench {

// Shortest representation that parses back to the same double, so emitted
// CSV/JSON files round-trip byte-identically.
std::string format_double(double value);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace qaoabench
