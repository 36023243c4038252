#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace bnsum {

/// Reads a whole file, strips a leading UTF-8 byte order mark, and rejects
/// invalid UTF-8 with InvalidEncoding. Throws IoFailure if unreadable.
std::string read_utf8_file(const std::filesystem::path& path);

/// Writes bytes verbatim; throws IoFailure on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace bnsum
