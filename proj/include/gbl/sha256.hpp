#pragma once

#include <filesystem>
#include <string>

namespace gbl {

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(const std::string& bytes);

/// Whole file as bytes; throws Error if it cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace gbl
