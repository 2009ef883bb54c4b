#pragma once

#include <filesystem>
#include <string>

namespace flavorbench {

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temp file then renames, so partially written outputs
// never clobber a good file.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

void ensure_directory(const std::filesystem::path& dir);

}  // namespace flavorbench
