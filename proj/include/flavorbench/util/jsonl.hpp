#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "json.hpp"

namespace flavorbench {

using json = nlohmann::json;

// Parses one JSON object per line; blank lines are skipped. Parse failures
// throw DataError naming the file and 1-based line number.
std::vector<json> read_jsonl(const std::filesystem::path& path);

void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(std::size_t line, const json&)>& fn);

// Serializes records one per line (compact dump; nlohmann orders keys
// lexicographically, which keeps output byte-stable). Atomic write.
void write_jsonl(const std::filesystem::path& path, const std::vector<json>& records);

std::string dump_jsonl(const std::vector<json>& records);

}  // namespace flavorbench
