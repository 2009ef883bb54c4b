#include "flavorbench/util/jsonl.hpp"

#include <fstream>
#include <string>

#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"

namespace flavorbench {

void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(std::size_t, const json&)>& fn) {
  std::ifstream in(path);
  if (!in) throw DataError("missing file: " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": malformed record: " + e.what());
    }
    fn(line_no, record);
  }
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::vector<json> records;
  for_each_jsonl(path, [&](std::size_t, const json& record) { records.push_back(record); });
  return records;
}

std::string dump_jsonl(const std::vector<json>& records) {
  std::string out;
  for (const auto& record : records) {
    out += record.dump();
    out += '\n';
  }
  return out;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<json>& records) {
  atomic_write_file(path, dump_jsonl(records));
}

}  // namespace flavorbench
