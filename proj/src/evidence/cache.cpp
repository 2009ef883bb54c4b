#include "flavorbench/evidence/cache.hpp"

#include "flavorbench/evidence/query.hpp"
#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"
#include "flavorbench/util/jsonl.hpp"

namespace flavorbench::evidence {

namespace fs = std::filesystem;

EvidenceCache EvidenceCache::load(const fs::path& dir) {
  EvidenceCache cache;
  const fs::path records_path = dir / kEvidenceFile;
  const fs::path manifest_path = dir / kEvidenceManifestFile;
  if (!fs::exists(records_path) && !fs::exists(manifest_path)) {
    return cache;  // empty cache
  }
  if (fs::exists(records_path)) {
    for_each_jsonl(records_path, [&](std::size_t line, const json& record) {
      try {
        EvidenceRecord entry;
        entry.query_key = record.at("query_key").get<std::string>();
        entry.url = record.at("url").get<std::string>();
        entry.host = record.at("host").get<std::string>();
        entry.title = record.at("title").get<std::string>();
        entry.snippet = record.at("snippet").get<std::string>();
        entry.fetched_at = record.at("fetched_at").get<std::string>();
        cache.records_[entry.query_key].push_back(std::move(entry));
      } catch (const json::exception& e) {
        throw DataError(records_path.string() + " line " + std::to_string(line) + ": " +
                        e.what());
      }
    });
  }
  if (fs::exists(manifest_path)) {
    try {
      const json manifest = json::parse(read_file(manifest_path));
      cache.allowed_hosts_ = manifest.value("allowed_hosts", std::vector<std::string>{});
      if (manifest.contains("keys")) {
        for (const auto& [key, status] : manifest["keys"].items()) {
          cache.key_status_[key] = status.get<std::string>();
        }
      }
    } catch (const json::exception& e) {
      throw DataError("invalid evidence manifest: " + std::string(e.what()));
    }
  }
  return cache;
}

void EvidenceCache::save(const fs::path& dir) const {
  ensure_directory(dir);
  std::vector<json> lines;
  for (const auto& [key, key_records] : records_) {
    for (const auto& record : key_records) {
      lines.push_back({{"query_key", record.query_key},
                       {"url", record.url},
                       {"host", record.host},
                       {"title", record.title},
                       {"snippet", record.snippet},
                       {"fetched_at", record.fetched_at}});
    }
  }
  write_jsonl(dir / kEvidenceFile, lines);

  json manifest;
  manifest["allowed_hosts"] = allowed_hosts_;
  manifest["record_count"] = record_count();
  json keys = json::object();
  for (const auto& [key, status] : key_status_) keys[key] = status;
  manifest["keys"] = keys;
  atomic_write_file(dir / kEvidenceManifestFile, manifest.dump(2) + "\n");
}

std::vector<EvidenceRecord> EvidenceCache::lookup(const std::string& query_text,
                                                  std::size_t per_query_cap) const {
  const auto it = records_.find(normalize_query_key(query_text));
  if (it == records_.end()) return {};
  std::vector<EvidenceRecord> out = it->second;
  if (per_query_cap > 0 && out.size() > per_query_cap) out.resize(per_query_cap);
  return out;
}

bool EvidenceCache::has_key(const std::string& query_key) const {
  return key_status_.count(query_key) > 0;
}

void EvidenceCache::add_records(const std::string& query_key,
                                std::vector<EvidenceRecord> records) {
  key_status_[query_key] = "ok";
  auto& stored = records_[query_key];
  for (auto& record : records) stored.push_back(std::move(record));
  if (stored.empty()) records_.erase(query_key);
}

void EvidenceCache::mark_failed(const std::string& query_key) {
  key_status_[query_key] = "failed";
}

std::size_t EvidenceCache::record_count() const {
  std::size_t count = 0;
  for (const auto& [key, key_records] : records_) count += key_records.size();
  return count;
}

}  // namespace flavorbench::evidence
