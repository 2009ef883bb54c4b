#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace flavorbench::evidence {

inline constexpr const char* kEvidenceFile = "evidence.jsonl";
inline constexpr const char* kEvidenceManifestFile = "evidence_manifest.json";
inline constexpr std::size_t kMaxSnippetLength = 2000;

struct EvidenceRecord {
  std::string query_key;  // normalized
  std::string url;
  std::string host;
  std::string title;
  std::string snippet;     // truncated to kMaxSnippetLength
  std::string fetched_at;  // ISO-8601, written once at collection time
};

// Local, host-filtered store of search snippets. Collected offline; lookups
// never touch the network. Read-only (fully concurrent) at inference time.
class EvidenceCache {
 public:
  static EvidenceCache load(const std::filesystem::path& dir);

  void save(const std::filesystem::path& dir) const;

  // Records for the normalized key, capped at per_query_cap (0 = no cap).
  std::vector<EvidenceRecord> lookup(const std::string& query_text,
                                     std::size_t per_query_cap = 0) const;

  bool has_key(const std::string& query_key) const;
  void add_records(const std::string& query_key, std::vector<EvidenceRecord> records);
  void mark_failed(const std::string& query_key);

  std::size_t record_count() const;
  const std::vector<std::string>& allowed_hosts() const { return allowed_hosts_; }
  void set_allowed_hosts(std::vector<std::string> hosts) { allowed_hosts_ = std::move(hosts); }
  const std::map<std::string, std::string>& key_status() const { return key_status_; }

 private:
  std::map<std::string, std::vector<EvidenceRecord>> records_;  // key -> stored order
  std::map<std::string, std::string> key_status_;               // key -> "ok" | "failed"
  std::vector<std::string> allowed_hosts_;
};

}  // namespace flavorbench::evidence
