#include "flavorbench/evidence/collect.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <mutex>
#include <set>
#include <thread>

#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/log.hpp"
#include "flavorbench/util/rate_limiter.hpp"

namespace flavorbench::evidence {

namespace {

std::string iso_timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

bool host_allowed(const std::string& host, const std::vector<std::string>& allowed) {
  return std::find(allowed.begin(), allowed.end(), host) != allowed.end();
}

}  // namespace

EvidenceCache collect(const std::vector<EvidenceQuery>& queries, SearchClient& client,
                      const std::filesystem::path& cache_dir, const CollectOptions& options,
                      const std::shared_ptr<Clock>& clock) {
  EvidenceCache cache = EvidenceCache::load(cache_dir);
  cache.set_allowed_hosts(options.allowed_hosts);

  // Deduplicate and drop keys the cache already knows about.
  std::vector<EvidenceQuery> pending;
  {
    std::set<std::string> scheduled;
    for (const auto& query : queries) {
      const std::string key = normalize_query_key(query.text);
      if (scheduled.count(key)) continue;
      const bool known = cache.has_key(key);
      const bool failed = known && cache.key_status().at(key) == "failed";
      if (known && !(failed && options.retry_failed)) continue;
      scheduled.insert(key);
      pending.push_back(query);
    }
  }

  RateLimiter limiter(clock, options.rate_limit);
  std::mutex cache_mutex;  // single writer committing records

  const auto process = [&](const EvidenceQuery& query) {
    const std::string key = normalize_query_key(query.text);
    std::vector<SearchResult> results;
    bool ok = false;
    for (int attempt = 0; attempt < options.max_attempts && !ok; ++attempt) {
      if (attempt > 0) {
        clock->sleep_for(options.backoff_base_seconds * static_cast<double>(1 << (attempt - 1)));
      }
      limiter.acquire();
      try {
        results = client.search(query.text, options.results_per_query);
        ok = true;
      } catch (const std::exception& e) {
        log_warn("collect", "query '" + query.text + "' attempt " +
                                std::to_string(attempt + 1) + " failed: " + e.what());
      }
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    if (!ok) {
      cache.mark_failed(key);
      return;
    }
    std::vector<EvidenceRecord> records;
    const std::string fetched_at = iso_timestamp_now();
    for (const auto& result : results) {
      const std::string host = url_host(result.url);
      if (!host_allowed(host, options.allowed_hosts)) continue;
      EvidenceRecord record;
      record.query_key = key;
      record.url = result.url;
      record.host = host;
      record.title = result.title;
      record.snippet = result.snippet.substr(0, kMaxSnippetLength);
      record.fetched_at = fetched_at;
      records.push_back(std::move(record));
      if (records.size() >= options.results_per_query) break;
    }
    cache.add_records(key, std::move(records));
  };

  if (options.parallelism <= 1 || pending.size() <= 1) {
    for (const auto& query : pending) process(query);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const std::size_t worker_count = std::min(options.parallelism, pending.size());
    workers.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= pending.size()) return;
          process(pending[i]);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  cache.save(cache_dir);
  return cache;
}

}  // namespace flavorbench::evidence
