#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "flavorbench/util/http.hpp"

namespace flavorbench::evidence {

struct SearchResult {
  std::string url;
  std::string title;
  std::string snippet;
};

// Decouples collection from any vendor: one adapter for a commercial search
// API, one for fixture files.
class SearchClient {
 public:
  virtual ~SearchClient() = default;
  virtual std::vector<SearchResult> search(const std::string& query,
                                           std::size_t max_results) = 0;
};

// POST {"query": ..., "max_results": n} -> {"results": [{url,title,snippet}]}
class HttpSearchClient : public SearchClient {
 public:
  HttpSearchClient(HttpTransport& transport, std::string url, std::string api_key_env = "")
      : transport_(&transport), url_(std::move(url)), api_key_env_(std::move(api_key_env)) {}

  std::vector<SearchResult> search(const std::string& query, std::size_t max_results) override;

 private:
  HttpTransport* transport_;
  std::string url_;
  std::string api_key_env_;
};

// Answers from a fixture file mapping query text to results; counts calls so
// tests can assert cache idempotence. A query absent from the fixture yields
// no results.
class FixtureSearchClient : public SearchClient {
 public:
  static FixtureSearchClient from_file(const std::filesystem::path& path);
  explicit FixtureSearchClient(std::map<std::string, std::vector<SearchResult>> fixtures)
      : fixtures_(std::move(fixtures)) {}

  std::vector<SearchResult> search(const std::string& query, std::size_t max_results) override;
  std::size_t call_count() const { return call_count_; }

 private:
  std::map<std::string, std::vector<SearchResult>> fixtures_;  // keyed by normalized query
  std::size_t call_count_ = 0;
};

// Host component of a URL, lowercased ("" when unparseable).
std::string url_host(const std::string& url);

}  // namespace flavorbench::evidence
