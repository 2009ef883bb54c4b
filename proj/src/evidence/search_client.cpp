#include "flavorbench/evidence/search_client.hpp"

#include <cstdlib>

#include "flavorbench/evidence/query.hpp"
#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"
#include "flavorbench/util/jsonl.hpp"
#include "flavorbench/util/text.hpp"

namespace flavorbench::evidence {

std::string url_host(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return "";
  const auto host_start = scheme_end + 3;
  const auto host_end = url.find_first_of("/:?#", host_start);
  return lower_ascii(url.substr(host_start, host_end == std::string::npos
                                                ? std::string::npos
                                                : host_end - host_start));
}

std::vector<SearchResult> HttpSearchClient::search(const std::string& query,
                                                   std::size_t max_results) {
  json body;
  body["query"] = query;
  body["max_results"] = max_results;
  HttpHeaders headers;
  if (!api_key_env_.empty()) {
    const char* key = std::getenv(api_key_env_.c_str());
    headers["X-Api-Key"] = key != nullptr ? key : "";
  }
  const HttpResponse response = transport_->post(url_, headers, body.dump());
  if (response.status != 200) {
    throw ExternalServiceError("search endpoint " + url_ + " failed (status " +
                               std::to_string(response.status) + ")");
  }
  std::vector<SearchResult> results;
  try {
    const json doc = json::parse(response.body);
    for (const auto& entry : doc.at("results")) {
      results.push_back({entry.at("url").get<std::string>(),
                         entry.value("title", ""),
                         entry.value("snippet", "")});
    }
  } catch (const json::exception& e) {
    throw ExternalServiceError(std::string("search response schema mismatch: ") + e.what());
  }
  return results;
}

FixtureSearchClient FixtureSearchClient::from_file(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw DataError("malformed search fixture " + path.string() + ": " + e.what());
  }
  std::map<std::string, std::vector<SearchResult>> fixtures;
  try {
    for (const auto& [query, results] : doc.items()) {
      std::vector<SearchResult> parsed;
      for (const auto& entry : results) {
        parsed.push_back({entry.at("url").get<std::string>(),
                          entry.value("title", ""),
                          entry.value("snippet", "")});
      }
      fixtures[normalize_query_key(query)] = std::move(parsed);
    }
  } catch (const json::exception& e) {
    throw DataError("invalid search fixture " + path.string() + ": " + e.what());
  }
  return FixtureSearchClient(std::move(fixtures));
}

std::vector<SearchResult> FixtureSearchClient::search(const std::string& query,
                                                      std::size_t max_results) {
  ++call_count_;
  const auto it = fixtures_.find(normalize_query_key(query));
  if (it == fixtures_.end()) return {};
  std::vector<SearchResult> results = it->second;
  if (results.size() > max_results) results.resize(max_results);
  return results;
}

}  // namespace flavorbench::evidence
