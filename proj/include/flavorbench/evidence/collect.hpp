#pragma once

#include <filesystem>
#include <memory>
#include <vector>

#include "flavorbench/evidence/cache.hpp"
#include "flavorbench/evidence/query.hpp"
#include "flavorbench/evidence/search_client.hpp"
#include "flavorbench/util/clock.hpp"

namespace flavorbench::evidence {

struct CollectOptions {
  std::vector<std::string> allowed_hosts = {"pubmed.ncbi.nlm.nih.gov", "arxiv.org"};
  std::size_t results_per_query = 5;
  double rate_limit = 2.0;  // client calls per second
  int max_attempts = 3;
  double backoff_base_seconds = 0.5;
  std::size_t parallelism = 1;
  bool retry_failed = false;  // when false, previously failed keys are skipped too
};

// Runs the queries through the client, filters results to the allowed hosts,
// truncates snippets, and persists everything under cache_dir. Keys already
// present in the manifest are skipped (idempotent reruns make zero client
// calls). A query that keeps failing is marked failed in the manifest and
// collection continues.
EvidenceCache collect(const std::vector<EvidenceQuery>& queries, SearchClient& client,
                      const std::filesystem::path& cache_dir, const CollectOptions& options,
                      const std::shared_ptr<Clock>& clock = std::make_shared<SystemClock>());

}  // namespace flavorbench::evidence
