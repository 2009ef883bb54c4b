#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "flavorbench/util/clock.hpp"
#include "flavorbench/util/http.hpp"

namespace flavorbench::dataset {

// Documented endpoint shape:
//   GET {base}/food_ids  -> {"food_ids": [int, ...]}
//   GET {base}/food/{id} -> {"food_id": int, "name": str, "category": str,
//                            "molecules": [{"molecule_id": int, "name": str,
//                                           "smiles"?, "descriptors"?, "properties"?}]}
struct FetchOptions {
  std::string base_url;
  std::filesystem::path out_dir;
  double rate_limit = 2.0;  // requests per second; <= 0 disables throttling
  int max_attempts = 3;
  double backoff_base_seconds = 0.5;
};

struct FetchResult {
  std::size_t completed = 0;
  std::size_t skipped = 0;  // non-parseable responses, logged and skipped
  std::size_t already_present = 0;
};

// Crawls food pages into out_dir/raw/{id}.json (resumable: already-fetched
// ids are skipped), then assembles the three export files. HTTP failures are
// retried with exponential backoff; exhausted retries abort after writing a
// partial-progress manifest (fetch_manifest.json).
FetchResult fetch(HttpTransport& transport, const FetchOptions& options,
                  const std::shared_ptr<Clock>& clock = std::make_shared<SystemClock>());

}  // namespace flavorbench::dataset
