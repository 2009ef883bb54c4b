#include "flavorbench/dataset/fetch.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flavorbench/dataset/ingest.hpp"
#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"
#include "flavorbench/util/jsonl.hpp"
#include "flavorbench/util/log.hpp"
#include "flavorbench/util/rate_limiter.hpp"

namespace flavorbench::dataset {

namespace fs = std::filesystem;

namespace {

// Retries transport failures and 429/5xx with exponential backoff.
HttpResponse get_with_retries(HttpTransport& transport, const std::string& url,
                              const FetchOptions& options, RateLimiter& limiter,
                              Clock& clock) {
  HttpResponse response;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    if (attempt > 0) {
      clock.sleep_for(options.backoff_base_seconds * static_cast<double>(1 << (attempt - 1)));
    }
    limiter.acquire();
    response = transport.get(url);
    if (response.status >= 200 && response.status < 300) return response;
    if (response.status >= 400 && response.status < 500 && response.status != 429) {
      break;  // client errors other than throttling are not retryable
    }
  }
  throw ExternalServiceError("GET " + url + " failed after " +
                             std::to_string(options.max_attempts) +
                             " attempts (last status " + std::to_string(response.status) + ")");
}

void write_manifest(const fs::path& out_dir, const std::vector<std::int64_t>& completed,
                    const std::vector<std::int64_t>& skipped,
                    const std::vector<std::int64_t>& pending, bool aborted) {
  json manifest;
  manifest["completed"] = completed;
  manifest["skipped"] = skipped;
  manifest["pending"] = pending;
  manifest["aborted"] = aborted;
  atomic_write_file(out_dir / "fetch_manifest.json", manifest.dump(2) + "\n");
}

void assemble_export(const fs::path& out_dir, const std::vector<std::int64_t>& completed) {
  std::vector<json> food_lines;
  std::map<std::int64_t, json> molecules;  // id -> record, first occurrence wins
  std::vector<json> association_lines;

  std::vector<std::int64_t> ordered = completed;
  std::sort(ordered.begin(), ordered.end());
  for (const auto food_id : ordered) {
    const json page = json::parse(read_file(out_dir / "raw" / (std::to_string(food_id) + ".json")));
    json food;
    food["food_id"] = page.at("food_id");
    food["name"] = page.at("name");
    food["category"] = page.at("category");
    std::set<std::int64_t> molecule_ids;
    for (const auto& molecule : page.at("molecules")) {
      const auto molecule_id = molecule.at("molecule_id").get<std::int64_t>();
      molecule_ids.insert(molecule_id);
      if (!molecules.count(molecule_id)) {
        json record;
        record["molecule_id"] = molecule_id;
        record["name"] = molecule.at("name");
        record["smiles"] = molecule.value("smiles", json(nullptr));
        record["descriptors"] = molecule.value("descriptors", json::array());
        record["properties"] = molecule.value("properties", json::object());
        molecules.emplace(molecule_id, std::move(record));
      }
      association_lines.push_back({{"food_id", food_id}, {"molecule_id", molecule_id}});
    }
    food["molecule_ids"] = molecule_ids;
    food_lines.push_back(std::move(food));
  }

  std::vector<json> molecule_lines;
  for (auto& [id, record] : molecules) molecule_lines.push_back(std::move(record));

  write_jsonl(out_dir / kFoodsFile, food_lines);
  write_jsonl(out_dir / kMoleculesFile, molecule_lines);
  write_jsonl(out_dir / kAssociationsFile, association_lines);
}

bool looks_like_food_page(const json& page) {
  return page.is_object() && page.contains("food_id") && page.contains("name") &&
         page.contains("category") && page.contains("molecules") &&
         page["molecules"].is_array();
}

}  // namespace

FetchResult fetch(HttpTransport& transport, const FetchOptions& options,
                  const std::shared_ptr<Clock>& clock) {
  ensure_directory(options.out_dir / "raw");
  RateLimiter limiter(clock, options.rate_limit);

  std::vector<std::int64_t> ids;
  {
    const auto response =
        get_with_retries(transport, options.base_url + "/food_ids", options, limiter, *clock);
    json listing;
    try {
      listing = json::parse(response.body);
      ids = listing.at("food_ids").get<std::vector<std::int64_t>>();
    } catch (const json::exception& e) {
      throw ExternalServiceError(std::string("non-parseable food_ids response: ") + e.what());
    }
  }
  std::sort(ids.begin(), ids.end());

  FetchResult result;
  std::vector<std::int64_t> completed;
  std::vector<std::int64_t> skipped;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto food_id = ids[i];
    const fs::path raw_path = options.out_dir / "raw" / (std::to_string(food_id) + ".json");
    if (fs::exists(raw_path)) {
      ++result.already_present;
      completed.push_back(food_id);
      continue;
    }
    HttpResponse response;
    try {
      response = get_with_retries(
          transport, options.base_url + "/food/" + std::to_string(food_id), options, limiter,
          *clock);
    } catch (const ExternalServiceError&) {
      std::vector<std::int64_t> pending(ids.begin() + static_cast<std::ptrdiff_t>(i), ids.end());
      write_manifest(options.out_dir, completed, skipped, pending, /*aborted=*/true);
      throw;
    }
    json page;
    try {
      page = json::parse(response.body);
    } catch (const json::parse_error&) {
      page = json(nullptr);
    }
    if (!looks_like_food_page(page)) {
      log_warn("fetch", "skipping non-parseable record for food " + std::to_string(food_id));
      skipped.push_back(food_id);
      ++result.skipped;
      continue;
    }
    atomic_write_file(raw_path, page.dump() + "\n");
    completed.push_back(food_id);
    ++result.completed;
  }

  write_manifest(options.out_dir, completed, skipped, {}, /*aborted=*/false);
  assemble_export(options.out_dir, completed);
  return result;
}

}  // namespace flavorbench::dataset
